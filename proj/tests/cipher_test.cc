// Copyright 2026 The katan-kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "katan/cipher.h"

#include <random>
#include <unordered_set>

#include <gtest/gtest.h>

#include "katan/errors.h"
#include "katan/key_schedule.h"
#include "test_util.h"

namespace katan {
namespace {

using testing::LoadFixtures;
using testing::RandomBlock;
using testing::RandomKey;

const CipherParams& K32() {
  static const CipherParams p = VariantParams(Family::kKatan, 32);
  return p;
}

uint64_t Bits(std::initializer_list<int> positions) {
  uint64_t v = 0;
  for (int i : positions) v |= uint64_t{1} << i;
  return v;
}

// KATAN32 taps: x = {12, 7, 8, 5, 3}, y = {18, 7, 12, 10, 8, 3}.
TEST(FaTest, LinearTapsAndAndTerms) {
  auto fa = [](uint64_t l1, bool ir, bool ka) {
    return Fa(CipherState(K32(), l1, 0), K32(), ir, ka);
  };
  EXPECT_FALSE(fa(0, true, false));
  EXPECT_TRUE(fa(0, false, true));
  EXPECT_TRUE(fa(Bits({12}), false, false));
  EXPECT_FALSE(fa(Bits({12, 7}), false, false));
  EXPECT_FALSE(fa(Bits({8}), false, false));
  EXPECT_TRUE(fa(Bits({8, 5}), false, false));
  EXPECT_FALSE(fa(Bits({3}), false, false));
  EXPECT_TRUE(fa(Bits({3}), true, false));
  EXPECT_FALSE(fa(Bits({3}), true, true));
}

TEST(FbTest, LinearTapsAndAndTerms) {
  auto fb = [](uint64_t l2, bool kb) {
    return Fb(CipherState(K32(), 0, l2), K32(), kb);
  };
  EXPECT_FALSE(fb(0, false));
  EXPECT_TRUE(fb(0, true));
  EXPECT_TRUE(fb(Bits({18}), false));
  EXPECT_FALSE(fb(Bits({18, 7}), false));
  EXPECT_TRUE(fb(Bits({12, 10}), false));
  EXPECT_TRUE(fb(Bits({8, 3}), false));
  EXPECT_FALSE(fb(Bits({12, 10, 8, 3}), false));
  EXPECT_FALSE(fb(Bits({12, 8}), false));
}

TEST(StepTest, ZeroStateWithZeroKeyStaysZero) {
  const CipherState zero(K32());
  EXPECT_EQ(Step(zero, K32(), true, false, false), zero);
}

TEST(StepTest, KeyBitsEnterTheOppositeRegister) {
  const CipherState zero(K32());
  // fa (carrying ka) enters L2, fb (carrying kb) enters L1.
  EXPECT_EQ(Step(zero, K32(), false, true, false), CipherState(K32(), 0, 1));
  EXPECT_EQ(Step(zero, K32(), false, false, true), CipherState(K32(), 1, 0));
}

TEST(StepTest, ShiftsBothRegistersLeft) {
  std::mt19937_64 rng(11);
  for (const CipherParams& p : AllVariants()) {
    for (int i = 0; i < 100; ++i) {
      const CipherState s(p, rng(), rng());
      const bool ir = rng() & 1, ka = rng() & 1, kb = rng() & 1;
      const CipherState t = Step(s, p, ir, ka, kb);
      EXPECT_EQ(t.l1() >> 1, s.l1() & LowMask(p.l1_bits - 1));
      EXPECT_EQ(t.l2() >> 1, s.l2() & LowMask(p.l2_bits - 1));
      EXPECT_EQ(t.l1_bit(0), Fb(s, p, kb));
      EXPECT_EQ(t.l2_bit(0), Fa(s, p, ir, ka));
    }
  }
}

TEST(StepTest, UnstepInvertsStep) {
  std::mt19937_64 rng(12);
  for (const CipherParams& p : AllVariants()) {
    for (int i = 0; i < 1000; ++i) {
      const CipherState s(p, rng(), rng());
      const bool ir = rng() & 1, ka = rng() & 1, kb = rng() & 1;
      ASSERT_EQ(Unstep(Step(s, p, ir, ka, kb), p, ir, ka, kb), s);
      ASSERT_EQ(Step(Unstep(s, p, ir, ka, kb), p, ir, ka, kb), s);
    }
  }
}

TEST(StepTest, RejectsMismatchedState) {
  const CipherState s(VariantParams(Family::kKatan, 48));
  EXPECT_THROW(Step(s, K32(), false, false, false), InvalidBlockError);
  EXPECT_THROW(Fa(s, K32(), false, false), InvalidBlockError);
}

TEST(CipherStateTest, BlockLayout) {
  const Block b(0x89abcdef, 32);
  const CipherState s = CipherState::FromBlock(b, K32());
  EXPECT_EQ(s.l2(), 0x89abcdefu & LowMask(19));
  EXPECT_EQ(s.l1(), 0x89abcdefu >> 19);
  EXPECT_EQ(s.ToBlock(), b);
}

// Published all-ones-key, zero-plaintext vectors.
TEST(EncryptBlockTest, PublishedAnchors) {
  const Key80 ones = Key80::AllOnes();
  EXPECT_EQ(EncryptBlock(Block(0, 32), ones, K32()).value(), 0x7e1ff945u);
  EXPECT_EQ(
      EncryptBlock(Block(0, 48), ones, VariantParams(Family::kKatan, 48))
          .value(),
      0x4b7efcfb8659u);
  EXPECT_EQ(
      EncryptBlock(Block(0, 32), ones, VariantParams(Family::kKtantan, 32))
          .value(),
      0x22ea3988u);
}

TEST(EncryptBlockTest, MatchesReferenceModelFixtures) {
  const auto records = LoadFixtures();
  ASSERT_EQ(records.size(), 600u);
  for (const auto& r : records) {
    ASSERT_EQ(EncryptBlock(r.plaintext, r.key, r.params), r.ciphertext)
        << "line " << r.line;
    ASSERT_EQ(DecryptBlock(r.ciphertext, r.key, r.params), r.plaintext)
        << "line " << r.line;
  }
}

TEST(EncryptBlockTest, RoundTrip) {
  std::mt19937_64 rng(13);
  for (const CipherParams& p : AllVariants()) {
    for (int i = 0; i < 200; ++i) {
      const Key80 key = RandomKey(rng);
      const Block pt = RandomBlock(rng, p);
      ASSERT_EQ(DecryptBlock(EncryptBlock(pt, key, p), key, p), pt);
    }
  }
}

TEST(EncryptBlockTest, InjectiveUnderFixedKey) {
  std::mt19937_64 rng(14);
  const Key80 key = RandomKey(rng);
  std::unordered_set<uint64_t> seen;
  for (uint64_t v = 0; v < 5000; ++v) {
    seen.insert(EncryptBlock(Block(v, 32), key, K32()).value());
  }
  EXPECT_EQ(seen.size(), 5000u);
}

TEST(EncryptBlockTest, RejectsWrongWidth) {
  EXPECT_THROW(EncryptBlock(Block(0, 48), Key80(), K32()), InvalidBlockError);
  EXPECT_THROW(DecryptBlock(Block(0, 16), Key80(), K32()), InvalidBlockError);
}

TEST(BlockTest, RejectsBadShapes) {
  EXPECT_THROW(Block(0, 0), InvalidBlockError);
  EXPECT_THROW(Block(0, 65), InvalidBlockError);
  EXPECT_THROW(Block(uint64_t{1} << 32, 32), InvalidBlockError);
  EXPECT_NO_THROW(Block(~uint64_t{0}, 64));
}

// KATAN and KTANTAN differ only in where subkey bits come from.
TEST(FamilySeamTest, KtantanIsTheSharedEngineWithItsSelection) {
  std::mt19937_64 rng(15);
  for (int bits : {32, 48, 64}) {
    const CipherParams kt = VariantParams(Family::kKtantan, bits);
    CipherParams as_katan = kt;
    as_katan.family = Family::kKatan;
    for (int i = 0; i < 100; ++i) {
      const Key80 key = RandomKey(rng);
      const Block pt = RandomBlock(rng, kt);
      const SubkeyStream s = KtantanSubkeys(key);
      ASSERT_EQ(EncryptBlock(pt, key, kt),
                EncryptWithSubkeys(pt, s, as_katan));
    }
  }
}

TEST(FamilySeamTest, FamiliesDisagreeOnRandomKeys) {
  std::mt19937_64 rng(16);
  const Key80 key = RandomKey(rng);
  const Block pt(0x01234567, 32);
  EXPECT_NE(EncryptBlock(pt, key, K32()),
            EncryptBlock(pt, key, VariantParams(Family::kKtantan, 32)));
}

}  // namespace
}  // namespace katan
