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

#include "katan/round_counter.h"

#include <set>
#include <string>

#include <gtest/gtest.h>

namespace katan {
namespace {

// Irregular-update table as published with the cipher, rounds 0..139.
constexpr const char* kPublishedIrPrefix =
    "1111111000" "1101010101" "1110110011" "0010100100" "0100011000"
    "1111000010" "0001010000" "0111110011" "1111010100" "0101010011"
    "0000110011" "1011111011" "1010010101" "1010011100";

TEST(IrSequenceTest, HasOneBitPerRound) {
  EXPECT_EQ(IrSequence::size(), 254);
  EXPECT_EQ(GetIrSequence().bits().size(), 254u);
}

TEST(IrSequenceTest, FirstBitIsSet) { EXPECT_TRUE(GetIrSequence()[0]); }

TEST(IrSequenceTest, MatchesPublishedTablePrefix) {
  const std::string want = kPublishedIrPrefix;
  std::string got;
  for (size_t r = 0; r < want.size(); ++r) got += GetIrSequence()[r] ? '1' : '0';
  EXPECT_EQ(got, want);
}

TEST(IrSequenceTest, Deterministic) {
  EXPECT_EQ(IrSequence(), IrSequence());
  EXPECT_EQ(IrSequence(), GetIrSequence());
}

TEST(RoundCounterTest, StatesAreDistinctAndNonzero) {
  const auto& states = RoundCounterStates();
  const std::set<int> distinct(states.begin(), states.end());
  EXPECT_EQ(distinct.size(), 254u);
  EXPECT_EQ(distinct.count(0), 0u);
}

// Walks the full orbit of x^8 + x^7 + x^5 + x^3 + 1 from the all-ones seed.
// A primitive polynomial visits all 255 nonzero states before repeating, so
// the 254 rounds never revisit a state.
TEST(RoundCounterTest, OrbitOfFeedbackPolynomialIsMaximal) {
  std::set<unsigned> seen;
  unsigned t = 0xFF;
  do {
    seen.insert(t);
    const unsigned fb = ((t >> 7) ^ (t >> 6) ^ (t >> 4) ^ (t >> 2)) & 1;
    t = ((t << 1) | fb) & 0xFF;
  } while (t != 0xFF && seen.size() < 300);
  EXPECT_EQ(seen.size(), 255u);
}

TEST(RoundCounterTest, IrIsCounterMsb) {
  const auto& states = RoundCounterStates();
  for (int r = 0; r < kRounds; ++r) {
    EXPECT_EQ(GetIrSequence()[r], ((states[r] >> 7) & 1) == 1) << r;
  }
}

}  // namespace
}  // namespace katan
