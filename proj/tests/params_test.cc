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

#include "katan/params.h"

#include <gtest/gtest.h>

#include "katan/errors.h"

namespace katan {
namespace {

TEST(VariantParamsTest, Katan32RegisterLengths) {
  const CipherParams p = VariantParams(Family::kKatan, 32);
  EXPECT_EQ(p.l1_bits, 13);
  EXPECT_EQ(p.l2_bits, 19);
  EXPECT_EQ(p.steps_per_round, 1);
}

TEST(VariantParamsTest, Katan48RegisterLengths) {
  const CipherParams p = VariantParams(Family::kKatan, 48);
  EXPECT_EQ(p.l1_bits, 19);
  EXPECT_EQ(p.l2_bits, 29);
  EXPECT_EQ(p.steps_per_round, 2);
}

TEST(VariantParamsTest, Katan64AppliesThreeSteps) {
  EXPECT_EQ(VariantParams(Family::kKatan, 64).steps_per_round, 3);
}

TEST(VariantParamsTest, InvariantsHoldForAllVariants) {
  for (const CipherParams& p : AllVariants()) {
    SCOPED_TRACE(p.name());
    EXPECT_EQ(p.l1_bits + p.l2_bits, p.block_bits);
    EXPECT_EQ(p.rounds, 254);
    EXPECT_EQ(p.steps_per_round, p.block_bits / 16 - 1);
    for (int x : p.taps_x) EXPECT_LT(x, p.l1_bits);
    for (int y : p.taps_y) EXPECT_LT(y, p.l2_bits);
    // The first taps read the bit about to be shifted out.
    EXPECT_EQ(p.taps_x[0], p.l1_bits - 1);
    EXPECT_EQ(p.taps_y[0], p.l2_bits - 1);
  }
}

TEST(VariantParamsTest, FamiliesShareRoundParameters) {
  for (int bits : {32, 48, 64}) {
    CipherParams katan = VariantParams(Family::kKatan, bits);
    CipherParams ktantan = VariantParams(Family::kKtantan, bits);
    ktantan.family = Family::kKatan;
    EXPECT_EQ(katan, ktantan);
  }
}

TEST(VariantParamsTest, RejectsUnsupportedBlockSize) {
  EXPECT_THROW(VariantParams(Family::kKatan, 16), InvalidVariantError);
  EXPECT_THROW(VariantParams(Family::kKtantan, 128), InvalidVariantError);
}

TEST(ParseVariantTest, AcceptsBothSpellings) {
  EXPECT_EQ(ParseVariant("katan48"), VariantParams(Family::kKatan, 48));
  EXPECT_EQ(ParseVariant("KTANTAN32"), VariantParams(Family::kKtantan, 32));
  EXPECT_EQ(ParseVariant("katantan64"), VariantParams(Family::kKtantan, 64));
  EXPECT_EQ(ParseVariant("ktantan64").name(), "ktantan64");
}

TEST(ParseVariantTest, RejectsUnknownNames) {
  EXPECT_THROW(ParseVariant("katan"), InvalidVariantError);
  EXPECT_THROW(ParseVariant("katan33"), InvalidVariantError);
  EXPECT_THROW(ParseVariant("present64"), InvalidVariantError);
  EXPECT_THROW(ParseVariant(""), InvalidVariantError);
}

}  // namespace
}  // namespace katan
