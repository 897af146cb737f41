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

#include <algorithm>
#include <cctype>
#include <string>

#include "katan/errors.h"

namespace katan {

std::string_view FamilyName(Family family) {
  return family == Family::kKatan ? "katan" : "ktantan";
}

std::string CipherParams::name() const {
  return std::string(FamilyName(family)) + std::to_string(block_bits);
}

CipherParams VariantParams(Family family, int block_bits) {
  CipherParams p;
  p.family = family;
  p.block_bits = block_bits;
  p.rounds = kRounds;
  switch (block_bits) {
    case 32:
      p.l1_bits = 13;
      p.l2_bits = 19;
      p.taps_x = {12, 7, 8, 5, 3};
      p.taps_y = {18, 7, 12, 10, 8, 3};
      p.steps_per_round = 1;
      break;
    case 48:
      p.l1_bits = 19;
      p.l2_bits = 29;
      p.taps_x = {18, 12, 15, 7, 6};
      p.taps_y = {28, 19, 21, 13, 15, 6};
      p.steps_per_round = 2;
      break;
    case 64:
      p.l1_bits = 25;
      p.l2_bits = 39;
      p.taps_x = {24, 15, 20, 11, 9};
      p.taps_y = {38, 25, 33, 21, 14, 9};
      p.steps_per_round = 3;
      break;
    default:
      throw InvalidVariantError("unsupported block size " +
                                std::to_string(block_bits) +
                                " (expected 32, 48 or 64)");
  }
  return p;
}

CipherParams ParseVariant(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  Family family;
  std::string_view rest = lower;
  if (rest.starts_with("katantan")) {
    family = Family::kKtantan;
    rest.remove_prefix(8);
  } else if (rest.starts_with("ktantan")) {
    family = Family::kKtantan;
    rest.remove_prefix(7);
  } else if (rest.starts_with("katan")) {
    family = Family::kKatan;
    rest.remove_prefix(5);
  } else {
    throw InvalidVariantError("unknown variant '" + std::string(name) + "'");
  }
  if (rest == "32") return VariantParams(family, 32);
  if (rest == "48") return VariantParams(family, 48);
  if (rest == "64") return VariantParams(family, 64);
  throw InvalidVariantError("unknown variant '" + std::string(name) + "'");
}

const std::array<CipherParams, 6>& AllVariants() {
  static const std::array<CipherParams, 6> variants = {
      VariantParams(Family::kKatan, 32),   VariantParams(Family::kKatan, 48),
      VariantParams(Family::kKatan, 64),   VariantParams(Family::kKtantan, 32),
      VariantParams(Family::kKtantan, 48), VariantParams(Family::kKtantan, 64),
  };
  return variants;
}

}  // namespace katan
