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

#ifndef KATAN_PARAMS_H_
#define KATAN_PARAMS_H_

#include <array>
#include <string>
#include <string_view>

namespace katan {

inline constexpr int kRounds = 254;
inline constexpr int kKeyBits = 80;

enum class Family { kKatan, kKtantan };

std::string_view FamilyName(Family family);

// Static description of one of the six cipher variants. Tap positions index
// into L1 (x1..x5) and L2 (y1..y6); x1 and y1 are always the top bits.
struct CipherParams {
  Family family = Family::kKatan;
  int block_bits = 32;
  int l1_bits = 13;
  int l2_bits = 19;
  std::array<int, 5> taps_x{};
  std::array<int, 6> taps_y{};
  int steps_per_round = 1;
  int rounds = kRounds;

  // Lowercase variant name, e.g. "katan32" or "ktantan64".
  std::string name() const;

  friend bool operator==(const CipherParams&, const CipherParams&) = default;
};

// Throws InvalidVariantError unless block_bits is 32, 48 or 64.
CipherParams VariantParams(Family family, int block_bits);

// Accepts "katan32", "KTANTAN48", and the alternative spelling "katantan64".
// Throws InvalidVariantError for anything else.
CipherParams ParseVariant(std::string_view name);

// All six variants, KATAN first, ascending block size.
const std::array<CipherParams, 6>& AllVariants();

}  // namespace katan

#endif  // KATAN_PARAMS_H_
