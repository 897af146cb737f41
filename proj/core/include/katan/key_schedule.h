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

#ifndef KATAN_KEY_SCHEDULE_H_
#define KATAN_KEY_SCHEDULE_H_

#include <array>
#include <bitset>
#include <cstdint>

#include "katan/params.h"
#include "katan/types.h"

namespace katan {

struct SubkeyPair {
  bool ka = false;
  bool kb = false;
  friend bool operator==(const SubkeyPair&, const SubkeyPair&) = default;
};

// One (ka, kb) pair per round.
using SubkeyStream = std::array<SubkeyPair, kRounds>;

inline constexpr int kExpandedKeyBits = 2 * kRounds;

// KATAN key register output k_0..k_507: k_i is key bit i for i < 80, then
// k_i = k_{i-80} ^ k_{i-61} ^ k_{i-50} ^ k_{i-13}.
std::bitset<kExpandedKeyBits> ExpandKatanKey(const Key80& key);

// Round r uses (k_{2r}, k_{2r+1}).
SubkeyStream KatanSubkeys(const Key80& key);

// Key-bit indices selected in one KTANTAN round.
struct KeyBitSelection {
  uint8_t ka_index = 0;
  uint8_t kb_index = 0;
};

// The KTANTAN selection network depends only on the round counter, never on
// the key, so it reduces to a fixed table of key-bit indices.
const std::array<KeyBitSelection, kRounds>& KtantanSelection();

// KTANTAN leaves the key untouched and multiplexes subkey bits out of it.
SubkeyStream KtantanSubkeys(const Key80& key);

SubkeyStream Subkeys(Family family, const Key80& key);

}  // namespace katan

#endif  // KATAN_KEY_SCHEDULE_H_
