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

#include "katan/key_schedule.h"

#include "katan/round_counter.h"

namespace katan {
namespace {

std::array<KeyBitSelection, kRounds> ComputeKtantanSelection() {
  std::array<KeyBitSelection, kRounds> table{};
  const auto& states = RoundCounterStates();
  for (int r = 0; r < kRounds; ++r) {
    const unsigned t = states[r];
    auto bit = [t](int i) { return (t >> i) & 1u; };
    // a_w is bit T7T6T5T4 of the 16-bit key word w.
    const unsigned row = t >> 4;
    auto a = [row](unsigned word) { return static_cast<uint8_t>(16 * word + row); };

    KeyBitSelection& sel = table[r];
    if (!bit(3) && !bit(2)) {
      sel.ka_index = a(0);
    } else {
      sel.ka_index = a(1 + (t & 3u));  // MUX over a4a3a2a1 by T1T0
    }
    if (!bit(3) && bit(2)) {
      sel.kb_index = a(4);
    } else {
      sel.kb_index = a(~t & 3u);  // MUX over a3a2a1a0 by !T1!T0
    }
  }
  return table;
}

}  // namespace

std::bitset<kExpandedKeyBits> ExpandKatanKey(const Key80& key) {
  std::bitset<kExpandedKeyBits> k;
  for (int i = 0; i < kKeyBits; ++i) k[i] = key.bit(i);
  for (int i = kKeyBits; i < kExpandedKeyBits; ++i) {
    k[i] = k[i - 80] ^ k[i - 61] ^ k[i - 50] ^ k[i - 13];
  }
  return k;
}

SubkeyStream KatanSubkeys(const Key80& key) {
  // 80-bit LFSR in two words; bit 0 of `lo` is the oldest bit k_{i-80}.
  uint64_t lo = key.low();
  uint64_t hi = key.high();
  SubkeyStream stream;
  for (int r = 0; r < kRounds; ++r) {
    stream[r] = {static_cast<bool>(lo & 1), static_cast<bool>((lo >> 1) & 1)};
    for (int s = 0; s < 2; ++s) {
      // Offsets from the oldest bit: 0, 19, 30, 67.
      const uint64_t fb =
          (lo ^ (lo >> 19) ^ (lo >> 30) ^ (hi >> (67 - 64))) & 1;
      lo = (lo >> 1) | ((hi & 1) << 63);
      hi = (hi >> 1) | (fb << 15);
    }
  }
  return stream;
}

const std::array<KeyBitSelection, kRounds>& KtantanSelection() {
  static const std::array<KeyBitSelection, kRounds> table =
      ComputeKtantanSelection();
  return table;
}

SubkeyStream KtantanSubkeys(const Key80& key) {
  const auto& table = KtantanSelection();
  SubkeyStream stream;
  for (int r = 0; r < kRounds; ++r) {
    stream[r] = {key.bit(table[r].ka_index), key.bit(table[r].kb_index)};
  }
  return stream;
}

SubkeyStream Subkeys(Family family, const Key80& key) {
  return family == Family::kKatan ? KatanSubkeys(key) : KtantanSubkeys(key);
}

}  // namespace katan
