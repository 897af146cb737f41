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

#ifndef KATAN_ROUND_COUNTER_H_
#define KATAN_ROUND_COUNTER_H_

#include <array>
#include <bitset>
#include <cstdint>

#include "katan/params.h"

namespace katan {

// State of the 8-bit round counter LFSR (x^8 + x^7 + x^5 + x^3 + 1, seeded
// with all ones) for every round. The counter is clocked before each round,
// so entry r is the state after r + 1 clocks. All 254 states are distinct.
const std::array<uint8_t, kRounds>& RoundCounterStates();

// The irregular-update bit IR, one per round: the MSB of the round's counter
// state. Shared by all six variants.
class IrSequence {
 public:
  IrSequence();

  bool operator[](int round) const { return bits_[round]; }
  static constexpr int size() { return kRounds; }
  const std::bitset<kRounds>& bits() const { return bits_; }

  friend bool operator==(const IrSequence&, const IrSequence&) = default;

 private:
  std::bitset<kRounds> bits_;
};

const IrSequence& GetIrSequence();

}  // namespace katan

#endif  // KATAN_ROUND_COUNTER_H_
