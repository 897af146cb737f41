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

namespace katan {
namespace {

std::array<uint8_t, kRounds> ComputeCounterStates() {
  std::array<uint8_t, kRounds> states{};
  unsigned t = 0xFF;
  for (int r = 0; r < kRounds; ++r) {
    const unsigned feedback = ((t >> 7) ^ (t >> 6) ^ (t >> 4) ^ (t >> 2)) & 1;
    t = ((t << 1) | feedback) & 0xFF;
    states[r] = static_cast<uint8_t>(t);
  }
  return states;
}

}  // namespace

const std::array<uint8_t, kRounds>& RoundCounterStates() {
  static const std::array<uint8_t, kRounds> states = ComputeCounterStates();
  return states;
}

IrSequence::IrSequence() {
  const auto& states = RoundCounterStates();
  for (int r = 0; r < kRounds; ++r) bits_[r] = (states[r] >> 7) & 1;
}

const IrSequence& GetIrSequence() {
  static const IrSequence ir;
  return ir;
}

}  // namespace katan
