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

#include <string>

#include "katan/errors.h"
#include "katan/round_counter.h"

namespace katan {
namespace {

// Fa/Fb over raw register words; only bit 0 of the result is meaningful.
inline uint64_t FaBits(uint64_t l1, const CipherParams& p, uint64_t ir,
                       uint64_t ka) {
  const auto& x = p.taps_x;
  return (l1 >> x[0]) ^ (l1 >> x[1]) ^ ((l1 >> x[2]) & (l1 >> x[3])) ^
         ((l1 >> x[4]) & ir) ^ ka;
}

inline uint64_t FbBits(uint64_t l2, const CipherParams& p, uint64_t kb) {
  const auto& y = p.taps_y;
  return (l2 >> y[0]) ^ (l2 >> y[1]) ^ ((l2 >> y[2]) & (l2 >> y[3])) ^
         ((l2 >> y[4]) & (l2 >> y[5])) ^ kb;
}

struct Registers {
  uint64_t l1;
  uint64_t l2;
};

inline void StepRegisters(Registers& r, const CipherParams& p, uint64_t ir,
                          uint64_t ka, uint64_t kb) {
  const uint64_t fa = FaBits(r.l1, p, ir, ka) & 1;
  const uint64_t fb = FbBits(r.l2, p, kb) & 1;
  r.l1 = ((r.l1 << 1) | fb) & LowMask(p.l1_bits);
  r.l2 = ((r.l2 << 1) | fa) & LowMask(p.l2_bits);
}

// Shifts right and recomputes the discarded top bits. Relies on x1 and y1
// being the top positions, so every other tap survives the shift.
inline void UnstepRegisters(Registers& r, const CipherParams& p, uint64_t ir,
                            uint64_t ka, uint64_t kb) {
  const uint64_t fa = r.l2 & 1;
  const uint64_t fb = r.l1 & 1;
  uint64_t l1 = r.l1 >> 1;
  uint64_t l2 = r.l2 >> 1;
  const auto& x = p.taps_x;
  const auto& y = p.taps_y;
  const uint64_t top1 = (fa ^ (l1 >> x[1]) ^ ((l1 >> x[2]) & (l1 >> x[3])) ^
                         ((l1 >> x[4]) & ir) ^ ka) & 1;
  const uint64_t top2 = (fb ^ (l2 >> y[1]) ^ ((l2 >> y[2]) & (l2 >> y[3])) ^
                         ((l2 >> y[4]) & (l2 >> y[5])) ^ kb) & 1;
  r.l1 = l1 | (top1 << x[0]);
  r.l2 = l2 | (top2 << y[0]);
}

void RequireFits(const CipherState& state, const CipherParams& params) {
  if (!state.Fits(params)) {
    throw InvalidBlockError(
        "state registers are " + std::to_string(state.l1_bits()) + "/" +
        std::to_string(state.l2_bits()) + " bits, " + params.name() +
        " needs " + std::to_string(params.l1_bits) + "/" +
        std::to_string(params.l2_bits));
  }
}

void RequireWidth(const Block& block, const CipherParams& params) {
  if (block.width() != params.block_bits) {
    throw InvalidBlockError(params.name() + " expects a " +
                            std::to_string(params.block_bits) +
                            "-bit block, got " +
                            std::to_string(block.width()) + " bits");
  }
}

}  // namespace

bool Fa(const CipherState& state, const CipherParams& params, bool ir,
        bool ka) {
  RequireFits(state, params);
  return FaBits(state.l1(), params, ir, ka) & 1;
}

bool Fb(const CipherState& state, const CipherParams& params, bool kb) {
  RequireFits(state, params);
  return FbBits(state.l2(), params, kb) & 1;
}

CipherState Step(const CipherState& state, const CipherParams& params,
                 bool ir, bool ka, bool kb) {
  RequireFits(state, params);
  Registers r{state.l1(), state.l2()};
  StepRegisters(r, params, ir, ka, kb);
  return CipherState(params, r.l1, r.l2);
}

CipherState Unstep(const CipherState& state, const CipherParams& params,
                   bool ir, bool ka, bool kb) {
  RequireFits(state, params);
  Registers r{state.l1(), state.l2()};
  UnstepRegisters(r, params, ir, ka, kb);
  return CipherState(params, r.l1, r.l2);
}

Block EncryptWithSubkeys(const Block& plaintext, const SubkeyStream& subkeys,
                         const CipherParams& params) {
  RequireWidth(plaintext, params);
  const IrSequence& ir = GetIrSequence();
  Registers r{plaintext.value() >> params.l2_bits,
              plaintext.value() & LowMask(params.l2_bits)};
  for (int round = 0; round < kRounds; ++round) {
    const SubkeyPair k = subkeys[round];
    for (int s = 0; s < params.steps_per_round; ++s) {
      StepRegisters(r, params, ir[round], k.ka, k.kb);
    }
  }
  return Block((r.l1 << params.l2_bits) | r.l2, params.block_bits);
}

Block DecryptWithSubkeys(const Block& ciphertext, const SubkeyStream& subkeys,
                         const CipherParams& params) {
  RequireWidth(ciphertext, params);
  const IrSequence& ir = GetIrSequence();
  Registers r{ciphertext.value() >> params.l2_bits,
              ciphertext.value() & LowMask(params.l2_bits)};
  for (int round = kRounds - 1; round >= 0; --round) {
    const SubkeyPair k = subkeys[round];
    for (int s = 0; s < params.steps_per_round; ++s) {
      UnstepRegisters(r, params, ir[round], k.ka, k.kb);
    }
  }
  return Block((r.l1 << params.l2_bits) | r.l2, params.block_bits);
}

Block EncryptBlock(const Block& plaintext, const Key80& key,
                   const CipherParams& params) {
  RequireWidth(plaintext, params);
  return EncryptWithSubkeys(plaintext, Subkeys(params.family, key), params);
}

Block DecryptBlock(const Block& ciphertext, const Key80& key,
                   const CipherParams& params) {
  RequireWidth(ciphertext, params);
  return DecryptWithSubkeys(ciphertext, Subkeys(params.family, key), params);
}

}  // namespace katan
