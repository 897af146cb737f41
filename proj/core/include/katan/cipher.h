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

#ifndef KATAN_CIPHER_H_
#define KATAN_CIPHER_H_

#include "katan/key_schedule.h"
#include "katan/params.h"
#include "katan/types.h"

namespace katan {

// fa = L1[x1] ^ L1[x2] ^ L1[x3]L1[x4] ^ L1[x5]IR ^ ka
bool Fa(const CipherState& state, const CipherParams& params, bool ir, bool ka);

// fb = L2[y1] ^ L2[y2] ^ L2[y3]L2[y4] ^ L2[y5]L2[y6] ^ kb
bool Fb(const CipherState& state, const CipherParams& params, bool kb);

// One register update: both registers shift left by one, fa enters L2[0] and
// fb enters L1[0]. Throws InvalidBlockError if the state does not fit params.
CipherState Step(const CipherState& state, const CipherParams& params, bool ir,
                 bool ka, bool kb);

// Inverse of Step with the same (ir, ka, kb).
CipherState Unstep(const CipherState& state, const CipherParams& params,
                   bool ir, bool ka, bool kb);

// The round engine: 254 rounds of steps_per_round steps, every step of round
// r using (subkeys[r], IR[r]). Both families share it; they differ only in
// the stream passed in.
Block EncryptWithSubkeys(const Block& plaintext, const SubkeyStream& subkeys,
                         const CipherParams& params);
Block DecryptWithSubkeys(const Block& ciphertext, const SubkeyStream& subkeys,
                         const CipherParams& params);

// Throw InvalidBlockError when the block width is not params.block_bits.
Block EncryptBlock(const Block& plaintext, const Key80& key,
                   const CipherParams& params);
Block DecryptBlock(const Block& ciphertext, const Key80& key,
                   const CipherParams& params);

}  // namespace katan

#endif  // KATAN_CIPHER_H_
