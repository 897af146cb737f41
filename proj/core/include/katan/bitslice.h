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

#ifndef KATAN_BITSLICE_H_
#define KATAN_BITSLICE_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "katan/params.h"
#include "katan/types.h"

namespace katan {

// Bit-sliced batch encryption. A batch holds up to 64 independent blocks;
// slice word w carries block bit w of every lane, lane j at bit position j.
// Unused high lanes are zero and ignored on extraction.

using SliceWord = uint64_t;
inline constexpr int kMaxLanes = 64;

class BitsliceBatch {
 public:
  BitsliceBatch(const CipherParams& params, int lanes,
                std::vector<SliceWord> slices);

  const CipherParams& params() const { return params_; }
  int lanes() const { return lanes_; }
  std::span<const SliceWord> slices() const { return slices_; }
  SliceWord slice(int bit) const { return slices_[bit]; }

 private:
  CipherParams params_;
  int lanes_;
  std::vector<SliceWord> slices_;
};

// Per-lane keys plus their subkey streams in sliced form: bit j of ka(r) is
// lane j's ka in round r.
class BitsliceKeyBatch {
 public:
  const CipherParams& params() const { return params_; }
  int lanes() const { return static_cast<int>(keys_.size()); }
  std::span<const Key80> keys() const { return keys_; }
  SliceWord ka(int round) const { return ka_[round]; }
  SliceWord kb(int round) const { return kb_[round]; }

 private:
  friend BitsliceKeyBatch MakeKeyBatch(std::span<const Key80> keys,
                                       const CipherParams& params);
  CipherParams params_;
  std::vector<Key80> keys_;
  std::array<SliceWord, kRounds> ka_{};
  std::array<SliceWord, kRounds> kb_{};
};

// Throws BatchShapeError for 0 or more than kMaxLanes blocks, or a block
// whose width is not params.block_bits.
BitsliceBatch TransposeIn(std::span<const Block> blocks,
                          const CipherParams& params);
std::vector<Block> TransposeOut(const BitsliceBatch& batch);

// Runs the family's key schedule for every lane at once. Same lane limits as
// TransposeIn.
BitsliceKeyBatch MakeKeyBatch(std::span<const Key80> keys,
                              const CipherParams& params);

// Lane j of the result equals EncryptBlock(lane j, key j). Throws
// BatchShapeError when batch and keys disagree on lanes or variant.
BitsliceBatch BitslicedEncrypt(const BitsliceBatch& batch,
                               const BitsliceKeyBatch& keys);

// Encrypts any number of blocks `lanes` at a time. blocks and keys must have
// equal length.
std::vector<Block> BitslicedEncryptBlocks(std::span<const Block> blocks,
                                          std::span<const Key80> keys,
                                          const CipherParams& params,
                                          int lanes = kMaxLanes);

}  // namespace katan

#endif  // KATAN_BITSLICE_H_
