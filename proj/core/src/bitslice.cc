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

#include "katan/bitslice.h"

#include <algorithm>
#include <string>

#include "katan/errors.h"
#include "katan/key_schedule.h"
#include "katan/round_counter.h"

namespace katan {
namespace {

constexpr int kMaxSteps = 3 * kRounds;
constexpr int kMaxL1 = 25;
constexpr int kMaxL2 = 39;

void RequireLanes(size_t lanes) {
  if (lanes < 1 || lanes > static_cast<size_t>(kMaxLanes)) {
    throw BatchShapeError("batch of " + std::to_string(lanes) +
                          " lanes, expected 1.." + std::to_string(kMaxLanes));
  }
}

}  // namespace

BitsliceBatch::BitsliceBatch(const CipherParams& params, int lanes,
                             std::vector<SliceWord> slices)
    : params_(params), lanes_(lanes), slices_(std::move(slices)) {
  RequireLanes(static_cast<size_t>(lanes));
  if (slices_.size() != static_cast<size_t>(params.block_bits)) {
    throw BatchShapeError(params.name() + " batch needs " +
                          std::to_string(params.block_bits) + " slices, got " +
                          std::to_string(slices_.size()));
  }
  const SliceWord lane_mask = LowMask(lanes);
  for (SliceWord& w : slices_) w &= lane_mask;
}

BitsliceBatch TransposeIn(std::span<const Block> blocks,
                          const CipherParams& params) {
  RequireLanes(blocks.size());
  std::vector<SliceWord> slices(params.block_bits, 0);
  for (size_t lane = 0; lane < blocks.size(); ++lane) {
    const Block& b = blocks[lane];
    if (b.width() != params.block_bits) {
      throw BatchShapeError("lane " + std::to_string(lane) + " holds a " +
                            std::to_string(b.width()) + "-bit block, " +
                            params.name() + " needs " +
                            std::to_string(params.block_bits));
    }
    for (int w = 0; w < params.block_bits; ++w) {
      slices[w] |= static_cast<SliceWord>(b.bit(w)) << lane;
    }
  }
  return BitsliceBatch(params, static_cast<int>(blocks.size()),
                       std::move(slices));
}

std::vector<Block> TransposeOut(const BitsliceBatch& batch) {
  const int width = batch.params().block_bits;
  std::vector<Block> blocks;
  blocks.reserve(batch.lanes());
  for (int lane = 0; lane < batch.lanes(); ++lane) {
    uint64_t value = 0;
    for (int w = 0; w < width; ++w) {
      value |= ((batch.slice(w) >> lane) & 1) << w;
    }
    blocks.emplace_back(value, width);
  }
  return blocks;
}

BitsliceKeyBatch MakeKeyBatch(std::span<const Key80> keys,
                              const CipherParams& params) {
  RequireLanes(keys.size());
  BitsliceKeyBatch batch;
  batch.params_ = params;
  batch.keys_.assign(keys.begin(), keys.end());

  std::array<SliceWord, kExpandedKeyBits> k{};
  for (size_t lane = 0; lane < keys.size(); ++lane) {
    for (int i = 0; i < kKeyBits; ++i) {
      k[i] |= static_cast<SliceWord>(keys[lane].bit(i)) << lane;
    }
  }
  if (params.family == Family::kKatan) {
    for (int i = kKeyBits; i < kExpandedKeyBits; ++i) {
      k[i] = k[i - 80] ^ k[i - 61] ^ k[i - 50] ^ k[i - 13];
    }
    for (int r = 0; r < kRounds; ++r) {
      batch.ka_[r] = k[2 * r];
      batch.kb_[r] = k[2 * r + 1];
    }
  } else {
    const auto& table = KtantanSelection();
    for (int r = 0; r < kRounds; ++r) {
      batch.ka_[r] = k[table[r].ka_index];
      batch.kb_[r] = k[table[r].kb_index];
    }
  }
  return batch;
}

BitsliceBatch BitslicedEncrypt(const BitsliceBatch& batch,
                               const BitsliceKeyBatch& keys) {
  const CipherParams& p = batch.params();
  if (batch.lanes() != keys.lanes()) {
    throw BatchShapeError("batch has " + std::to_string(batch.lanes()) +
                          " lanes but key batch has " +
                          std::to_string(keys.lanes()));
  }
  if (!(p == keys.params())) {
    throw BatchShapeError("batch is " + p.name() + " but keys are " +
                          keys.params().name());
  }

  // The registers slide down through these buffers: register bit i lives at
  // index base + i, and each step prepends the new LSB at base - 1.
  const int total_steps = kRounds * p.steps_per_round;
  std::array<SliceWord, kMaxL1 + kMaxSteps> l1{};
  std::array<SliceWord, kMaxL2 + kMaxSteps> l2{};
  for (int j = 0; j < p.l2_bits; ++j) l2[total_steps + j] = batch.slice(j);
  for (int i = 0; i < p.l1_bits; ++i) {
    l1[total_steps + i] = batch.slice(p.l2_bits + i);
  }

  const auto& x = p.taps_x;
  const auto& y = p.taps_y;
  const IrSequence& ir = GetIrSequence();
  int base = total_steps;
  for (int round = 0; round < kRounds; ++round) {
    const SliceWord ir_mask = ir[round] ? ~SliceWord{0} : 0;
    const SliceWord ka = keys.ka(round);
    const SliceWord kb = keys.kb(round);
    for (int s = 0; s < p.steps_per_round; ++s) {
      const SliceWord* a = &l1[base];
      const SliceWord* b = &l2[base];
      const SliceWord fa =
          a[x[0]] ^ a[x[1]] ^ (a[x[2]] & a[x[3]]) ^ (a[x[4]] & ir_mask) ^ ka;
      const SliceWord fb = b[y[0]] ^ b[y[1]] ^ (b[y[2]] & b[y[3]]) ^
                           (b[y[4]] & b[y[5]]) ^ kb;
      --base;
      l1[base] = fb;
      l2[base] = fa;
    }
  }

  std::vector<SliceWord> out(p.block_bits);
  for (int j = 0; j < p.l2_bits; ++j) out[j] = l2[j];
  for (int i = 0; i < p.l1_bits; ++i) out[p.l2_bits + i] = l1[i];
  return BitsliceBatch(p, batch.lanes(), std::move(out));
}

std::vector<Block> BitslicedEncryptBlocks(std::span<const Block> blocks,
                                          std::span<const Key80> keys,
                                          const CipherParams& params,
                                          int lanes) {
  RequireLanes(static_cast<size_t>(lanes));
  if (blocks.size() != keys.size()) {
    throw BatchShapeError(std::to_string(blocks.size()) + " blocks but " +
                          std::to_string(keys.size()) + " keys");
  }
  std::vector<Block> out;
  out.reserve(blocks.size());
  for (size_t at = 0; at < blocks.size(); at += lanes) {
    const size_t n = std::min(blocks.size() - at, static_cast<size_t>(lanes));
    const BitsliceBatch ct =
        BitslicedEncrypt(TransposeIn(blocks.subspan(at, n), params),
                         MakeKeyBatch(keys.subspan(at, n), params));
    for (const Block& b : TransposeOut(ct)) out.push_back(b);
  }
  return out;
}

}  // namespace katan
