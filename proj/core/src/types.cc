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

#include "katan/types.h"

#include <string>

#include "katan/errors.h"

namespace katan {

void Key80::set_bit(int i, bool value) {
  if (i < 64) {
    const uint64_t mask = uint64_t{1} << i;
    low_ = value ? (low_ | mask) : (low_ & ~mask);
  } else {
    const auto mask = static_cast<uint16_t>(1u << (i - 64));
    high_ = static_cast<uint16_t>(value ? (high_ | mask) : (high_ & ~mask));
  }
}

Block::Block(uint64_t value, int width) : value_(value), width_(width) {
  if (width < 1 || width > 64) {
    throw InvalidBlockError("block width " + std::to_string(width) +
                            " outside 1..64");
  }
  if ((value & ~LowMask(width)) != 0) {
    throw InvalidBlockError("block value does not fit in " +
                            std::to_string(width) + " bits");
  }
}

CipherState::CipherState(const CipherParams& params)
    : l1_bits_(params.l1_bits), l2_bits_(params.l2_bits) {}

CipherState::CipherState(const CipherParams& params, uint64_t l1, uint64_t l2)
    : l1_bits_(params.l1_bits),
      l2_bits_(params.l2_bits),
      l1_(l1 & LowMask(params.l1_bits)),
      l2_(l2 & LowMask(params.l2_bits)) {}

CipherState CipherState::FromBlock(const Block& block,
                                   const CipherParams& params) {
  if (block.width() != params.block_bits) {
    throw InvalidBlockError(params.name() + " expects a " +
                            std::to_string(params.block_bits) +
                            "-bit block, got " +
                            std::to_string(block.width()) + " bits");
  }
  return CipherState(params, block.value() >> params.l2_bits, block.value());
}

Block CipherState::ToBlock() const {
  return Block((l1_ << l2_bits_) | l2_, l1_bits_ + l2_bits_);
}

}  // namespace katan
