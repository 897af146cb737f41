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

#ifndef KATAN_TYPES_H_
#define KATAN_TYPES_H_

#include <cstdint>

#include "katan/params.h"

namespace katan {

// An 80-bit key. Bit i carries weight 2^i of the canonical integer, so bits
// 0..63 live in low() and bits 64..79 in high().
class Key80 {
 public:
  constexpr Key80() = default;
  constexpr Key80(uint64_t low, uint16_t high) : low_(low), high_(high) {}

  static constexpr Key80 AllOnes() { return Key80(~uint64_t{0}, 0xFFFF); }

  constexpr uint64_t low() const { return low_; }
  constexpr uint16_t high() const { return high_; }

  constexpr bool bit(int i) const {
    return i < 64 ? (low_ >> i) & 1 : (high_ >> (i - 64)) & 1;
  }
  void set_bit(int i, bool value);

  constexpr Key80 operator^(const Key80& other) const {
    return Key80(low_ ^ other.low_, static_cast<uint16_t>(high_ ^ other.high_));
  }
  friend constexpr bool operator==(const Key80&, const Key80&) = default;

 private:
  uint64_t low_ = 0;
  uint16_t high_ = 0;
};

// A plaintext or ciphertext block of 1..64 bits in canonical integer form.
class Block {
 public:
  // Throws InvalidBlockError if width is outside 1..64 or value has bits set
  // at or above width.
  Block(uint64_t value, int width);

  uint64_t value() const { return value_; }
  int width() const { return width_; }
  bool bit(int i) const { return (value_ >> i) & 1; }

  friend bool operator==(const Block&, const Block&) = default;

 private:
  uint64_t value_;
  int width_;
};

// All-ones mask of the low `bits` bits; bits may be 0..64.
constexpr uint64_t LowMask(int bits) {
  return bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
}

// The live L1/L2 register pair. L2 holds the low block bits.
class CipherState {
 public:
  explicit CipherState(const CipherParams& params);
  CipherState(const CipherParams& params, uint64_t l1, uint64_t l2);

  // L2[j] = block bit j, L1[j] = block bit (|L2| + j).
  static CipherState FromBlock(const Block& block, const CipherParams& params);
  Block ToBlock() const;

  uint64_t l1() const { return l1_; }
  uint64_t l2() const { return l2_; }
  int l1_bits() const { return l1_bits_; }
  int l2_bits() const { return l2_bits_; }
  bool l1_bit(int i) const { return (l1_ >> i) & 1; }
  bool l2_bit(int i) const { return (l2_ >> i) & 1; }

  // True when the register widths match params.
  bool Fits(const CipherParams& params) const {
    return l1_bits_ == params.l1_bits && l2_bits_ == params.l2_bits;
  }

  friend bool operator==(const CipherState&, const CipherState&) = default;

 private:
  int l1_bits_;
  int l2_bits_;
  uint64_t l1_ = 0;
  uint64_t l2_ = 0;
};

}  // namespace katan

#endif  // KATAN_TYPES_H_
