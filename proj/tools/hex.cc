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

#include "hex.h"

#include <cctype>
#include <cstdio>

namespace katan::cli {
namespace {

std::string_view StripPrefix(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
  }
  return text;
}

int NibbleValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Parses exactly `digits` hex digits into (high, low) 64-bit halves.
void ParseDigits(std::string_view text, int digits, std::string_view what,
                 uint64_t& high, uint64_t& low) {
  text = StripPrefix(text);
  if (static_cast<int>(text.size()) != digits) {
    throw UsageError(std::string(what) + ": expected " +
                     std::to_string(digits) + " hex digits, got " +
                     std::to_string(text.size()));
  }
  high = 0;
  low = 0;
  for (char c : text) {
    const int v = NibbleValue(c);
    if (v < 0) {
      throw UsageError(std::string(what) + ": invalid hex digit '" +
                       std::string(1, c) + "'");
    }
    high = (high << 4) | (low >> 60);
    low = (low << 4) | static_cast<uint64_t>(v);
  }
}

}  // namespace

uint64_t ReverseBits(uint64_t value, int width) {
  uint64_t out = 0;
  for (int i = 0; i < width; ++i) out |= ((value >> i) & 1) << (width - 1 - i);
  return out;
}

Key80 ReverseKeyBits(const Key80& key) {
  Key80 out;
  for (int i = 0; i < kKeyBits; ++i) out.set_bit(kKeyBits - 1 - i, key.bit(i));
  return out;
}

Block ParseBlockHex(std::string_view text, const CipherParams& params,
                    const HexOptions& options) {
  uint64_t high = 0;
  uint64_t low = 0;
  ParseDigits(text, params.block_bits / 4, params.name() + " block", high, low);
  if (options.bit_reverse) low = ReverseBits(low, params.block_bits);
  return Block(low, params.block_bits);
}

Key80 ParseKeyHex(std::string_view text, const HexOptions& options) {
  uint64_t high = 0;
  uint64_t low = 0;
  ParseDigits(text, kKeyBits / 4, "key", high, low);
  const Key80 key(low, static_cast<uint16_t>(high));
  return options.bit_reverse ? ReverseKeyBits(key) : key;
}

std::string FormatBlockHex(const Block& block, const HexOptions& options) {
  const uint64_t v = options.bit_reverse
                         ? ReverseBits(block.value(), block.width())
                         : block.value();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*llx", (block.width() + 3) / 4,
                static_cast<unsigned long long>(v));
  return buf;
}

std::string FormatKeyHex(const Key80& key, const HexOptions& options) {
  const Key80 k = options.bit_reverse ? ReverseKeyBits(key) : key;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04x%016llx", static_cast<unsigned>(k.high()),
                static_cast<unsigned long long>(k.low()));
  return buf;
}

}  // namespace katan::cli
