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

#ifndef KATAN_TOOLS_HEX_H_
#define KATAN_TOOLS_HEX_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "katan/params.h"
#include "katan/types.h"

namespace katan::cli {

// Bad command-line input; maps to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Hex strings are the canonical integer, most significant nibble first.
// With bit_reverse set, bit i of the text maps to bit (width - 1 - i).
struct HexOptions {
  bool bit_reverse = false;
};

uint64_t ReverseBits(uint64_t value, int width);
Key80 ReverseKeyBits(const Key80& key);

// Throws UsageError naming the expected digit count.
Block ParseBlockHex(std::string_view text, const CipherParams& params,
                    const HexOptions& options = {});
Key80 ParseKeyHex(std::string_view text, const HexOptions& options = {});

std::string FormatBlockHex(const Block& block, const HexOptions& options = {});
std::string FormatKeyHex(const Key80& key, const HexOptions& options = {});

}  // namespace katan::cli

#endif  // KATAN_TOOLS_HEX_H_
