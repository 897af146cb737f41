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

#ifndef KATAN_TOOLS_VECTOR_FILE_H_
#define KATAN_TOOLS_VECTOR_FILE_H_

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hex.h"
#include "katan/params.h"
#include "katan/types.h"

namespace katan::cli {

// Known-answer vector files: one "variant key plaintext ciphertext" record
// per line, whitespace separated, '#' comments.

class VectorParseError : public std::runtime_error {
 public:
  VectorParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct VectorRecord {
  int line = 0;
  CipherParams params;
  Key80 key;
  Block plaintext{0, 32};
  Block ciphertext{0, 32};
};

std::vector<VectorRecord> ParseVectorFile(std::istream& in,
                                          const HexOptions& options = {});

struct VerifyFailure {
  int line = 0;
  std::string variant;
  std::string expected;
  std::string actual;
};

struct VerifySummary {
  int total = 0;
  int passed = 0;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
};

VerifySummary VerifyVectors(std::span<const VectorRecord> records,
                            const HexOptions& options = {});

}  // namespace katan::cli

#endif  // KATAN_TOOLS_VECTOR_FILE_H_
