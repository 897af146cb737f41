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

#include "vector_file.h"

#include <istream>
#include <sstream>

#include "katan/cipher.h"
#include "katan/errors.h"

namespace katan::cli {

std::vector<VectorRecord> ParseVectorFile(std::istream& in,
                                          const HexOptions& options) {
  std::vector<VectorRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string tok; fields >> tok;) f.push_back(tok);
    if (f.empty()) continue;
    if (f.size() != 4) {
      throw VectorParseError(line_no, "expected 4 fields (variant key "
                                      "plaintext ciphertext), got " +
                                          std::to_string(f.size()));
    }
    try {
      VectorRecord rec;
      rec.line = line_no;
      rec.params = ParseVariant(f[0]);
      rec.key = ParseKeyHex(f[1], options);
      rec.plaintext = ParseBlockHex(f[2], rec.params, options);
      rec.ciphertext = ParseBlockHex(f[3], rec.params, options);
      records.push_back(rec);
    } catch (const std::invalid_argument& e) {
      throw VectorParseError(line_no, e.what());
    }
  }
  return records;
}

VerifySummary VerifyVectors(std::span<const VectorRecord> records,
                            const HexOptions& options) {
  VerifySummary summary;
  for (const VectorRecord& rec : records) {
    ++summary.total;
    const Block got = EncryptBlock(rec.plaintext, rec.key, rec.params);
    if (got == rec.ciphertext) {
      ++summary.passed;
    } else {
      summary.failures.push_back({rec.line, rec.params.name(),
                                  FormatBlockHex(rec.ciphertext, options),
                                  FormatBlockHex(got, options)});
    }
  }
  return summary;
}

}  // namespace katan::cli
