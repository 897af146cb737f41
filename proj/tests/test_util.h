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

#ifndef KATAN_TESTS_TEST_UTIL_H_
#define KATAN_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "katan/params.h"
#include "katan/types.h"
#include "vector_file.h"

namespace katan::testing {

inline std::string FixturePath() {
  return std::string(KATAN_TEST_DATA_DIR) + "/katan_vectors.txt";
}

inline std::string PaperDataPath() {
  return std::string(KATAN_DATA_DIR) + "/tables_i_vi.csv";
}

inline std::vector<cli::VectorRecord> LoadFixtures() {
  std::ifstream in(FixturePath());
  return cli::ParseVectorFile(in);
}

inline Key80 RandomKey(std::mt19937_64& rng) {
  return Key80(rng(), static_cast<uint16_t>(rng()));
}

inline Block RandomBlock(std::mt19937_64& rng, const CipherParams& params) {
  return Block(rng() & LowMask(params.block_bits), params.block_bits);
}

}  // namespace katan::testing

#endif  // KATAN_TESTS_TEST_UTIL_H_
