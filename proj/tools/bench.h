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

#ifndef KATAN_TOOLS_BENCH_H_
#define KATAN_TOOLS_BENCH_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "katan/params.h"
#include "katan/types.h"

namespace katan::cli {

// Invalid benchmark configuration; maps to exit status 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "scalar" (lanes == 0) or "bitsliced-N" with 1 <= N <= 64.
struct EngineSpec {
  int lanes = 0;

  bool scalar() const { return lanes == 0; }
  std::string name() const;
  // Accepts "scalar", "bitsliced" (64 lanes) and "bitsliced-N". Throws
  // ConfigError for a lane count outside 1..64.
  static EngineSpec Parse(std::string_view text);
};

// Per-block (key, plaintext) pairs drawn from a seeded generator.
struct Workload {
  std::vector<Key80> keys;
  std::vector<Block> plaintexts;
};

Workload MakeWorkload(const CipherParams& params, int64_t blocks,
                      uint64_t seed);

std::vector<Block> RunEngine(const Workload& workload,
                             const CipherParams& params,
                             const EngineSpec& engine);

// FNV-1a over the block values.
uint64_t Digest(std::span<const Block> blocks);

struct BenchConfig {
  CipherParams params;
  EngineSpec engine;
  int64_t blocks = 100000;
  int reps = 5;
  uint64_t seed = 1;
};

struct BenchResult {
  std::string variant;
  std::string engine;
  int64_t blocks = 0;
  int block_bits = 0;
  int reps = 0;
  std::vector<double> seconds;  // timed reps, warm-up excluded
  double min_seconds = 0.0;
  double median_seconds = 0.0;
  double max_seconds = 0.0;
  double throughput_mbps = 0.0;  // at the median time
  double min_mbps = 0.0;
  double max_mbps = 0.0;
  uint64_t digest = 0;  // over all ciphertexts of the last rep
};

// Times `reps` runs after one discarded warm-up, on a monotonic clock.
// Bit-sliced engines are first checked against the scalar engine on a
// sample of the workload; a disagreement throws std::runtime_error.
BenchResult RunBench(const BenchConfig& config);

}  // namespace katan::cli

#endif  // KATAN_TOOLS_BENCH_H_
