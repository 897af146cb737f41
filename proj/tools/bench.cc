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

#include "bench.h"

#include <algorithm>
#include <chrono>
#include <random>

#include "katan/bitslice.h"
#include "katan/cipher.h"

namespace katan::cli {
namespace {

constexpr int64_t kEquivalenceSample = 256;

}  // namespace

std::string EngineSpec::name() const {
  return scalar() ? "scalar" : "bitsliced-" + std::to_string(lanes);
}

EngineSpec EngineSpec::Parse(std::string_view text) {
  if (text == "scalar") return EngineSpec{0};
  if (text == "bitsliced") return EngineSpec{kMaxLanes};
  constexpr std::string_view kPrefix = "bitsliced-";
  if (text.starts_with(kPrefix)) {
    const std::string digits(text.substr(kPrefix.size()));
    int lanes = 0;
    try {
      size_t used = 0;
      lanes = std::stoi(digits, &used);
      if (used != digits.size()) lanes = -1;
    } catch (const std::exception&) {
      lanes = -1;
    }
    if (lanes < 1 || lanes > kMaxLanes) {
      throw ConfigError("lane count '" + digits + "' outside 1.." +
                        std::to_string(kMaxLanes) + " (machine word width)");
    }
    return EngineSpec{lanes};
  }
  throw ConfigError("unknown engine '" + std::string(text) +
                    "' (expected scalar or bitsliced-N)");
}

Workload MakeWorkload(const CipherParams& params, int64_t blocks,
                      uint64_t seed) {
  std::mt19937_64 rng(seed);
  Workload w;
  w.keys.reserve(blocks);
  w.plaintexts.reserve(blocks);
  for (int64_t i = 0; i < blocks; ++i) {
    const uint64_t low = rng();
    const auto high = static_cast<uint16_t>(rng());
    w.keys.emplace_back(low, high);
    w.plaintexts.emplace_back(rng() & LowMask(params.block_bits),
                              params.block_bits);
  }
  return w;
}

std::vector<Block> RunEngine(const Workload& workload,
                             const CipherParams& params,
                             const EngineSpec& engine) {
  if (engine.scalar()) {
    std::vector<Block> out;
    out.reserve(workload.plaintexts.size());
    for (size_t i = 0; i < workload.plaintexts.size(); ++i) {
      out.push_back(EncryptBlock(workload.plaintexts[i], workload.keys[i], params));
    }
    return out;
  }
  return BitslicedEncryptBlocks(workload.plaintexts, workload.keys, params,
                                engine.lanes);
}

uint64_t Digest(std::span<const Block> blocks) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (const Block& b : blocks) {
    for (int i = 0; i < 8; ++i) {
      h ^= (b.value() >> (8 * i)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

BenchResult RunBench(const BenchConfig& config) {
  if (config.blocks < 1) {
    throw ConfigError("blocks must be at least 1, got " +
                      std::to_string(config.blocks));
  }
  if (config.reps < 1) {
    throw ConfigError("reps must be at least 1, got " +
                      std::to_string(config.reps));
  }
  if (config.engine.lanes < 0 || config.engine.lanes > kMaxLanes) {
    throw ConfigError("lane count " + std::to_string(config.engine.lanes) +
                      " exceeds the machine word width " +
                      std::to_string(kMaxLanes));
  }
  const CipherParams& params = config.params;
  const Workload workload = MakeWorkload(params, config.blocks, config.seed);

  if (!config.engine.scalar()) {
    const int64_t n = std::min(config.blocks, kEquivalenceSample);
    Workload sample;
    sample.keys.assign(workload.keys.begin(), workload.keys.begin() + n);
    sample.plaintexts.assign(workload.plaintexts.begin(),
                             workload.plaintexts.begin() + n);
    const auto want = RunEngine(sample, params, EngineSpec{});
    const auto got = RunEngine(sample, params, config.engine);
    for (int64_t i = 0; i < n; ++i) {
      if (!(want[i] == got[i])) {
        throw std::runtime_error(config.engine.name() +
                                 " disagrees with scalar at block " +
                                 std::to_string(i));
      }
    }
  }

  BenchResult result;
  result.variant = params.name();
  result.engine = config.engine.name();
  result.blocks = config.blocks;
  result.block_bits = params.block_bits;
  result.reps = config.reps;

  std::vector<Block> out;
  for (int rep = 0; rep <= config.reps; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    out = RunEngine(workload, params, config.engine);
    const auto stop = std::chrono::steady_clock::now();
    if (rep == 0) continue;  // warm-up
    result.seconds.push_back(std::chrono::duration<double>(stop - start).count());
  }
  result.digest = Digest(out);

  std::vector<double> sorted = result.seconds;
  std::sort(sorted.begin(), sorted.end());
  result.min_seconds = sorted.front();
  result.max_seconds = sorted.back();
  const size_t mid = sorted.size() / 2;
  result.median_seconds = sorted.size() % 2
                              ? sorted[mid]
                              : (sorted[mid - 1] + sorted[mid]) / 2.0;
  const double bits = static_cast<double>(config.blocks) * params.block_bits;
  auto mbps = [bits](double s) { return bits / (s * 1e6); };
  result.throughput_mbps = mbps(result.median_seconds);
  result.min_mbps = mbps(result.max_seconds);
  result.max_mbps = mbps(result.min_seconds);
  return result;
}

}  // namespace katan::cli
