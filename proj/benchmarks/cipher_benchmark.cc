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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "katan/bitslice.h"
#include "katan/cipher.h"
#include "katan/key_schedule.h"
#include "katan/pipeline.h"

namespace {

using katan::Block;
using katan::CipherParams;
using katan::Key80;

const CipherParams& Variant(int64_t index) {
  return katan::AllVariants()[static_cast<size_t>(index)];
}

struct Inputs {
  std::vector<Key80> keys;
  std::vector<Block> blocks;
};

Inputs MakeInputs(const CipherParams& params, size_t n) {
  std::mt19937_64 rng(7);
  Inputs in;
  for (size_t i = 0; i < n; ++i) {
    in.keys.emplace_back(rng(), static_cast<uint16_t>(rng()));
    in.blocks.emplace_back(rng() & katan::LowMask(params.block_bits),
                           params.block_bits);
  }
  return in;
}

void BM_ScalarEncrypt(benchmark::State& state) {
  const CipherParams& params = Variant(state.range(0));
  const Inputs in = MakeInputs(params, 64);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        katan::EncryptBlock(in.blocks[i % 64], in.keys[i % 64], params));
    ++i;
  }
  state.SetLabel(params.name());
  state.SetBytesProcessed(state.iterations() * params.block_bits / 8);
}
BENCHMARK(BM_ScalarEncrypt)->DenseRange(0, 5);

void BM_BitslicedEncrypt(benchmark::State& state) {
  const CipherParams& params = Variant(state.range(0));
  const int lanes = static_cast<int>(state.range(1));
  const Inputs in = MakeInputs(params, lanes);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        katan::BitslicedEncryptBlocks(in.blocks, in.keys, params, lanes));
  }
  state.SetLabel(params.name());
  state.SetBytesProcessed(state.iterations() * lanes * params.block_bits / 8);
}
BENCHMARK(BM_BitslicedEncrypt)
    ->ArgsProduct({benchmark::CreateDenseRange(0, 5, 1), {8, 32, 64}});

void BM_KatanKeySchedule(benchmark::State& state) {
  const Key80 key(0x0123456789abcdefULL, 0x55aa);
  for (auto _ : state) benchmark::DoNotOptimize(katan::KatanSubkeys(key));
}
BENCHMARK(BM_KatanKeySchedule);

void BM_KtantanKeySchedule(benchmark::State& state) {
  const Key80 key(0x0123456789abcdefULL, 0x55aa);
  for (auto _ : state) benchmark::DoNotOptimize(katan::KtantanSubkeys(key));
}
BENCHMARK(BM_KtantanKeySchedule);

void BM_PipelineSimulate(benchmark::State& state) {
  const auto costs = katan::DefaultStageCosts(Variant(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(katan::Simulate(
        costs, state.range(0), katan::PipelineMode::kPipelined));
  }
}
BENCHMARK(BM_PipelineSimulate)->Arg(100)->Arg(10000);

}  // namespace
BENCHMARK_MAIN();
