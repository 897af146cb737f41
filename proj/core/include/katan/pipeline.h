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

#ifndef KATAN_PIPELINE_H_
#define KATAN_PIPELINE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "katan/params.h"

namespace katan {

// Cycle model of the three-stage encryption pipeline: stage 0 loads the
// plaintext and key, stage 1 runs key scheduling and the rounds, stage 2
// emits the ciphertext. Stages hand blocks over through blocking channels:
// a stage only takes the next block once its current block has been
// accepted downstream.

inline constexpr int kNumStages = 3;

struct StageCosts {
  int64_t load_cycles = 1;
  int64_t round_cycles = 1;
  int64_t emit_cycles = 1;

  std::array<int64_t, kNumStages> as_array() const {
    return {load_cycles, round_cycles, emit_cycles};
  }
  int64_t sum() const;
  int64_t max() const;
};

// Assumed defaults: load = block size, rounds = 254 steps per
// round plus one key-schedule clock per round, emit = half the block size.
StageCosts DefaultStageCosts(const CipherParams& params);

enum class PipelineMode { kSequential, kPipelined };

std::string_view PipelineModeName(PipelineMode mode);

// One block's stay in one stage. The stage computes during [start, finish)
// and holds the block until release, when the next stage accepts it.
struct StageInterval {
  int64_t block = 0;
  int stage = 0;
  int64_t start = 0;
  int64_t finish = 0;
  int64_t release = 0;
};

struct PipelineRun {
  int64_t num_blocks = 0;
  PipelineMode mode = PipelineMode::kPipelined;
  int64_t total_cycles = 0;
  // Block-major: entry b * kNumStages + s is block b in stage s.
  std::vector<StageInterval> occupancy;

  const StageInterval& interval(int64_t block, int stage) const {
    return occupancy[block * kNumStages + stage];
  }
  // The block occupying `stage` during `cycle`, if any.
  std::optional<int64_t> BlockInStage(int stage, int64_t cycle) const;
  double BlocksPerCycle() const;
};

// Throws InvalidRunError for num_blocks < 1 or a nonpositive stage cost.
PipelineRun Simulate(const StageCosts& costs, int64_t num_blocks,
                     PipelineMode mode);

}  // namespace katan

#endif  // KATAN_PIPELINE_H_
