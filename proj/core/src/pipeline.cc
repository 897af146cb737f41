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

#include "katan/pipeline.h"

#include <algorithm>
#include <string>

#include "katan/errors.h"

namespace katan {

int64_t StageCosts::sum() const {
  return load_cycles + round_cycles + emit_cycles;
}

int64_t StageCosts::max() const {
  return std::max({load_cycles, round_cycles, emit_cycles});
}

StageCosts DefaultStageCosts(const CipherParams& params) {
  StageCosts costs;
  costs.load_cycles = params.block_bits;
  costs.round_cycles =
      int64_t{params.rounds} * params.steps_per_round + params.rounds;
  costs.emit_cycles = params.block_bits / 2;
  return costs;
}

std::string_view PipelineModeName(PipelineMode mode) {
  return mode == PipelineMode::kSequential ? "sequential" : "pipelined";
}

std::optional<int64_t> PipelineRun::BlockInStage(int stage,
                                                 int64_t cycle) const {
  // Stage intervals are ordered by block and never overlap.
  int64_t lo = 0;
  int64_t hi = num_blocks;
  while (lo < hi) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (interval(mid, stage).release <= cycle) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < num_blocks && interval(lo, stage).start <= cycle) return lo;
  return std::nullopt;
}

double PipelineRun::BlocksPerCycle() const {
  return static_cast<double>(num_blocks) / static_cast<double>(total_cycles);
}

PipelineRun Simulate(const StageCosts& costs, int64_t num_blocks,
                     PipelineMode mode) {
  if (num_blocks < 1) {
    throw InvalidRunError("pipeline run needs at least one block, got " +
                          std::to_string(num_blocks));
  }
  const auto cost = costs.as_array();
  for (int s = 0; s < kNumStages; ++s) {
    if (cost[s] <= 0) {
      throw InvalidRunError("stage " + std::to_string(s) +
                            " cost must be positive, got " +
                            std::to_string(cost[s]));
    }
  }

  PipelineRun run;
  run.num_blocks = num_blocks;
  run.mode = mode;
  run.occupancy.resize(static_cast<size_t>(num_blocks) * kNumStages);

  auto at = [&run](int64_t b, int s) -> StageInterval& {
    return run.occupancy[b * kNumStages + s];
  };

  int64_t clock = 0;
  for (int64_t b = 0; b < num_blocks; ++b) {
    for (int s = 0; s < kNumStages; ++s) {
      StageInterval& iv = at(b, s);
      iv.block = b;
      iv.stage = s;
      if (mode == PipelineMode::kSequential) {
        iv.start = clock;
      } else {
        // Input is ready once the upstream stage finished this block; the
        // stage itself is free once its previous block was taken downstream.
        const int64_t ready = s == 0 ? 0 : at(b, s - 1).finish;
        const int64_t free = b == 0 ? 0 : at(b - 1, s).release;
        iv.start = std::max(ready, free);
        if (s > 0) at(b, s - 1).release = iv.start;
      }
      iv.finish = iv.start + cost[s];
      iv.release = iv.finish;
      clock = iv.finish;
    }
  }
  run.total_cycles = at(num_blocks - 1, kNumStages - 1).finish;
  return run;
}

}  // namespace katan
