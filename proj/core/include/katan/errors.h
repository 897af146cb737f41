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

#ifndef KATAN_ERRORS_H_
#define KATAN_ERRORS_H_

#include <stdexcept>

namespace katan {

// Unsupported (family, block size) combination or unknown variant name.
class InvalidVariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A block, key or state whose width does not match the variant.
class InvalidBlockError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Lane-count overflow or lane/variant disagreement in the bit-sliced engine.
class BatchShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Nonpositive frequency, time or throughput handed to a metric.
class InvalidMetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Pipeline simulation with no blocks or a nonpositive stage cost.
class InvalidRunError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A performance record that breaks one of its defining identities, or a
// record file that cannot be parsed.
class ReportValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace katan

#endif  // KATAN_ERRORS_H_
