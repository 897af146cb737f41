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

#ifndef KATAN_TOOLS_CLI_H_
#define KATAN_TOOLS_CLI_H_

#include <iosfwd>

namespace katan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the katan-kit command line, writing to the given streams.
// Returns 0 on success, 1 on verification or validation failure and 2 on a
// usage error.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace katan::cli

#endif  // KATAN_TOOLS_CLI_H_
