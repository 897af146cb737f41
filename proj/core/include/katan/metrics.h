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

#ifndef KATAN_METRICS_H_
#define KATAN_METRICS_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace katan {

// Units: frequency in MHz, time in microseconds, period in nanoseconds,
// throughput in Mbps (bits per microsecond). All throw InvalidMetricError on
// a nonpositive divisor.

// cycles / fmax.
double ExecTimeUs(int64_t total_clock_cycles, double fmax_mhz);

// 1000 / fmax.
double ClockPeriodNs(double fmax_mhz);

// bits / time.
double ThroughputMbps(double bits, double exec_time_us);

// Throughput of processor 2 relative to processor 1.
double Speedup(double throughput_2, double throughput_1);

// Rounds to `digits` significant figures.
double RoundSignificant(double value, int digits);

// Fixed-point rendering with `digits` significant figures, keeping trailing
// zeros ("12.30", "0.0026").
std::string FormatSignificant(double value, int digits);

// A number as it appears in a printed table: its value and how many
// decimals were shown.
struct PrintedValue {
  double value = 0.0;
  int decimals = 0;
  std::string text;

  // Throws std::invalid_argument on anything but a plain decimal number.
  static PrintedValue Parse(std::string_view text);
};

// True when `computed`, rounded to the printed decimals, lies within one
// unit of the last printed digit.
bool MatchesPrinted(double computed, const PrintedValue& printed);

}  // namespace katan

#endif  // KATAN_METRICS_H_
