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

#include "katan/metrics.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "katan/errors.h"

namespace katan {
namespace {

void RequirePositive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidMetricError(std::string(what) + " must be positive, got " +
                             std::to_string(value));
  }
}

}  // namespace

double ExecTimeUs(int64_t total_clock_cycles, double fmax_mhz) {
  RequirePositive(fmax_mhz, "Fmax");
  if (total_clock_cycles < 0) {
    throw InvalidMetricError("clock cycle count must not be negative");
  }
  return static_cast<double>(total_clock_cycles) / fmax_mhz;
}

double ClockPeriodNs(double fmax_mhz) {
  RequirePositive(fmax_mhz, "Fmax");
  return 1000.0 / fmax_mhz;
}

double ThroughputMbps(double bits, double exec_time_us) {
  RequirePositive(exec_time_us, "execution time");
  return bits / exec_time_us;
}

double Speedup(double throughput_2, double throughput_1) {
  RequirePositive(throughput_1, "baseline throughput");
  return throughput_2 / throughput_1;
}

double RoundSignificant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  const int exponent = static_cast<int>(std::floor(std::log10(std::fabs(value))));
  const double scale = std::pow(10.0, digits - 1 - exponent);
  return std::round(value * scale) / scale;
}

std::string FormatSignificant(double value, int digits) {
  if (!std::isfinite(value)) return std::to_string(value);
  const double rounded = RoundSignificant(value, digits);
  int decimals = digits - 1;
  if (rounded != 0.0) {
    const int exponent =
        static_cast<int>(std::floor(std::log10(std::fabs(rounded))));
    decimals = std::max(0, digits - 1 - exponent);
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, rounded);
  return buf;
}

PrintedValue PrintedValue::Parse(std::string_view text) {
  PrintedValue out;
  out.text = std::string(text);
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] =
      std::from_chars(first, last, out.value, std::chars_format::fixed);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("not a decimal number: '" + out.text + "'");
  }
  const auto dot = text.find('.');
  out.decimals =
      dot == std::string_view::npos ? 0 : static_cast<int>(text.size() - dot - 1);
  return out;
}

bool MatchesPrinted(double computed, const PrintedValue& printed) {
  const double scale = std::pow(10.0, printed.decimals);
  const double shown = std::round(computed * scale);
  const double expected = std::round(printed.value * scale);
  return std::fabs(shown - expected) <= 1.0;
}

}  // namespace katan
