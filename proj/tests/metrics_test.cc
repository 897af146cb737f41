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

#include <random>

#include <gtest/gtest.h>

#include "katan/errors.h"

namespace katan {
namespace {

TEST(MetricsTest, SequentialKatan32Row) {
  const double time = ExecTimeUs(3626, 358.55);
  EXPECT_NEAR(time, 10.1129, 1e-4);
  EXPECT_NEAR(ClockPeriodNs(358.55), 2.78901, 1e-5);
  EXPECT_NEAR(ThroughputMbps(32, time), 3.164258, 1e-6);
}

TEST(MetricsTest, SpeedupIsRatioOfThroughputs) {
  EXPECT_NEAR(Speedup(0.9759, 3.164), 0.30844, 1e-5);
  EXPECT_DOUBLE_EQ(Speedup(6.0, 3.0), 2.0);
}

TEST(MetricsTest, SpeedupReciprocity) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> d(1e-3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const double a = d(rng), b = d(rng);
    EXPECT_NEAR(Speedup(a, b) * Speedup(b, a), 1.0, 1e-12);
  }
}

TEST(MetricsTest, ThroughputTimesTimeIsBits) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int64_t> cycles(1, 1000000);
  std::uniform_real_distribution<double> fmax(1.0, 1000.0);
  for (int i = 0; i < 1000; ++i) {
    const double t = ExecTimeUs(cycles(rng), fmax(rng));
    EXPECT_NEAR(ThroughputMbps(48, t) * t, 48.0, 1e-9);
  }
}

TEST(MetricsTest, RejectsNonpositiveDivisors) {
  EXPECT_THROW(ExecTimeUs(100, 0.0), InvalidMetricError);
  EXPECT_THROW(ExecTimeUs(100, -5.0), InvalidMetricError);
  EXPECT_THROW(ClockPeriodNs(0.0), InvalidMetricError);
  EXPECT_THROW(ThroughputMbps(32, 0.0), InvalidMetricError);
  EXPECT_THROW(Speedup(1.0, 0.0), InvalidMetricError);
}

TEST(FormatSignificantTest, KeepsTrailingZeros) {
  EXPECT_EQ(FormatSignificant(12.3, 4), "12.30");
  EXPECT_EQ(FormatSignificant(0.0025714, 4), "0.002571");
  EXPECT_EQ(FormatSignificant(263.666, 4), "263.7");
  EXPECT_EQ(FormatSignificant(3626.0, 4), "3626");
  EXPECT_DOUBLE_EQ(RoundSignificant(0.30844, 4), 0.3084);
}

TEST(PrintedValueTest, ParsesDecimals) {
  const PrintedValue v = PrintedValue::Parse("0.0030");
  EXPECT_DOUBLE_EQ(v.value, 0.003);
  EXPECT_EQ(v.decimals, 4);
  EXPECT_EQ(PrintedValue::Parse("2844").decimals, 0);
  EXPECT_THROW(PrintedValue::Parse("1e5"), std::invalid_argument);
  EXPECT_THROW(PrintedValue::Parse("abc"), std::invalid_argument);
  EXPECT_THROW(PrintedValue::Parse(""), std::invalid_argument);
}

TEST(PrintedValueTest, MatchesWithinOneLastDigit) {
  const PrintedValue v = PrintedValue::Parse("10.11");
  EXPECT_TRUE(MatchesPrinted(10.1129, v));
  EXPECT_TRUE(MatchesPrinted(10.1249, v));
  EXPECT_FALSE(MatchesPrinted(10.1251, v));
  EXPECT_FALSE(MatchesPrinted(10.0949, v));
}

}  // namespace
}  // namespace katan
