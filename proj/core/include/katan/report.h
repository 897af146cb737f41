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

#ifndef KATAN_REPORT_H_
#define KATAN_REPORT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "katan/metrics.h"

namespace katan {

// Performance tables in the layout of the published FPGA results: two
// per-implementation tables (cycles, Fmax and the quantities derived from
// them) followed by throughput comparison tables with speedup columns.
// Area figures are carried through untouched. Every derived column is
// recomputed; printed values supplied alongside are checked against it.

// Which bit count a throughput divides. kDefinition always uses the block
// size. kPaper uses 32 bits for tables flagged `paper_32bit_numerator`,
// which is how the printed sequential table was computed.
enum class NumeratorMode { kPaper, kDefinition };

std::string_view NumeratorModeName(NumeratorMode mode);
// "paper" / "compat" or "definition"; throws std::invalid_argument.
NumeratorMode ParseNumeratorMode(std::string_view name);

struct PerfRecord {
  std::string implementation;  // e.g. "sequential"
  std::string variant;         // e.g. "katan32"
  int block_bits = 0;

  // Pass-through synthesis results.
  std::optional<PrintedValue> logic_utilization_pct;
  std::optional<PrintedValue> alut_count;
  std::optional<PrintedValue> register_count;
  std::optional<PrintedValue> memory_bits;

  int64_t total_clock_cycles = 0;
  double fmax_mhz = 0.0;

  // Printed derived values, checked against the recomputed ones.
  std::optional<PrintedValue> clock_period_ns;
  std::optional<PrintedValue> exec_time_us;
  std::optional<PrintedValue> throughput_mbps;

  // Mismatches are annotated instead of rejected.
  bool override_checks = false;
};

// Throughput of an implementation known only by its published figure.
struct ReferenceThroughput {
  std::string implementation;
  std::string variant;
  PrintedValue throughput_mbps;
};

// A printed speedup cell; `column` is 1-based within the table's speedups.
struct PrintedSpeedup {
  std::string table;
  std::string variant;
  int column = 1;
  PrintedValue value;
};

struct ReportInput {
  std::vector<PerfRecord> records;
  std::vector<ReferenceThroughput> references;
  std::vector<PrintedSpeedup> printed_speedups;
};

struct PerfTableSpec {
  std::string id;
  std::string title;
  std::string implementation;
  bool paper_32bit_numerator = false;
};

struct SpeedupSpec {
  std::string numerator;    // implementation whose throughput is on top
  std::string denominator;
};

struct ComparisonSpec {
  std::string id;
  std::string title;
  std::vector<std::string> throughputs;  // implementations shown, in order
  std::vector<SpeedupSpec> speedups;
};

struct ReportLayout {
  std::vector<PerfTableSpec> perf_tables;
  std::vector<ComparisonSpec> comparisons;
};

// Tables I-VI: sequential and pipelined results, then pipelined vs
// sequential, and both against the original, behavioral and pipeline
// reference designs.
ReportLayout PaperLayout();

std::string ImplementationLabel(std::string_view implementation);

struct ReportCell {
  std::optional<double> value;  // full precision
  std::string display;          // "-" when absent
  std::optional<PrintedValue> printed;
  bool mismatch = false;
};

struct ReportRow {
  std::string variant;
  std::vector<ReportCell> cells;
};

struct ReportTable {
  std::string id;
  std::string title;
  std::vector<std::string> columns;  // excluding the leading variant column
  std::vector<ReportRow> rows;
};

struct Report {
  NumeratorMode mode = NumeratorMode::kDefinition;
  std::vector<ReportTable> tables;
  std::vector<std::string> annotations;

  int mismatch_count() const;
  const ReportTable* table(std::string_view id) const;
};

struct ReportOptions {
  NumeratorMode mode = NumeratorMode::kDefinition;
  bool allow_inconsistent = false;
};

// Bits encrypted per run for `record` under `mode`.
int NumeratorBits(const PerfRecord& record, const PerfTableSpec& table,
                  NumeratorMode mode);

// Throws ReportValidationError naming the first violated identity, unless
// the record (or options) allow inconsistencies. Also rejects nonpositive
// Fmax and negative cycle counts unconditionally.
void ValidateRecord(const PerfRecord& record, int numerator_bits,
                    bool allow_inconsistent);

Report BuildReport(const ReportInput& input, const ReportLayout& layout,
                   const ReportOptions& options);

// Parses a record file. Lines are comma separated, '#' starts a comment:
//
//   perf,<impl>,<variant>,<logic%>,<aluts>,<regs>,<mem bits>,<cycles>,
//        <fmax MHz>,<period ns>,<time us>,<Mbps>[,override]
//   ref,<impl>,<variant>,<Mbps>
//   speedup,<table>,<variant>,<column>,<value>
//
// Empty fields and "-" mean absent. Throws ReportValidationError with the
// line number on malformed input.
ReportInput ParseReportInput(std::istream& in);

std::string RenderText(const Report& report);
std::string RenderCsv(const Report& report);
// Structured form with full-precision values.
std::string RenderJson(const Report& report);

}  // namespace katan

#endif  // KATAN_REPORT_H_
