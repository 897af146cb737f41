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

#include "katan/report.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "katan/errors.h"
#include "katan/params.h"

namespace katan {
namespace {

constexpr int kDisplayDigits = 4;

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> SplitFields(std::string_view line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    fields.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string ShortestDecimal(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string Upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

std::string CanonicalVariant(const std::string& name) {
  return ParseVariant(name).name();
}

ReportCell Absent() { return ReportCell{std::nullopt, "-", std::nullopt, false}; }

ReportCell PassThrough(const std::optional<PrintedValue>& v) {
  if (!v) return Absent();
  return ReportCell{v->value, v->text, std::nullopt, false};
}

ReportCell Derived(double value, const std::optional<PrintedValue>& printed) {
  ReportCell cell{value, FormatSignificant(value, kDisplayDigits), printed,
                  false};
  if (printed) cell.mismatch = !MatchesPrinted(value, *printed);
  return cell;
}

std::string DisplayVariant(const std::string& canonical) {
  return Upper(canonical);
}

}  // namespace

std::string_view NumeratorModeName(NumeratorMode mode) {
  return mode == NumeratorMode::kPaper ? "paper" : "definition";
}

NumeratorMode ParseNumeratorMode(std::string_view name) {
  if (name == "paper" || name == "compat") return NumeratorMode::kPaper;
  if (name == "definition") return NumeratorMode::kDefinition;
  throw std::invalid_argument("unknown numerator mode '" + std::string(name) +
                              "' (expected paper or definition)");
}

ReportLayout PaperLayout() {
  ReportLayout layout;
  layout.perf_tables = {
      {"I", "Hardware results of the sequential implementation",
       "sequential", true},
      {"II", "Hardware results of the parallel-pipelined implementation",
       "pipelined", false},
  };
  layout.comparisons = {
      {"III",
       "Sequential vs parallel-pipelined; speed up is parallel-pipelined over "
       "sequential throughput",
       {"sequential", "pipelined"},
       {{"pipelined", "sequential"}}},
      {"IV",
       "Sequential, parallel-pipelined and original; speed up 1 is sequential "
       "over original, speed up 2 is parallel-pipelined over original",
       {"sequential", "pipelined", "original"},
       {{"sequential", "original"}, {"pipelined", "original"}}},
      {"V",
       "Sequential, parallel-pipelined and behavioral; speed up 1 is "
       "sequential over behavioral, speed up 2 is parallel-pipelined over "
       "behavioral",
       {"sequential", "pipelined", "behavioral"},
       {{"sequential", "behavioral"}, {"pipelined", "behavioral"}}},
      {"VI",
       "Sequential, parallel-pipelined and reference pipeline; speed up 1 is "
       "sequential over pipeline, speed up 2 is parallel-pipelined over "
       "pipeline",
       {"sequential", "pipelined", "reference-pipeline"},
       {{"sequential", "reference-pipeline"},
        {"pipelined", "reference-pipeline"}}},
  };
  return layout;
}

std::string ImplementationLabel(std::string_view implementation) {
  static const std::map<std::string, std::string, std::less<>> labels = {
      {"sequential", "Sequential"},
      {"pipelined", "Parallel-Pipelined"},
      {"original", "Original"},
      {"behavioral", "Behavioral"},
      {"reference-pipeline", "Pipeline"},
  };
  const auto it = labels.find(implementation);
  return it == labels.end() ? std::string(implementation) : it->second;
}

int Report::mismatch_count() const {
  int n = 0;
  for (const auto& t : tables) {
    for (const auto& r : t.rows) {
      for (const auto& c : r.cells) n += c.mismatch ? 1 : 0;
    }
  }
  return n;
}

const ReportTable* Report::table(std::string_view id) const {
  for (const auto& t : tables) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

int NumeratorBits(const PerfRecord& record, const PerfTableSpec& table,
                  NumeratorMode mode) {
  if (mode == NumeratorMode::kPaper && table.paper_32bit_numerator) return 32;
  return record.block_bits;
}

void ValidateRecord(const PerfRecord& record, int numerator_bits,
                    bool allow_inconsistent) {
  const std::string who =
      record.variant + " (" + record.implementation + ")";
  if (!(record.fmax_mhz > 0.0)) {
    throw ReportValidationError(who + ": Fmax must be positive");
  }
  if (record.total_clock_cycles <= 0) {
    throw ReportValidationError(who + ": total clock cycles must be positive");
  }
  if (allow_inconsistent || record.override_checks) return;

  auto check = [&](const std::optional<PrintedValue>& printed, double computed,
                   const std::string& identity) {
    if (printed && !MatchesPrinted(computed, *printed)) {
      throw ReportValidationError(
          who + ": identity " + identity + " violated: printed " +
          printed->text + ", recomputed " +
          FormatSignificant(computed, kDisplayDigits));
    }
  };
  const double period = ClockPeriodNs(record.fmax_mhz);
  const double time = ExecTimeUs(record.total_clock_cycles, record.fmax_mhz);
  const double tput = ThroughputMbps(numerator_bits, time);
  check(record.clock_period_ns, period, "clock_period = 1000 / fmax");
  check(record.exec_time_us, time, "exec_time = total_clock_cycles / fmax");
  check(record.throughput_mbps, tput,
        "throughput = numerator_bits / exec_time (numerator " +
            std::to_string(numerator_bits) + " bits)");
}

Report BuildReport(const ReportInput& input, const ReportLayout& layout,
                   const ReportOptions& options) {
  Report report;
  report.mode = options.mode;

  std::vector<std::string> variants;
  auto note_variant = [&variants](const std::string& v) {
    if (std::find(variants.begin(), variants.end(), v) == variants.end()) {
      variants.push_back(v);
    }
  };
  for (const auto& r : input.records) note_variant(r.variant);
  for (const auto& r : input.references) note_variant(r.variant);

  // Displayed throughput per (implementation, variant). Comparisons chain off
  // the displayed figures, as a printed table would.
  std::map<std::pair<std::string, std::string>, ReportCell> throughputs;

  for (const PerfTableSpec& spec : layout.perf_tables) {
    ReportTable table;
    table.id = spec.id;
    table.title = spec.title;
    table.columns = {"Logic Utilization (%)", "Combinational ALUTs",
                     "Logic Registers",       "Memory Bits",
                     "Total Clock Cycles",    "Fmax (MHz)",
                     "Clock Period (ns)",     "Total Execution Time (us)",
                     "Throughput (Mbps)"};
    for (const PerfRecord& rec : input.records) {
      if (rec.implementation != spec.implementation) continue;
      const int bits = NumeratorBits(rec, spec, options.mode);
      ValidateRecord(rec, bits, options.allow_inconsistent);

      ReportRow row;
      row.variant = rec.variant;
      row.cells.push_back(PassThrough(rec.logic_utilization_pct));
      row.cells.push_back(PassThrough(rec.alut_count));
      row.cells.push_back(PassThrough(rec.register_count));
      row.cells.push_back(PassThrough(rec.memory_bits));
      row.cells.push_back(ReportCell{
          static_cast<double>(rec.total_clock_cycles),
          std::to_string(rec.total_clock_cycles), std::nullopt, false});
      row.cells.push_back(ReportCell{rec.fmax_mhz,
                                     ShortestDecimal(rec.fmax_mhz),
                                     std::nullopt, false});
      const double time = ExecTimeUs(rec.total_clock_cycles, rec.fmax_mhz);
      const double tput = ThroughputMbps(bits, time);
      row.cells.push_back(
          Derived(ClockPeriodNs(rec.fmax_mhz), rec.clock_period_ns));
      row.cells.push_back(Derived(time, rec.exec_time_us));
      row.cells.push_back(Derived(tput, rec.throughput_mbps));

      for (size_t c = 6; c < row.cells.size(); ++c) {
        const ReportCell& cell = row.cells[c];
        if (cell.mismatch) {
          report.annotations.push_back(
              "Table " + spec.id + " " + DisplayVariant(rec.variant) + " " +
              table.columns[c] + ": recomputed " + cell.display +
              (c == 8 ? " (" + std::to_string(bits) + "-bit numerator)" : "") +
              ", printed " + cell.printed->text);
        }
      }
      const double shown = RoundSignificant(tput, kDisplayDigits);
      throughputs[{rec.implementation, rec.variant}] =
          ReportCell{shown, FormatSignificant(tput, kDisplayDigits),
                     std::nullopt, false};
      table.rows.push_back(std::move(row));
    }
    report.tables.push_back(std::move(table));
  }

  for (const auto& ref : input.references) {
    const auto key = std::make_pair(ref.implementation, ref.variant);
    if (!throughputs.count(key)) {
      throughputs[key] = ReportCell{ref.throughput_mbps.value,
                                    ref.throughput_mbps.text, std::nullopt,
                                    false};
    }
  }

  for (const ComparisonSpec& spec : layout.comparisons) {
    ReportTable table;
    table.id = spec.id;
    table.title = spec.title;
    for (const auto& impl : spec.throughputs) {
      table.columns.push_back(ImplementationLabel(impl) + " Throughput (Mbps)");
    }
    for (size_t k = 0; k < spec.speedups.size(); ++k) {
      table.columns.push_back(spec.speedups.size() == 1
                                  ? std::string("Speed Up")
                                  : "Speed Up " + std::to_string(k + 1));
    }

    for (const std::string& variant : variants) {
      ReportRow row;
      row.variant = variant;
      auto lookup = [&](const std::string& impl) {
        const auto it = throughputs.find({impl, variant});
        return it == throughputs.end() ? Absent() : it->second;
      };
      for (const auto& impl : spec.throughputs) row.cells.push_back(lookup(impl));

      for (size_t k = 0; k < spec.speedups.size(); ++k) {
        const ReportCell top = lookup(spec.speedups[k].numerator);
        const ReportCell bottom = lookup(spec.speedups[k].denominator);
        std::optional<PrintedValue> printed;
        for (const auto& ps : input.printed_speedups) {
          if (ps.table == spec.id && ps.variant == variant &&
              ps.column == static_cast<int>(k + 1)) {
            printed = ps.value;
          }
        }
        ReportCell cell = Absent();
        if (top.value && bottom.value && *bottom.value > 0.0) {
          cell = Derived(Speedup(*top.value, *bottom.value), printed);
        } else if (printed) {
          cell.printed = printed;
          cell.mismatch = true;
        }
        if (cell.mismatch) {
          report.annotations.push_back(
              "Table " + spec.id + " " + DisplayVariant(variant) + " " +
              table.columns[spec.throughputs.size() + k] + ": recomputed " +
              cell.display + ", printed " + cell.printed->text);
        }
        row.cells.push_back(std::move(cell));
      }
      table.rows.push_back(std::move(row));
    }
    report.tables.push_back(std::move(table));
  }
  return report;
}

ReportInput ParseReportInput(std::istream& in) {
  ReportInput input;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (Trim(line).empty()) continue;

    const auto f = SplitFields(line);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    auto fail = [&](const std::string& why) -> ReportValidationError {
      return ReportValidationError(where + why);
    };
    auto optional_value = [&](const std::string& s) -> std::optional<PrintedValue> {
      if (s.empty() || s == "-") return std::nullopt;
      try {
        return PrintedValue::Parse(s);
      } catch (const std::invalid_argument& e) {
        throw fail(e.what());
      }
    };
    auto required_value = [&](const std::string& s, const char* what) {
      auto v = optional_value(s);
      if (!v) throw fail(std::string("missing ") + what);
      return *v;
    };
    auto variant = [&](const std::string& s) {
      try {
        return CanonicalVariant(s);
      } catch (const InvalidVariantError& e) {
        throw fail(e.what());
      }
    };

    const std::string& kind = f[0];
    if (kind == "perf") {
      if (f.size() != 12 && f.size() != 13) {
        throw fail("perf record needs 12 or 13 fields, got " +
                   std::to_string(f.size()));
      }
      PerfRecord rec;
      rec.implementation = f[1];
      rec.variant = variant(f[2]);
      rec.block_bits = ParseVariant(rec.variant).block_bits;
      rec.logic_utilization_pct = optional_value(f[3]);
      rec.alut_count = optional_value(f[4]);
      rec.register_count = optional_value(f[5]);
      rec.memory_bits = optional_value(f[6]);
      const PrintedValue cycles = required_value(f[7], "clock cycles");
      if (cycles.decimals != 0) throw fail("clock cycles must be an integer");
      rec.total_clock_cycles = static_cast<int64_t>(cycles.value);
      rec.fmax_mhz = required_value(f[8], "Fmax").value;
      rec.clock_period_ns = optional_value(f[9]);
      rec.exec_time_us = optional_value(f[10]);
      rec.throughput_mbps = optional_value(f[11]);
      if (f.size() == 13) {
        if (f[12] == "override" || f[12] == "1" || f[12] == "true") {
          rec.override_checks = true;
        } else if (!(f[12].empty() || f[12] == "0" || f[12] == "false")) {
          throw fail("unknown override flag '" + f[12] + "'");
        }
      }
      input.records.push_back(std::move(rec));
    } else if (kind == "ref") {
      if (f.size() != 4) throw fail("ref record needs 4 fields");
      input.references.push_back(
          {f[1], variant(f[2]), required_value(f[3], "throughput")});
    } else if (kind == "speedup") {
      if (f.size() != 5) throw fail("speedup record needs 5 fields");
      const PrintedValue column = required_value(f[3], "column");
      if (column.decimals != 0 || column.value < 1) {
        throw fail("speedup column must be a positive integer");
      }
      input.printed_speedups.push_back({f[1], variant(f[2]),
                                        static_cast<int>(column.value),
                                        required_value(f[4], "speedup")});
    } else {
      throw fail("unknown record kind '" + kind + "'");
    }
  }
  return input;
}

std::string RenderText(const Report& report) {
  std::ostringstream out;
  out << "Throughput numerator: " << NumeratorModeName(report.mode)
      << (report.mode == NumeratorMode::kPaper
              ? " (32 bits in the sequential table, block size elsewhere)"
              : " (block size)")
      << "\n";
  for (const ReportTable& t : report.tables) {
    out << "\nTABLE " << t.id << ". " << t.title << "\n";
    std::vector<std::string> header = {"Algorithm"};
    header.insert(header.end(), t.columns.begin(), t.columns.end());
    std::vector<std::vector<std::string>> lines = {header};
    for (const ReportRow& r : t.rows) {
      std::vector<std::string> line = {DisplayVariant(r.variant)};
      for (const ReportCell& c : r.cells) {
        line.push_back(c.display + (c.mismatch ? "*" : ""));
      }
      lines.push_back(std::move(line));
    }
    std::vector<size_t> width(header.size(), 0);
    for (const auto& line : lines) {
      for (size_t i = 0; i < line.size(); ++i) {
        width[i] = std::max(width[i], line[i].size());
      }
    }
    for (const auto& line : lines) {
      for (size_t i = 0; i < line.size(); ++i) {
        out << (i ? "  " : "") << line[i]
            << std::string(width[i] - line[i].size(), ' ');
      }
      out << "\n";
    }
  }
  if (!report.annotations.empty()) {
    out << "\n* recomputed value disagrees with the printed one:\n";
    for (const auto& a : report.annotations) out << "  " << a << "\n";
  }
  return out.str();
}

std::string RenderCsv(const Report& report) {
  std::ostringstream out;
  out << "# numerator mode: " << NumeratorModeName(report.mode) << "\n";
  for (const ReportTable& t : report.tables) {
    out << "# TABLE " << t.id << ": " << t.title << "\n";
    out << "table,Algorithm";
    for (const auto& c : t.columns) out << "," << c;
    out << "\n";
    for (const ReportRow& r : t.rows) {
      out << t.id << "," << DisplayVariant(r.variant);
      for (const ReportCell& c : r.cells) out << "," << c.display;
      out << "\n";
    }
  }
  for (const auto& a : report.annotations) out << "# mismatch: " << a << "\n";
  return out.str();
}

std::string RenderJson(const Report& report) {
  using nlohmann::json;
  json doc;
  doc["numerator_mode"] = NumeratorModeName(report.mode);
  doc["tables"] = json::array();
  for (const ReportTable& t : report.tables) {
    json table = {{"id", t.id}, {"title", t.title}, {"columns", t.columns}};
    table["rows"] = json::array();
    for (const ReportRow& r : t.rows) {
      json row = {{"variant", r.variant}};
      row["cells"] = json::array();
      for (size_t i = 0; i < r.cells.size(); ++i) {
        const ReportCell& c = r.cells[i];
        json cell = {{"column", t.columns[i]}, {"display", c.display}};
        cell["value"] = c.value ? json(*c.value) : json(nullptr);
        if (c.printed) {
          cell["printed"] = c.printed->text;
          cell["mismatch"] = c.mismatch;
        }
        row["cells"].push_back(std::move(cell));
      }
      table["rows"].push_back(std::move(row));
    }
    doc["tables"].push_back(std::move(table));
  }
  doc["annotations"] = report.annotations;
  return doc.dump(2) + "\n";
}

}  // namespace katan
