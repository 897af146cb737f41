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

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "katan/errors.h"
#include "test_util.h"

namespace katan {
namespace {

ReportInput LoadPaperData() {
  std::ifstream in(testing::PaperDataPath());
  return ParseReportInput(in);
}

const ReportCell& Cell(const Report& report, std::string_view table,
                       std::string_view variant, size_t column) {
  const ReportTable* t = report.table(table);
  EXPECT_NE(t, nullptr);
  for (const ReportRow& row : t->rows) {
    if (row.variant == variant) return row.cells.at(column);
  }
  ADD_FAILURE() << "no row " << variant << " in table " << table;
  static const ReportCell kNone;
  return kNone;
}

Report PaperReport() {
  return BuildReport(LoadPaperData(), PaperLayout(),
                     {NumeratorMode::kPaper, false});
}

TEST(ReportTest, PaperDataParses) {
  const ReportInput input = LoadPaperData();
  EXPECT_EQ(input.records.size(), 12u);
  EXPECT_EQ(input.references.size(), 12u);
  EXPECT_EQ(input.printed_speedups.size(), 30u);
}

TEST(ReportTest, PerfTablesReproducePrintedValues) {
  const Report r = PaperReport();
  for (const char* id : {"I", "II"}) {
    const ReportTable* t = r.table(id);
    ASSERT_NE(t, nullptr);
    ASSERT_EQ(t->rows.size(), 6u);
    for (const ReportRow& row : t->rows) {
      for (const ReportCell& c : row.cells) {
        EXPECT_FALSE(c.mismatch) << id << " " << row.variant;
      }
    }
  }
  EXPECT_EQ(Cell(r, "I", "katan32", 8).display, "3.164");
  EXPECT_EQ(Cell(r, "I", "katan48", 8).display, "0.6008");
}

TEST(ReportTest, SpeedupExamples) {
  const Report r = PaperReport();
  // Table III: pipelined over sequential, 0.9760 / 3.164. The printed
  // 0.3084 is one unit off in the last digit and still matches.
  EXPECT_EQ(Cell(r, "III", "katan32", 2).display, "0.3085");
  EXPECT_FALSE(Cell(r, "III", "katan32", 2).mismatch);
  EXPECT_EQ(Cell(r, "III", "ktantan64", 2).display, "12.30");
  // Table V speedup 1: 3.164 / 21.76.
  const ReportCell& v = Cell(r, "V", "katan32", 3);
  ASSERT_TRUE(v.value.has_value());
  EXPECT_NEAR(*v.value, 0.1454, 1e-4);
  EXPECT_FALSE(v.mismatch);
  EXPECT_EQ(Cell(r, "IV", "katan32", 3).display, "263.7");
  EXPECT_EQ(Cell(r, "VI", "katan64", 4).display, "0.002571");
}

TEST(ReportTest, AnnotatesIrreproduciblePrintedSpeedups) {
  const Report r = PaperReport();
  EXPECT_EQ(r.mismatch_count(), 3);
  ASSERT_EQ(r.annotations.size(), 3u);
  EXPECT_TRUE(Cell(r, "III", "katan64", 2).mismatch);
  EXPECT_TRUE(Cell(r, "IV", "ktantan48", 4).mismatch);
  EXPECT_TRUE(Cell(r, "VI", "katan64", 3).mismatch);
}

TEST(ReportTest, ReferenceOnlyVariantsShowDashes) {
  const Report r = PaperReport();
  const ReportCell& c = Cell(r, "V", "ktantan32", 2);
  EXPECT_FALSE(c.value.has_value());
  EXPECT_EQ(c.display, "-");
}

TEST(ReportTest, EmptyInputGivesHeaderOnlyTables) {
  const Report r = BuildReport({}, PaperLayout(), {});
  ASSERT_EQ(r.tables.size(), 6u);
  for (const ReportTable& t : r.tables) {
    EXPECT_FALSE(t.columns.empty());
    EXPECT_TRUE(t.rows.empty());
  }
  EXPECT_EQ(r.mismatch_count(), 0);
}

TEST(ReportTest, DefinitionModeRejectsPrintedThirtyTwoBitRows) {
  try {
    BuildReport(LoadPaperData(), PaperLayout(),
                {NumeratorMode::kDefinition, false});
    FAIL() << "expected ReportValidationError";
  } catch (const ReportValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("katan48 (sequential)"),
              std::string::npos);
    EXPECT_NE(std::string(e.what()).find("throughput"), std::string::npos);
  }
}

TEST(ReportTest, AllowInconsistentAnnotatesInstead) {
  const Report r = BuildReport(LoadPaperData(), PaperLayout(),
                               {NumeratorMode::kDefinition, true});
  EXPECT_EQ(Cell(r, "I", "katan48", 8).display, "0.9012");
  EXPECT_TRUE(Cell(r, "I", "katan48", 8).mismatch);
  EXPECT_GT(r.mismatch_count(), 3);
}

PerfRecord Katan32Sequential() {
  PerfRecord rec;
  rec.implementation = "sequential";
  rec.variant = "katan32";
  rec.block_bits = 32;
  rec.total_clock_cycles = 3626;
  rec.fmax_mhz = 358.55;
  rec.exec_time_us = PrintedValue::Parse("10.11");
  return rec;
}

TEST(ValidateRecordTest, NamesTheViolatedIdentity) {
  PerfRecord rec = Katan32Sequential();
  EXPECT_NO_THROW(ValidateRecord(rec, 32, false));
  rec.exec_time_us = PrintedValue::Parse("11.11");
  try {
    ValidateRecord(rec, 32, false);
    FAIL();
  } catch (const ReportValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("exec_time"), std::string::npos);
  }
  EXPECT_NO_THROW(ValidateRecord(rec, 32, true));
  rec.override_checks = true;
  EXPECT_NO_THROW(ValidateRecord(rec, 32, false));
}

TEST(ValidateRecordTest, AlwaysRejectsImpossibleRecords) {
  PerfRecord rec = Katan32Sequential();
  rec.fmax_mhz = 0.0;
  EXPECT_THROW(ValidateRecord(rec, 32, true), ReportValidationError);
  rec = Katan32Sequential();
  rec.total_clock_cycles = 0;
  EXPECT_THROW(ValidateRecord(rec, 32, true), ReportValidationError);
}

TEST(ParseReportInputTest, RejectsMalformedLines) {
  for (const char* text : {
           "perf,sequential,katan32,5\n",
           "ref,original,katan32,abc\n",
           "speedup,III,katan32,0,1.0\n",
           "bogus,1,2\n",
           "perf,sequential,katan99,5,1,1,-,10,100,-,-,-\n",
       }) {
    std::istringstream in(text);
    EXPECT_THROW(ParseReportInput(in), ReportValidationError) << text;
  }
}

TEST(ParseReportInputTest, ErrorsCarryLineNumbers) {
  std::istringstream in("# comment\n\nref,original,katan32,x\n");
  try {
    ParseReportInput(in);
    FAIL();
  } catch (const ReportValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(RenderTest, FormatsCarryTheSameCells) {
  const Report r = PaperReport();
  EXPECT_NE(RenderText(r).find("263.7"), std::string::npos);
  EXPECT_NE(RenderCsv(r).find("263.7"), std::string::npos);
  EXPECT_NE(RenderJson(r).find("\"263.7\""), std::string::npos);
}

TEST(NumeratorModeTest, ParsesNames) {
  EXPECT_EQ(ParseNumeratorMode("paper"), NumeratorMode::kPaper);
  EXPECT_EQ(ParseNumeratorMode("compat"), NumeratorMode::kPaper);
  EXPECT_EQ(ParseNumeratorMode("definition"), NumeratorMode::kDefinition);
  EXPECT_THROW(ParseNumeratorMode("x"), std::invalid_argument);
}

}  // namespace
}  // namespace katan
