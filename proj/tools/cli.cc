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

#include "cli.h"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bench.h"
#include "hex.h"
#include "katan/cipher.h"
#include "katan/errors.h"
#include "katan/key_schedule.h"
#include "katan/report.h"
#include "katan/round_counter.h"
#include "vector_file.h"

namespace katan::cli {
namespace {

using nlohmann::json;

enum class Format { kText, kCsv, kJson };

struct GlobalOptions {
  std::string variant = "katan32";
  uint64_t seed = 1;
  std::string format = "text";
  bool bit_reverse = false;

  CipherParams params() const {
    try {
      return ParseVariant(variant);
    } catch (const InvalidVariantError& e) {
      throw UsageError(e.what());
    }
  }
  Format fmt() const {
    if (format == "csv") return Format::kCsv;
    if (format == "json") return Format::kJson;
    return Format::kText;
  }
  HexOptions hex() const { return HexOptions{bit_reverse}; }
};

int CmdCipher(const GlobalOptions& g, bool encrypt, const std::string& key_hex,
              const std::string& input_hex, std::ostream& out) {
  const CipherParams params = g.params();
  const Key80 key = ParseKeyHex(key_hex, g.hex());
  const Block input = ParseBlockHex(input_hex, params, g.hex());
  const Block output = encrypt ? EncryptBlock(input, key, params)
                               : DecryptBlock(input, key, params);
  const std::string in_name = encrypt ? "plaintext" : "ciphertext";
  const std::string out_name = encrypt ? "ciphertext" : "plaintext";
  switch (g.fmt()) {
    case Format::kText:
      out << FormatBlockHex(output, g.hex()) << "\n";
      break;
    case Format::kCsv:
      out << "variant,key," << in_name << "," << out_name << "\n"
          << params.name() << "," << FormatKeyHex(key, g.hex()) << ","
          << FormatBlockHex(input, g.hex()) << ","
          << FormatBlockHex(output, g.hex()) << "\n";
      break;
    case Format::kJson:
      out << json{{"variant", params.name()},
                  {"key", FormatKeyHex(key, g.hex())},
                  {in_name, FormatBlockHex(input, g.hex())},
                  {out_name, FormatBlockHex(output, g.hex())}}
                 .dump(2)
          << "\n";
      break;
  }
  return kExitOk;
}

int CmdKeySchedule(const GlobalOptions& g, const std::string& key_hex,
                   std::ostream& out) {
  const CipherParams params = g.params();
  const SubkeyStream stream = Subkeys(params.family, ParseKeyHex(key_hex, g.hex()));
  switch (g.fmt()) {
    case Format::kText:
      out << "# " << params.name() << " subkeys: round ka kb\n";
      for (int r = 0; r < kRounds; ++r) {
        out << r << " " << stream[r].ka << " " << stream[r].kb << "\n";
      }
      break;
    case Format::kCsv:
      out << "round,ka,kb\n";
      for (int r = 0; r < kRounds; ++r) {
        out << r << "," << stream[r].ka << "," << stream[r].kb << "\n";
      }
      break;
    case Format::kJson: {
      json rounds = json::array();
      for (int r = 0; r < kRounds; ++r) {
        rounds.push_back({{"round", r},
                          {"ka", static_cast<int>(stream[r].ka)},
                          {"kb", static_cast<int>(stream[r].kb)}});
      }
      out << json{{"variant", params.name()}, {"subkeys", rounds}}.dump(2)
          << "\n";
      break;
    }
  }
  return kExitOk;
}

int CmdIr(const GlobalOptions& g, std::ostream& out) {
  const IrSequence& ir = GetIrSequence();
  const auto& states = RoundCounterStates();
  switch (g.fmt()) {
    case Format::kText:
      for (int r = 0; r < kRounds; r += 10) {
        const int end = std::min(r + 10, kRounds);
        out << r << "-" << end - 1 << "\t";
        for (int i = r; i < end; ++i) out << ir[i];
        out << "\n";
      }
      break;
    case Format::kCsv:
      out << "round,counter,ir\n";
      for (int r = 0; r < kRounds; ++r) {
        out << r << "," << static_cast<int>(states[r]) << "," << ir[r] << "\n";
      }
      break;
    case Format::kJson: {
      std::string bits;
      for (int r = 0; r < kRounds; ++r) bits += ir[r] ? '1' : '0';
      out << json{{"ir", bits},
                  {"counter", std::vector<int>(states.begin(), states.end())}}
                 .dump(2)
          << "\n";
      break;
    }
  }
  return kExitOk;
}

int CmdVerify(const GlobalOptions& g, const std::string& path,
              std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read vector file '" + path + "'");
  std::vector<VectorRecord> records;
  try {
    records = ParseVectorFile(in, g.hex());
  } catch (const VectorParseError& e) {
    err << "parse error: " << path << ": " << e.what() << "\n";
    return kExitFailure;
  }
  const VerifySummary s = VerifyVectors(records, g.hex());
  switch (g.fmt()) {
    case Format::kText:
      for (const auto& f : s.failures) {
        out << "line " << f.line << ": " << f.variant << " mismatch: expected "
            << f.expected << ", got " << f.actual << "\n";
      }
      out << "verified " << s.passed << "/" << s.total << " vectors: "
          << (s.ok() ? "PASS" : "FAIL") << "\n";
      break;
    case Format::kCsv:
      out << "line,variant,expected,actual\n";
      for (const auto& f : s.failures) {
        out << f.line << "," << f.variant << "," << f.expected << ","
            << f.actual << "\n";
      }
      out << "# passed " << s.passed << " of " << s.total << "\n";
      break;
    case Format::kJson: {
      json failures = json::array();
      for (const auto& f : s.failures) {
        failures.push_back({{"line", f.line},
                            {"variant", f.variant},
                            {"expected", f.expected},
                            {"actual", f.actual}});
      }
      out << json{{"total", s.total},
                  {"passed", s.passed},
                  {"ok", s.ok()},
                  {"failures", failures}}
                 .dump(2)
          << "\n";
      break;
    }
  }
  return s.ok() ? kExitOk : kExitFailure;
}

int CmdBench(const GlobalOptions& g, const std::string& engine, int64_t blocks,
             int reps, std::ostream& out) {
  BenchConfig config;
  config.params = g.params();
  config.engine = EngineSpec::Parse(engine);
  config.blocks = blocks;
  config.reps = reps;
  config.seed = g.seed;
  const BenchResult r = RunBench(config);

  char digest[17];
  std::snprintf(digest, sizeof(digest), "%016llx",
                static_cast<unsigned long long>(r.digest));
  switch (g.fmt()) {
    case Format::kText:
      out << "variant:     " << r.variant << "\n"
          << "engine:      " << r.engine << "\n"
          << "blocks:      " << r.blocks << "\n"
          << "reps:        " << r.reps << " (plus 1 warm-up)\n"
          << "time (s):    min " << r.min_seconds << "  median "
          << r.median_seconds << "  max " << r.max_seconds << "\n"
          << "throughput:  " << r.throughput_mbps << " Mbps (min "
          << r.min_mbps << ", max " << r.max_mbps << ")\n"
          << "digest:      " << digest << "\n";
      break;
    case Format::kCsv:
      out << "variant,engine,blocks,reps,min_s,median_s,max_s,throughput_mbps,"
             "digest\n"
          << r.variant << "," << r.engine << "," << r.blocks << "," << r.reps
          << "," << r.min_seconds << "," << r.median_seconds << ","
          << r.max_seconds << "," << r.throughput_mbps << "," << digest
          << "\n";
      break;
    case Format::kJson:
      out << json{{"variant", r.variant},
                  {"engine", r.engine},
                  {"blocks", r.blocks},
                  {"reps", r.reps},
                  {"seconds", r.seconds},
                  {"min_seconds", r.min_seconds},
                  {"median_seconds", r.median_seconds},
                  {"max_seconds", r.max_seconds},
                  {"throughput_mbps", r.throughput_mbps},
                  {"min_mbps", r.min_mbps},
                  {"max_mbps", r.max_mbps},
                  {"digest", digest}}
                 .dump(2)
          << "\n";
      break;
  }
  return kExitOk;
}

int CmdReport(const GlobalOptions& g, const std::string& path,
              const std::string& mode, bool allow_inconsistent, bool strict,
              std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read record file '" + path + "'");
  ReportOptions options;
  try {
    options.mode = ParseNumeratorMode(mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  options.allow_inconsistent = allow_inconsistent;
  Report report;
  try {
    report = BuildReport(ParseReportInput(in), PaperLayout(), options);
  } catch (const ReportValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitFailure;
  }
  switch (g.fmt()) {
    case Format::kText:
      out << RenderText(report);
      break;
    case Format::kCsv:
      out << RenderCsv(report);
      break;
    case Format::kJson:
      out << RenderJson(report);
      break;
  }
  if (strict && report.mismatch_count() > 0) return kExitFailure;
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"KATAN/KTANTAN block cipher kit: encryption, known-answer "
               "checks, benchmarks and performance reports",
               "katan-kit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--variant", g.variant,
                 "katan32|katan48|katan64|ktantan32|ktantan48|ktantan64")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for generated workloads")
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_flag("--bit-reverse", g.bit_reverse,
               "Reverse bit order within keys and blocks on hex I/O");

  std::string key_hex;
  std::string input_hex;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt one block");
  encrypt->add_option("key", key_hex, "80-bit key, 20 hex digits")->required();
  encrypt->add_option("plaintext", input_hex, "Block in hex")->required();
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt one block");
  decrypt->add_option("key", key_hex, "80-bit key, 20 hex digits")->required();
  decrypt->add_option("ciphertext", input_hex, "Block in hex")->required();

  auto* keyschedule =
      app.add_subcommand("keyschedule", "Dump the per-round (ka, kb) pairs");
  keyschedule->add_option("key", key_hex, "80-bit key, 20 hex digits")
      ->required();

  auto* ir = app.add_subcommand("ir", "Dump the irregular-update sequence");

  std::string path;
  auto* verify =
      app.add_subcommand("verify", "Check a known-answer vector file");
  verify->add_option("file", path, "Vector file")->required();

  std::string engine = "scalar";
  int64_t blocks = 100000;
  int reps = 5;
  auto* bench = app.add_subcommand("bench", "Time the scalar or bit-sliced engine");
  bench->add_option("--engine", engine, "scalar or bitsliced-N (N <= 64)")
      ->capture_default_str();
  bench->add_option("--blocks", blocks, "Blocks per rep")->capture_default_str();
  bench->add_option("--reps", reps, "Timed reps")->capture_default_str();

  std::string mode = "paper";
  bool allow_inconsistent = false;
  bool strict = false;
  auto* report = app.add_subcommand("report", "Build performance tables");
  report->add_option("file", path, "Record file")->required();
  report->add_option("--mode", mode, "Throughput numerator: paper or definition")
      ->capture_default_str();
  report->add_flag("--allow-inconsistent", allow_inconsistent,
                   "Annotate records that break an identity instead of failing");
  report->add_flag("--strict", strict,
                   "Exit 1 when any printed value disagrees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encrypt) return CmdCipher(g, true, key_hex, input_hex, out);
    if (*decrypt) return CmdCipher(g, false, key_hex, input_hex, out);
    if (*keyschedule) return CmdKeySchedule(g, key_hex, out);
    if (*ir) return CmdIr(g, out);
    if (*verify) return CmdVerify(g, path, out, err);
    if (*bench) return CmdBench(g, engine, blocks, reps, out);
    if (*report) {
      return CmdReport(g, path, mode, allow_inconsistent, strict, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace katan::cli
