// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STREAMSUB_HARNESS_H_
#define STREAMSUB_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streamsub/instances.h"

namespace streamsub {

enum class OptMode { kKnown, kGuessed };

std::string_view OptModeName(OptMode mode);
OptMode ParseOptMode(std::string_view name);

// Algorithm labels accepted by RunExperiment.
const std::vector<std::string>& KnownAlgorithms();

struct RunRecord {
  std::string algo;
  std::size_t k = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double utility = 0.0;
  std::uint64_t oracle_calls = 0;
  std::size_t peak_stored = 0;
  std::size_t passes = 1;
  std::string opt_estimate_mode;
  std::int64_t wall_ms = 0;
  std::map<std::string, std::string> params;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct ExperimentConfig {
  std::vector<std::string> algos;
  std::vector<std::size_t> ks;
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  OptMode opt_mode = OptMode::kGuessed;
  double eps = 0.1;
  // p for p-pass.
  std::size_t passes = 3;
  std::string preset = "icml";
  // Unset: shuffle synthetic instances, keep loaded data in file order.
  std::optional<bool> shuffle;
  // Record OPT (param "opt") in guessed mode too, for later verification.
  bool record_opt = false;
  // Measure wall_ms; otherwise it is 0 and output is reproducible.
  bool timing = false;
  std::uint64_t max_subsets = 5'000'000;
};

// Runs every (algo, k, trial). Trial t streams the instance shuffled with
// seed base_seed + t. Records come back sorted by (algo, k, trial). Throws
// ParameterError for unknown labels or bad parameters.
std::vector<RunRecord> RunExperiment(const InstanceBundle& bundle,
                                     const ExperimentConfig& config);

// Worst-case approximation factor proved for the algorithm, or nullopt for
// labels without one (dense, fixed, high-low, small-k). Guessed mode
// multiplies by (1 - eps).
std::optional<double> TheoremBound(std::string_view algo, OptMode mode,
                                   double eps, std::size_t p);

// Most elements the configuration can hold at once (n for greedy).
std::size_t MemoryBound(std::string_view algo, std::size_t k, std::size_t n,
                        OptMode mode, double eps, std::string_view preset,
                        std::size_t p);

constexpr std::string_view kCsvHeader =
    "algo,k,trial,seed,utility,oracle_calls,peak_stored,passes,"
    "opt_estimate_mode,wall_ms,params";

std::string FormatParams(const std::map<std::string, std::string>& params);
std::map<std::string, std::string> ParseParams(std::string_view text);

std::string FormatCsv(const std::vector<RunRecord>& records);
std::vector<RunRecord> ParseCsv(const std::string& text);
std::string FormatJson(const std::vector<RunRecord>& records);
std::vector<RunRecord> ParseJson(const std::string& text);

// format is "csv" or "json"; path "-" writes to stdout. Throws DataError
// when the path cannot be written.
void EmitResults(const std::vector<RunRecord>& records, std::string_view format,
                 const std::string& path);

// Reads a CSV or JSON results file (by content).
std::vector<RunRecord> ReadResults(const std::string& path);

struct SuiteReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  int ExitStatus() const { return passed() ? 0 : 2; }
};

// Applies VerifyRatio with each record's theorem bound against its "opt"
// param, and checks peak_stored against MemoryBound. Records of labels
// without a bound are skipped; a bounded record without "opt" fails.
SuiteReport VerifySuite(const std::vector<RunRecord>& records);

}  // namespace streamsub

#endif  // STREAMSUB_HARNESS_H_
