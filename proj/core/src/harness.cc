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

#include "streamsub/harness.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "streamsub/errors.h"
#include "streamsub/exact.h"
#include "streamsub/greedy.h"
#include "streamsub/guess.h"
#include "streamsub/streaming.h"

namespace streamsub {
namespace {

using nlohmann::json;

std::string Real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

bool IsGreedy(std::string_view algo) {
  return algo == "greedy" || algo == "lazy-greedy";
}

bool IsSalsaFamily(std::string_view algo) {
  return algo == "salsa" || algo == "dense" || algo == "fixed" ||
         algo == "high-low" || algo == "small-k";
}

GuessFactory FactoryFor(std::string_view algo, std::size_t k, std::size_t n,
                        const SalsaParams& params, std::size_t p) {
  if (algo == "sieve") return SieveFactory(k);
  if (algo == "salsa") return SalsaFactory(k, n, params);
  if (algo == "two-pass") return TwoPassFactory(k);
  if (algo == "p-pass") return PPassFactory(k, p);
  return SingleCandidateFactory(std::string(algo), k, n, params);
}

struct Outcome {
  std::vector<ElementId> members;
  double value = 0.0;
  std::size_t peak_stored = 0;
  std::size_t passes = 1;
  std::size_t live_guesses = 0;
};

Outcome RunAlgorithm(const std::string& algo, const SubmodularOracle& oracle,
                     const Stream& stream, std::size_t k,
                     std::optional<double> v, const ExperimentConfig& config,
                     const SalsaParams& params) {
  Outcome out;
  if (IsGreedy(algo)) {
    std::vector<ElementId> universe;
    universe.reserve(stream.size());
    for (std::size_t i = 0; i < stream.size(); ++i) {
      universe.push_back(stream.Read(i));
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()),
                   universe.end());
    const SolutionSet s = algo == "greedy" ? Greedy(oracle, universe, k)
                                           : LazyGreedy(oracle, universe, k);
    out.members.assign(s.members().begin(), s.members().end());
    out.value = s.value();
    out.peak_stored = universe.size();
    out.passes = std::max<std::size_t>(1, s.size());
    return out;
  }
  const GuessFactory factory =
      FactoryFor(algo, k, stream.size(), params, config.passes);
  StreamResult r = v ? RunCandidates(oracle, stream, factory.make(*v),
                                     factory.passes)
                     : GuessOpt(factory, oracle, stream, k, config.eps);
  out.members.assign(r.solution.members().begin(), r.solution.members().end());
  out.value = r.solution.value();
  out.peak_stored = r.peak_stored;
  out.passes = r.passes;
  out.live_guesses = r.max_live_guesses;
  return out;
}

std::optional<double> OptFor(const InstanceBundle& bundle, std::size_t k,
                             const ExperimentConfig& config) {
  if (bundle.known_opt && (bundle.k == 0 || bundle.k == k)) {
    return bundle.known_opt->value;
  }
  BruteForceOptions options;
  options.max_subsets = config.max_subsets;
  return BruteForceOpt(*bundle.oracle, k, options).value;
}

std::vector<std::string> SplitCsvLine(const std::string& line,
                                      std::size_t fields) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (out.size() + 1 < fields) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) break;
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  out.push_back(line.substr(start));
  return out;
}

template <class T>
T ParseNumber(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  T value{};
  in >> value;
  if (!in || in.peek() != std::char_traits<char>::eof()) {
    throw ParseError("results", line, "bad number '" + text + "'");
  }
  return value;
}

}  // namespace

std::string_view OptModeName(OptMode mode) {
  return mode == OptMode::kKnown ? "known" : "guessed";
}

OptMode ParseOptMode(std::string_view name) {
  if (name == "known") return OptMode::kKnown;
  if (name == "guessed") return OptMode::kGuessed;
  throw ParameterError("opt mode must be 'known' or 'guessed'");
}

const std::vector<std::string>& KnownAlgorithms() {
  static const std::vector<std::string> kAlgos = {
      "greedy", "lazy-greedy", "sieve",    "salsa",   "two-pass",
      "p-pass", "dense",       "fixed",    "high-low", "small-k"};
  return kAlgos;
}

std::vector<RunRecord> RunExperiment(const InstanceBundle& bundle,
                                     const ExperimentConfig& config) {
  if (!bundle.oracle) throw ParameterError("instance has no oracle");
  for (const std::string& algo : config.algos) {
    const auto& known = KnownAlgorithms();
    if (std::find(known.begin(), known.end(), algo) == known.end()) {
      throw ParameterError("unknown algorithm '" + algo + "'");
    }
  }
  for (std::size_t k : config.ks) {
    if (k == 0) throw ParameterError("k must be positive");
  }
  if (config.opt_mode == OptMode::kGuessed && !(config.eps > 0.0)) {
    throw ParameterError("epsilon must be positive");
  }
  if (config.passes == 0) throw ParameterError("passes must be positive");
  const SalsaParams params = SalsaParams::FromPreset(config.preset);
  const bool shuffle = config.shuffle.value_or(bundle.synthetic);
  const bool need_opt =
      config.opt_mode == OptMode::kKnown || config.record_opt;

  std::map<std::size_t, double> opts;
  if (need_opt) {
    for (std::size_t k : config.ks) {
      if (!opts.contains(k)) opts[k] = *OptFor(bundle, k, config);
    }
  }

  const SubmodularOracle& oracle = *bundle.oracle;
  std::vector<RunRecord> records;
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t seed = config.base_seed + trial;
    const StreamPlan plan =
        shuffle ? Shuffle(bundle, seed) : CanonicalPlan(bundle);
    const std::vector<ElementId> ids = plan.Ids();
    for (const std::string& algo : config.algos) {
      for (std::size_t k : config.ks) {
        std::optional<double> v;
        if (config.opt_mode == OptMode::kKnown && !IsGreedy(algo)) {
          v = opts.at(k);
          if (!(*v > 0.0)) {
            throw ParameterError("known mode needs a positive optimum");
          }
        }
        const Stream stream(ids);
        oracle.ResetStats();
        const auto start = std::chrono::steady_clock::now();
        const Outcome out =
            RunAlgorithm(algo, oracle, stream, k, v, config, params);
        const auto stop = std::chrono::steady_clock::now();

        RunRecord r;
        r.algo = algo;
        r.k = k;
        r.trial = trial;
        r.seed = seed;
        r.utility = out.value;
        r.oracle_calls = oracle.stats().eval_count;
        r.peak_stored = out.peak_stored;
        r.passes = out.passes;
        r.opt_estimate_mode = std::string(OptModeName(config.opt_mode));
        if (config.timing) {
          r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          stop - start)
                          .count();
        }
        r.params["n"] = std::to_string(ids.size());
        r.params["order"] = shuffle ? "shuffled" : "fixed";
        if (need_opt) r.params["opt"] = Real(opts.at(k));
        if (!IsGreedy(algo) && config.opt_mode == OptMode::kGuessed) {
          r.params["eps"] = Real(config.eps);
          r.params["guesses"] = std::to_string(out.live_guesses);
        }
        if (algo == "p-pass") r.params["p"] = std::to_string(config.passes);
        if (IsSalsaFamily(algo)) r.params["preset"] = config.preset;
        records.push_back(std::move(r));
      }
    }
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const RunRecord& a, const RunRecord& b) {
                     return std::tie(a.algo, a.k, a.trial) <
                            std::tie(b.algo, b.k, b.trial);
                   });
  return records;
}

std::optional<double> TheoremBound(std::string_view algo, OptMode mode,
                                   double eps, std::size_t p) {
  std::optional<double> bound;
  if (IsGreedy(algo)) return 1.0 - 1.0 / std::exp(1.0);
  if (algo == "sieve" || algo == "salsa") bound = 0.5;
  if (algo == "two-pass") bound = 5.0 / 9.0;
  if (algo == "p-pass") {
    const double r = static_cast<double>(p) / static_cast<double>(p + 1);
    bound = 1.0 - std::pow(r, static_cast<double>(p));
  }
  if (bound && mode == OptMode::kGuessed) *bound *= 1.0 - eps;
  return bound;
}

std::size_t MemoryBound(std::string_view algo, std::size_t k, std::size_t n,
                        OptMode mode, double eps, std::string_view preset,
                        std::size_t p) {
  if (IsGreedy(algo)) return n;
  const std::size_t per_guess = algo == "salsa" ? 5 * k : k;
  if (mode == OptMode::kKnown) return per_guess;
  const SalsaParams params = SalsaParams::FromPreset(preset);
  const double t_min = FactoryFor(algo, k, std::max<std::size_t>(n, 1),
                                  params, std::max<std::size_t>(p, 1))
                           .min_threshold_coefficient;
  return per_guess * MaxLiveGuesses(k, eps, t_min);
}

std::string FormatParams(const std::map<std::string, std::string>& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    out += key + '=' + value;
  }
  return out;
}

std::map<std::string, std::string> ParseParams(std::string_view text) {
  std::map<std::string, std::string> out;
  while (!text.empty()) {
    const std::size_t semi = text.find(';');
    const std::string_view item = text.substr(0, semi);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("params", 0, "expected key=value in '" +
                                        std::string(item) + "'");
    }
    out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return out;
}

std::string FormatCsv(const std::vector<RunRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const RunRecord& r : records) {
    out += r.algo + ',' + std::to_string(r.k) + ',' + std::to_string(r.trial) +
           ',' + std::to_string(r.seed) + ',' + Real(r.utility) + ',' +
           std::to_string(r.oracle_calls) + ',' +
           std::to_string(r.peak_stored) + ',' + std::to_string(r.passes) +
           ',' + r.opt_estimate_mode + ',' + std::to_string(r.wall_ms) + ',' +
           FormatParams(r.params) + '\n';
  }
  return out;
}

std::vector<RunRecord> ParseCsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ParseError("results", 1, "missing or wrong CSV header");
  }
  std::vector<RunRecord> out;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitCsvLine(line, 11);
    if (f.size() != 11) throw ParseError("results", number, "expected 11 fields");
    RunRecord r;
    r.algo = f[0];
    r.k = ParseNumber<std::size_t>(f[1], number);
    r.trial = ParseNumber<std::size_t>(f[2], number);
    r.seed = ParseNumber<std::uint64_t>(f[3], number);
    r.utility = ParseNumber<double>(f[4], number);
    r.oracle_calls = ParseNumber<std::uint64_t>(f[5], number);
    r.peak_stored = ParseNumber<std::size_t>(f[6], number);
    r.passes = ParseNumber<std::size_t>(f[7], number);
    r.opt_estimate_mode = f[8];
    r.wall_ms = ParseNumber<std::int64_t>(f[9], number);
    r.params = ParseParams(f[10]);
    out.push_back(std::move(r));
  }
  return out;
}

std::string FormatJson(const std::vector<RunRecord>& records) {
  json arr = json::array();
  for (const RunRecord& r : records) {
    arr.push_back({{"algo", r.algo},
                   {"k", r.k},
                   {"trial", r.trial},
                   {"seed", r.seed},
                   {"utility", r.utility},
                   {"oracle_calls", r.oracle_calls},
                   {"peak_stored", r.peak_stored},
                   {"passes", r.passes},
                   {"opt_estimate_mode", r.opt_estimate_mode},
                   {"wall_ms", r.wall_ms},
                   {"params", r.params}});
  }
  return arr.dump(1) + "\n";
}

std::vector<RunRecord> ParseJson(const std::string& text) {
  try {
    const json arr = json::parse(text);
    std::vector<RunRecord> out;
    for (const json& j : arr) {
      RunRecord r;
      j.at("algo").get_to(r.algo);
      j.at("k").get_to(r.k);
      j.at("trial").get_to(r.trial);
      j.at("seed").get_to(r.seed);
      j.at("utility").get_to(r.utility);
      j.at("oracle_calls").get_to(r.oracle_calls);
      j.at("peak_stored").get_to(r.peak_stored);
      j.at("passes").get_to(r.passes);
      j.at("opt_estimate_mode").get_to(r.opt_estimate_mode);
      j.at("wall_ms").get_to(r.wall_ms);
      j.at("params").get_to(r.params);
      out.push_back(std::move(r));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError("results", 0, e.what());
  }
}

void EmitResults(const std::vector<RunRecord>& records, std::string_view format,
                 const std::string& path) {
  std::string text;
  if (format == "csv") {
    text = FormatCsv(records);
  } else if (format == "json") {
    text = FormatJson(records);
  } else {
    throw ParameterError("format must be 'csv' or 'json'");
  }
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << text;
  if (!out) throw DataError("failed writing '" + path + "'");
}

std::vector<RunRecord> ReadResults(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  const std::string s = text.str();
  const std::size_t first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && s[first] == '[') return ParseJson(s);
  return ParseCsv(s);
}

SuiteReport VerifySuite(const std::vector<RunRecord>& records) {
  SuiteReport report;
  for (const RunRecord& r : records) {
    const std::string where = r.algo + " k=" + std::to_string(r.k) +
                              " trial=" + std::to_string(r.trial);
    const OptMode mode = ParseOptMode(r.opt_estimate_mode);
    const auto param = [&](const std::string& key) -> std::optional<double> {
      auto it = r.params.find(key);
      if (it == r.params.end()) return std::nullopt;
      return std::stod(it->second);
    };
    const double eps = param("eps").value_or(0.0);
    const std::size_t p =
        static_cast<std::size_t>(param("p").value_or(1.0));
    const std::size_t n = static_cast<std::size_t>(param("n").value_or(0.0));
    const std::string preset =
        r.params.contains("preset") ? r.params.at("preset") : "icml";
    if (n > 0 && r.peak_stored > MemoryBound(r.algo, r.k, n, mode, eps,
                                             preset, p)) {
      report.failures.push_back(where + ": peak_stored " +
                                std::to_string(r.peak_stored) +
                                " exceeds memory bound");
    }
    const std::optional<double> bound = TheoremBound(r.algo, mode, eps, p);
    if (!bound) {
      ++report.skipped;
      continue;
    }
    const std::optional<double> opt = param("opt");
    if (!opt) {
      report.failures.push_back(where + ": no optimum recorded");
      continue;
    }
    ++report.checked;
    if (*opt <= 0.0) continue;
    const RatioCheck check = VerifyRatio(r.utility, *opt, *bound);
    if (!check.passed) {
      report.failures.push_back(where + ": ratio " + Real(check.ratio) +
                                " below bound " + Real(*bound));
    }
  }
  return report;
}

}  // namespace streamsub
