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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "streamsub/exact.h"
#include "streamsub/guess.h"
#include "streamsub/harness.h"
#include "streamsub/instances.h"
#include "streamsub/objectives.h"
#include "streamsub/streaming.h"

namespace streamsub {
namespace {

constexpr double kTol = 1e-9;

struct Verdict {
  bool passed = true;
  std::string detail;
  int shown = 0;

  void Fail(const std::string& why) {
    if (passed || shown < 3) {
      detail += (detail.empty() ? "" : "; ") + why;
      ++shown;
    }
    passed = false;
  }
};

using Key = std::tuple<std::string, std::size_t, std::size_t, std::size_t>;

struct SuiteInstance {
  std::string name;
  InstanceBundle bundle;
};

std::vector<SuiteInstance> RatioInstances() {
  std::vector<SuiteInstance> out;
  for (std::uint64_t s = 0; s < 60; ++s) {
    const std::size_t n = 8 + s % 9;
    const double p = 0.1 + 0.05 * static_cast<double>(s % 6);
    out.push_back({"graph#" + std::to_string(s), GenRandomGraph(n, p, s)});
  }
  for (std::uint64_t s = 0; s < 60; ++s) {
    const std::size_t n = 6 + s % 7;
    const std::size_t d = 2 + s % 3;
    out.push_back(
        {"points#" + std::to_string(s), GenRandomPoints(n, d, 1000 + s)});
  }
  return out;
}

double Param(const RunRecord& r, const std::string& key) {
  return std::stod(r.params.at(key));
}

// All suite records, kept for the cost and determinism criteria.
std::vector<RunRecord> g_all_records;

ExperimentConfig KnownConfig(std::vector<std::string> algos, std::size_t p) {
  ExperimentConfig c;
  c.algos = std::move(algos);
  c.ks = {2, 3, 4};
  c.trials = 2;
  c.base_seed = 7;
  c.opt_mode = OptMode::kKnown;
  c.passes = p;
  return c;
}

Verdict RatioSuite(const std::vector<SuiteInstance>& suite) {
  Verdict v;
  const double greedy_bound = 1 - 1 / std::exp(1.0);
  std::size_t runs = 0;
  for (const SuiteInstance& inst : suite) {
    std::vector<RunRecord> records = RunExperiment(
        inst.bundle,
        KnownConfig({"sieve", "two-pass", "salsa", "greedy", "p-pass"}, 1));
    for (std::size_t p : {2u, 3u}) {
      for (RunRecord& r : RunExperiment(inst.bundle, KnownConfig({"p-pass"}, p))) {
        records.push_back(std::move(r));
      }
    }
    for (const RunRecord& r : records) {
      const double opt = Param(r, "opt");
      double bound = 0.5;
      if (r.algo == "two-pass") bound = 5.0 / 9.0;
      if (r.algo == "greedy") bound = greedy_bound;
      if (r.algo == "p-pass") {
        const double p = Param(r, "p");
        bound = 1 - std::pow(p / (p + 1), p);
      }
      ++runs;
      if (r.utility < (bound - kTol) * opt) {
        v.Fail(inst.name + " " + r.algo + " k=" + std::to_string(r.k) +
               " got " + std::to_string(r.utility / opt));
      }
      g_all_records.push_back(r);
    }
  }
  v.detail = std::to_string(suite.size()) + " instances, " +
             std::to_string(runs) + " runs" +
             (v.detail.empty() ? "" : ": " + v.detail);
  return v;
}

Verdict SieveHard() {
  Verdict v;
  const std::size_t k = 4;
  const double delta = 0.25;
  const double opt = 8.0;
  const std::vector<double> thresholds = SieveGuessThresholds(opt, k);
  const SieveHardInstance hard = GenSieveHard(k, thresholds, delta, opt);
  ExperimentConfig c;
  c.algos = {"sieve", "salsa"};
  c.ks = {k};
  c.trials = 200;
  c.base_seed = 2024;
  c.opt_mode = OptMode::kKnown;
  const std::vector<RunRecord> records = RunExperiment(hard.bundle, c);
  double sieve_sum = 0;
  double salsa_sum = 0;
  std::size_t low = 0;
  std::size_t trials = 0;
  for (const RunRecord& r : records) {
    if (r.algo == "sieve") {
      sieve_sum += r.utility;
      ++trials;
      if (r.utility <= 0.55 * opt) ++low;
    } else {
      salsa_sum += r.utility;
    }
    g_all_records.push_back(r);
  }
  const double sieve_mean = sieve_sum / static_cast<double>(trials);
  const double salsa_mean = salsa_sum / static_cast<double>(trials);
  const double low_rate = static_cast<double>(low) / static_cast<double>(trials);
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "stream %zu, sieve mean %.4f OPT, Pr[sieve<=0.55 OPT] %.3f "
                "(need >= %.2f), salsa mean %.4f OPT",
                hard.bundle.canonical_order.size(), sieve_mean / opt, low_rate,
                1 - delta - 0.05, salsa_mean / opt);
  v.detail = buf;
  if (sieve_mean > 0.55 * opt) v.Fail("sieve mean too high");
  if (low_rate < 1 - delta - 0.05) v.Fail("sieve too often above 0.55 OPT");
  if (!(salsa_mean > sieve_mean)) v.Fail("salsa mean not above sieve mean");
  return v;
}

Verdict SmallK() {
  Verdict v;
  const double floor = 1 - 1 / std::exp(1.0);
  std::string summary;
  for (std::size_t k : {2u, 3u}) {
    const std::size_t runs = 600;
    std::size_t filled = 0;
    std::map<std::uint64_t, std::pair<InstanceBundle, double>> cache;
    for (std::size_t t = 0; t < runs; ++t) {
      const std::uint64_t inst = t % 30;
      auto it = cache.find(inst);
      if (it == cache.end()) {
        InstanceBundle b = inst % 2 == 0 ? GenRandomGraph(10, 0.25, inst)
                                         : GenRandomPoints(9, 2, 500 + inst);
        const double opt = BruteForceOpt(*b.oracle, k).value;
        it = cache.emplace(inst, std::make_pair(std::move(b), opt)).first;
      }
      const auto& [bundle, opt] = it->second;
      const auto ids = Shuffle(bundle, 90'000 + t).Ids();
      const SolutionSet s = SmallKPass(*bundle.oracle, Stream(ids), k, opt);
      if (s.full()) {
        ++filled;
        if (s.value() < (floor - kTol) * opt) {
          v.Fail("k=" + std::to_string(k) + " full run below 1-1/e");
        }
      }
    }
    const double p = k == 2 ? 0.5 : 1.0 / 6.0;
    const double freq = static_cast<double>(filled) / runs;
    const double margin = 3 * std::sqrt(p * (1 - p) / runs);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "k=%zu fill %.3f (need >= %.3f)", k, freq,
                  p - margin);
    summary += (summary.empty() ? "" : ", ") + std::string(buf);
    if (freq < p - margin) v.Fail("k=" + std::to_string(k) + " fills too rarely");
  }
  v.detail = summary + (v.detail.empty() ? "" : ": " + v.detail);
  return v;
}

Verdict PPassTwoPass() {
  Verdict v;
  std::size_t compared = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const InstanceBundle b = s % 2 == 0 ? GenRandomGraph(8 + s % 8, 0.25, s)
                                        : GenRandomPoints(6 + s % 6, 3, s);
    const std::size_t k = 2 + s % 3;
    const double opt = BruteForceOpt(*b.oracle, k).value;
    const auto ids = Shuffle(b, s).Ids();
    for (double scale : {1.0, 0.8, 1.3}) {
      const SolutionSet a = PPass(*b.oracle, Stream(ids), k, opt * scale, 2);
      const SolutionSet t = TwoPass(*b.oracle, Stream(ids), k, opt * scale);
      ++compared;
      if (!std::equal(a.members().begin(), a.members().end(),
                      t.members().begin(), t.members().end())) {
        v.Fail("instance " + std::to_string(s) + " differs");
      }
    }
  }
  v.detail = "100 instances, " + std::to_string(compared) +
             " member sequences compared" +
             (v.detail.empty() ? "" : ": " + v.detail);
  return v;
}

Verdict GuessWrapper(const std::vector<SuiteInstance>& suite) {
  Verdict v;
  std::size_t runs = 0;
  double worst_vs_known = 1e9;
  for (const SuiteInstance& inst : suite) {
    ExperimentConfig known = KnownConfig({"sieve"}, 1);
    std::map<std::pair<std::size_t, std::size_t>, double> known_value;
    for (const RunRecord& r : RunExperiment(inst.bundle, known)) {
      known_value[{r.k, r.trial}] = r.utility;
    }
    for (double eps : {0.5, 0.1}) {
      ExperimentConfig c = known;
      c.algos = {"sieve", "salsa"};
      c.opt_mode = OptMode::kGuessed;
      c.eps = eps;
      c.record_opt = true;
      for (const RunRecord& r : RunExperiment(inst.bundle, c)) {
        g_all_records.push_back(r);
        if (r.algo != "sieve") continue;
        ++runs;
        const double opt = Param(r, "opt");
        const auto guesses = static_cast<std::size_t>(Param(r, "guesses"));
        const std::size_t bound = static_cast<std::size_t>(
            std::ceil(std::log(r.k / 0.5) / std::log(1 + eps) - 1e-12)) + 1;
        const std::string where = inst.name + " eps=" + std::to_string(eps) +
                                  " k=" + std::to_string(r.k);
        if (r.utility < (0.5 * (1 - eps) - kTol) * opt) {
          v.Fail(where + " below (1-eps)/2 OPT");
        }
        if (guesses > bound) v.Fail(where + " live guesses " + std::to_string(guesses));
        const double ref = known_value.at({r.k, r.trial});
        worst_vs_known = std::min(worst_vs_known, r.utility / ref);
        if (r.utility < (1 - eps) * ref * (1 - kTol)) {
          v.Fail(where + " wrapped/known " + std::to_string(r.utility / ref));
        }
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%zu wrapped runs, worst wrapped/known %.3f",
                runs, worst_vs_known);
  v.detail = buf + (v.detail.empty() ? "" : ": " + v.detail);
  return v;
}

Verdict IndexInstances() {
  Verdict v;
  const std::size_t k = 3;
  std::size_t checked = 0;
  for (std::size_t m : {3u, 4u}) {
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
      std::vector<bool> x(m);
      for (std::size_t j = 0; j < m; ++j) x[j] = (bits >> j) & 1;
      for (std::size_t i = 1; i <= m; ++i) {
        const InstanceBundle b = GenIndexInstance(m, k, x, i);
        const double expected = x[i - 1] ? 2.0 * k - 1 : static_cast<double>(k);
        const double opt = BruteForceOpt(*b.oracle, k).value;
        ++checked;
        if (opt != expected) {
          v.Fail("m=" + std::to_string(m) + " x=" + std::to_string(bits) +
                 " i=" + std::to_string(i) + " OPT " + std::to_string(opt));
        }
        // Every feasible subset of Alice's elements.
        const std::size_t alice = k * m;
        std::vector<ElementId> s;
        std::function<void(std::uint32_t)> walk = [&](std::uint32_t start) {
          if (b.oracle->Eval(s) != static_cast<double>(s.size())) {
            v.Fail("prefix query value differs from |S|");
          }
          if (s.size() == k) return;
          for (std::uint32_t e = start; e < alice; ++e) {
            s.push_back(ElementId{e});
            walk(e + 1);
            s.pop_back();
          }
        };
        walk(0);
      }
    }
  }
  v.detail = std::to_string(checked) + " (m, x, i) instances" +
             (v.detail.empty() ? "" : ": " + v.detail);
  return v;
}

Verdict OracleAudits() {
  Verdict v;
  struct Case {
    std::string name;
    InstanceBundle bundle;
  };
  std::vector<Case> small = {
      {"coverage", GenRandomGraph(6, 0.4, 1)},
      {"exemplar", GenRandomPoints(6, 3, 2)},
      {"recommendation", GenRandomRecsys(6, 3, 0.6, 3)},
      {"cellcover", GenSieveHard(2, {0.5}, 0.5, 2.0).bundle},
      {"index", GenIndexInstance(1, 3, {true}, 1)},
  };
  std::vector<Case> large = {
      {"coverage", GenRandomGraph(40, 0.1, 4)},
      {"exemplar", GenRandomPoints(30, 4, 5)},
      {"recommendation", GenRandomRecsys(30, 5, 0.3, 6)},
      {"cellcover", GenSieveHard(4, {1.5, 1.2, 0.5}, 0.9, 8.0).bundle},
      {"index", GenIndexInstance(4, 3, {true, false, true, true}, 3)},
  };
  std::size_t exhaustive = 0;
  std::size_t sampled = 0;
  for (const Case& c : small) {
    if (c.bundle.oracle->ground_size() > 6) v.Fail(c.name + " small case too big");
    const AuditReport r = AuditExhaustive(*c.bundle.oracle);
    exhaustive += r.checked;
    if (!r.passed) v.Fail(c.name + " exhaustive violation");
  }
  for (const Case& c : large) {
    const AuditReport r = AuditMonotoneSubmodular(*c.bundle.oracle, 10'000, 77);
    sampled += r.checked;
    if (!r.passed || r.checked != 10'000) v.Fail(c.name + " sampled violation");
  }
  v.detail = "5 objectives, " + std::to_string(exhaustive) +
             " exhaustive triples, " + std::to_string(sampled) +
             " sampled triples" + (v.detail.empty() ? "" : ": " + v.detail);
  return v;
}

Verdict CostBounds(const std::vector<SuiteInstance>& suite) {
  Verdict v;
  std::size_t checked = 0;
  for (const RunRecord& r : g_all_records) {
    const double n = Param(r, "n");
    const double per_element =
        static_cast<double>(r.oracle_calls) / (n * static_cast<double>(r.passes));
    const bool guessed = r.opt_estimate_mode == "guessed";
    double live = 1;
    if (guessed) {
      const double eps = Param(r, "eps");
      const double t = r.algo == "sieve" ? 0.5 : 0.475;
      live = std::ceil(std::log(r.k / t) / std::log(1 + eps) - 1e-12) + 1;
    }
    const std::string where = r.algo + " k=" + std::to_string(r.k);
    if (r.algo == "sieve") {
      ++checked;
      if (per_element > 2 * live) v.Fail(where + " oracle calls per element");
      if (r.peak_stored > r.k * live) v.Fail(where + " peak stored");
    } else if (r.algo == "salsa") {
      ++checked;
      if (per_element > 10 * live) v.Fail(where + " oracle calls per element");
      if (r.peak_stored > 5 * r.k * live) v.Fail(where + " peak stored");
    }
  }
  // Determinism: the same configuration twice gives byte-identical CSV.
  std::size_t repeats = 0;
  for (std::size_t i = 0; i < suite.size(); i += 10) {
    for (OptMode mode : {OptMode::kKnown, OptMode::kGuessed}) {
      ExperimentConfig c =
          KnownConfig({"sieve", "salsa", "two-pass", "p-pass", "greedy",
                       "lazy-greedy", "dense", "fixed", "high-low", "small-k"},
                      3);
      c.opt_mode = mode;
      c.record_opt = true;
      const std::string a = FormatCsv(RunExperiment(suite[i].bundle, c));
      const std::string b = FormatCsv(RunExperiment(suite[i].bundle, c));
      ++repeats;
      if (a != b) v.Fail(suite[i].name + " CSV differs between runs");
    }
  }
  v.detail = std::to_string(checked) + " sieve/salsa records bounded, " +
             std::to_string(repeats) + " repeated configurations identical" +
             (v.detail.empty() ? "" : ": " + v.detail);
  return v;
}

int Main() {
  const std::vector<SuiteInstance> suite = RatioInstances();
  struct Criterion {
    int id;
    const char* title;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "ratio suite", [&] { return RatioSuite(suite); }},
      {2, "sieve hard instance", SieveHard},
      {3, "small-k pass", SmallK},
      {4, "p-pass(2) equals two-pass", PPassTwoPass},
      {5, "opt-guessing wrapper", [&] { return GuessWrapper(suite); }},
      {6, "index instances", IndexInstances},
      {7, "oracle audits", OracleAudits},
      {8, "cost bounds and determinism", [&] { return CostBounds(suite); }},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.Fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %d: %s -- %s\n", v.passed ? "PASS" : "FAIL",
                c.id, c.title, v.detail.c_str());
    std::fflush(stdout);
    if (!v.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace streamsub

int main() { return streamsub::Main(); }
