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

// Command-line front end: gen, run, opt, audit, verify.
//
// Exit status: 0 on success, 2 when a verification or audit fails, 1 on
// usage or data errors.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "streamsub/errors.h"
#include "streamsub/exact.h"
#include "streamsub/harness.h"
#include "streamsub/instance_io.h"
#include "streamsub/instances.h"

namespace {

using namespace streamsub;

struct SourceFlags {
  std::string instance;
  std::string synthetic;
  bool open_neighborhood = false;
};

struct RunFlags {
  std::vector<std::string> algos = {"sieve", "salsa"};
  std::vector<std::size_t> ks;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  double epsilon = 0.1;
  std::size_t passes = 3;
  std::string opt_mode = "guessed";
  bool shuffle = false;
  bool fixed_order = false;
  std::string out = "-";
  std::string format = "csv";
  std::string preset = "icml";
  bool timing = false;
};

void AddSource(CLI::App* cmd, SourceFlags& f) {
  auto* inst = cmd->add_option(
      "--instance", f.instance,
      "Instance JSON, or edges:PATH, points:PATH, "
      "recsys:MOVIES,USERS,ROW,ALPHA");
  auto* syn = cmd->add_option(
      "--synthetic", f.synthetic,
      "Generator spec, e.g. graph:n=12,p=0.3 or sieve-hard:k=4,delta=0.25,opt=8");
  inst->excludes(syn);
  syn->excludes(inst);
  cmd->add_flag("--open-neighborhood", f.open_neighborhood,
                "Coverage counts neighbors only, not the chosen vertices");
}

InstanceBundle LoadSource(const SourceFlags& f, std::uint64_t seed) {
  if (!f.synthetic.empty()) return ParseSynthetic(f.synthetic, seed);
  if (!f.instance.empty()) return OpenInstance(f.instance, f.open_neighborhood);
  throw ParameterError("one of --instance or --synthetic is required");
}

void AddRunFlags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--algo", f.algos, "Comma-separated algorithm labels")
      ->delimiter(',');
  cmd->add_option("--k", f.ks, "Comma-separated cardinalities")->delimiter(',');
  cmd->add_option("--trials", f.trials, "Trials per (algo, k)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Base seed; trial t uses seed + t");
  cmd->add_option("--epsilon", f.epsilon, "Guess grid spacing")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--passes", f.passes, "p for p-pass")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--opt-mode", f.opt_mode, "known or guessed")
      ->check(CLI::IsMember({"known", "guessed"}));
  auto* shuffle = cmd->add_flag("--shuffle", f.shuffle,
                                "Shuffle the stream (default for synthetic)");
  auto* fixed = cmd->add_flag("--fixed-order", f.fixed_order,
                              "Stream in canonical order");
  shuffle->excludes(fixed);
  cmd->add_option("--out", f.out, "Output path, - for stdout");
  cmd->add_option("--format", f.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--preset", f.preset, "SALSA constants: icml or analysis")
      ->check(CLI::IsMember({"icml", "analysis"}));
  cmd->add_flag("--timing", f.timing, "Record wall-clock milliseconds");
}

ExperimentConfig ToConfig(const RunFlags& f, const InstanceBundle& bundle) {
  ExperimentConfig c;
  c.algos = f.algos;
  c.ks = f.ks;
  if (c.ks.empty()) {
    if (bundle.k == 0) throw ParameterError("--k is required for this instance");
    c.ks = {bundle.k};
  }
  c.trials = f.trials;
  c.base_seed = f.seed;
  c.opt_mode = ParseOptMode(f.opt_mode);
  c.eps = f.epsilon;
  c.passes = f.passes;
  c.preset = f.preset;
  if (f.shuffle) c.shuffle = true;
  if (f.fixed_order) c.shuffle = false;
  c.timing = f.timing;
  return c;
}

void PrintReport(const SuiteReport& report) {
  for (const std::string& failure : report.failures) {
    std::cerr << "FAIL " << failure << '\n';
  }
  std::cerr << "verify: " << report.checked << " checked, " << report.skipped
            << " without a bound, " << report.failures.size() << " failed\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming submodular maximization toolkit"};
  app.require_subcommand(1);

  SourceFlags source;
  RunFlags run;
  std::string out_path;
  std::uint64_t seed = 0;

  auto* gen = app.add_subcommand("gen", "Write an instance to a JSON file");
  AddSource(gen, source);
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--out", out_path, "Output JSON path")->required();

  auto* run_cmd = app.add_subcommand("run", "Run experiments");
  AddSource(run_cmd, source);
  AddRunFlags(run_cmd, run);

  std::vector<std::size_t> opt_ks;
  auto* opt = app.add_subcommand("opt", "Brute-force optimum");
  AddSource(opt, source);
  opt->add_option("--seed", seed, "Generator seed");
  opt->add_option("--k", opt_ks, "Comma-separated cardinalities")
      ->delimiter(',');

  std::size_t samples = 10'000;
  auto* audit = app.add_subcommand("audit", "Check monotonicity and submodularity");
  AddSource(audit, source);
  audit->add_option("--seed", seed, "Sampling seed");
  audit->add_option("--samples", samples, "Random triples to check");

  std::string results;
  auto* verify = app.add_subcommand(
      "verify", "Check approximation bounds (runs in known mode by default)");
  AddSource(verify, source);
  AddRunFlags(verify, run);
  verify->add_option("--results", results,
                     "Verify an existing CSV/JSON results file instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) {
      SaveInstance(LoadSource(source, seed), out_path);
      return 0;
    }
    if (run_cmd->parsed()) {
      const InstanceBundle bundle = LoadSource(source, run.seed);
      EmitResults(RunExperiment(bundle, ToConfig(run, bundle)), run.format,
                  run.out);
      return 0;
    }
    if (opt->parsed()) {
      const InstanceBundle bundle = LoadSource(source, seed);
      if (opt_ks.empty()) {
        if (bundle.k == 0) throw ParameterError("--k is required");
        opt_ks = {bundle.k};
      }
      for (std::size_t k : opt_ks) {
        const OptResult r = BruteForceOpt(*bundle.oracle, k);
        std::cout << "k=" << k << " opt=" << r.value << " witness=";
        for (std::size_t i = 0; i < r.witness.size(); ++i) {
          std::cout << (i ? "," : "") << r.witness[i].index;
        }
        std::cout << " subsets=" << r.subsets_examined << '\n';
      }
      return 0;
    }
    if (audit->parsed()) {
      const InstanceBundle bundle = LoadSource(source, seed);
      const bool exhaustive = bundle.oracle->ground_size() <= 12;
      const AuditReport r =
          exhaustive ? AuditExhaustive(*bundle.oracle)
                     : AuditMonotoneSubmodular(*bundle.oracle, samples, seed);
      std::cout << (exhaustive ? "exhaustive" : "sampled") << " audit of "
                << bundle.oracle->Name() << ": " << r.checked << " triples, "
                << (r.passed ? "no violations" : "VIOLATION") << '\n';
      if (r.first_violation) {
        const AuditViolation& v = *r.first_violation;
        std::cout << "  element " << v.element.index << ": f(e|X)="
                  << v.gain_smaller << " f(e|Y)=" << v.gain_larger << '\n';
      }
      return r.passed ? 0 : 2;
    }
    if (verify->parsed()) {
      std::vector<RunRecord> records;
      if (!results.empty()) {
        records = ReadResults(results);
      } else {
        const InstanceBundle bundle = LoadSource(source, run.seed);
        if (verify->count("--opt-mode") == 0) run.opt_mode = "known";
        ExperimentConfig c = ToConfig(run, bundle);
        c.record_opt = true;
        records = RunExperiment(bundle, c);
        if (verify->count("--out") > 0) {
          EmitResults(records, run.format, run.out);
        }
      }
      const SuiteReport report = VerifySuite(records);
      PrintReport(report);
      return report.ExitStatus();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
