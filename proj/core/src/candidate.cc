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

#include "streamsub/candidate.h"

#include <cmath>
#include <limits>
#include <utility>

#include "streamsub/errors.h"

namespace streamsub {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Candidate::Candidate(std::string label, std::size_t k, ThresholdRule rule)
    : label_(std::move(label)), k_(k), rule_(std::move(rule)), solution_(k) {
  if (k == 0) throw ParameterError("cardinality k must be positive");
}

double Candidate::Threshold(std::size_t position, std::size_t pass) const {
  const double kd = static_cast<double>(k_);
  return std::visit(
      Overloaded{
          [&](const ScheduleRule& r) { return r.schedule.At(position); },
          [&](const PassRule& r) {
            return pass < r.thresholds.size()
                       ? r.thresholds[pass]
                       : std::numeric_limits<double>::infinity();
          },
          [&](const SieveRule& r) {
            // Only consulted while |S| < k, so the divisor is positive.
            return (r.guess / 2.0 - solution_.value()) /
                   static_cast<double>(k_ - solution_.size());
          },
          [&](const SmallKRule& r) {
            return (r.guess - solution_.value()) / kd;
          },
      },
      rule_);
}

bool Candidate::Offer(const SubmodularOracle& oracle, ElementId e,
                      std::size_t position, std::size_t pass) {
  if (solution_.full() || solution_.Contains(e)) return false;
  const double threshold = Threshold(position, pass);
  if (std::isinf(threshold)) return false;
  const GainProbe probe = ProbeGain(oracle, e, solution_);
  if (!(probe.gain >= threshold)) return false;
  solution_.Insert(e, probe.value_with, threshold);
  return true;
}

std::size_t Candidate::passes() const {
  if (const auto* r = std::get_if<PassRule>(&rule_)) {
    return r->thresholds.size();
  }
  return 1;
}

Candidate MakeScheduleCandidate(std::string label, std::size_t k,
                                ThresholdSchedule schedule) {
  return Candidate(std::move(label), k, ScheduleRule{std::move(schedule)});
}

Candidate MakeSieveCandidate(double v, std::size_t k) {
  return Candidate("sieve", k, SieveRule{v});
}

Candidate MakeSmallKCandidate(double v, std::size_t k) {
  return Candidate("small-k", k, SmallKRule{v});
}

Candidate MakeTwoPassCandidate(double v, std::size_t k) {
  const double kd = static_cast<double>(k);
  return Candidate("two-pass", k,
                   PassRule{{2.0 * v / (3.0 * kd), 4.0 * v / (9.0 * kd)}});
}

Candidate MakePPassCandidate(double v, std::size_t k, std::size_t p) {
  if (p == 0) throw ParameterError("number of passes must be positive");
  const double kd = static_cast<double>(k);
  std::vector<double> thresholds;
  thresholds.reserve(p);
  double num = 1.0;
  double den = 1.0;
  for (std::size_t i = 1; i <= p; ++i) {
    num *= static_cast<double>(p);
    den *= static_cast<double>(p + 1);
    thresholds.push_back(num * v / (den * kd));
  }
  return Candidate("p-pass", k, PassRule{std::move(thresholds)});
}

std::vector<Candidate> MakeSalsaCandidates(double v, std::size_t k,
                                           std::size_t n,
                                           const SalsaParams& params) {
  params.Validate();
  std::vector<Candidate> out;
  out.reserve(5);
  out.push_back(MakeScheduleCandidate(
      "dense", k,
      MakeDenseSchedule(v, k, n, params.dense_c1, params.dense_c2,
                        params.dense_beta)));
  out.push_back(MakeScheduleCandidate(
      "fixed", k, MakeFixedSchedule(v, k, n, params.fixed_eps)));
  out.push_back(MakeScheduleCandidate(
      "high-low", k,
      MakeHighLowSchedule(v, k, n, params.highlow_beta, params.highlow_eps,
                          params.highlow_delta)));
  out.push_back(MakeSmallKCandidate(v, k));
  out.push_back(MakeSieveCandidate(v, k));
  return out;
}

}  // namespace streamsub
