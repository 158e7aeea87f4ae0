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

#ifndef STREAMSUB_CANDIDATE_H_
#define STREAMSUB_CANDIDATE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "streamsub/oracle.h"
#include "streamsub/schedule.h"

namespace streamsub {

// Threshold depends on the stream position (dense / fixed / high-low).
struct ScheduleRule {
  ThresholdSchedule schedule;
};

// One flat threshold per pass (two-pass, p-pass).
struct PassRule {
  std::vector<double> thresholds;
};

// (v/2 - f(S)) / (k - |S|).
struct SieveRule {
  double guess = 0.0;
};

// (v - f(S)) / k.
struct SmallKRule {
  double guess = 0.0;
};

using ThresholdRule = std::variant<ScheduleRule, PassRule, SieveRule, SmallKRule>;

// One threshold-greedy solution under construction. Every insertion
// records the threshold it cleared, so the rule can be audited afterwards.
class Candidate {
 public:
  Candidate(std::string label, std::size_t k, ThresholdRule rule);

  // Offers the element at 1-based stream position `position` during the
  // 0-based pass `pass`. Adds it iff |S| < k, it is not already in S, and
  // f(e | S) >= Threshold(position, pass). Queries only sets of size <= k.
  bool Offer(const SubmodularOracle& oracle, ElementId e, std::size_t position,
             std::size_t pass = 0);

  double Threshold(std::size_t position, std::size_t pass) const;

  std::string_view label() const { return label_; }
  const ThresholdRule& rule() const { return rule_; }
  const SolutionSet& solution() const { return solution_; }
  SolutionSet TakeSolution() && { return std::move(solution_); }
  std::size_t passes() const;

 private:
  std::string label_;
  std::size_t k_;
  ThresholdRule rule_;
  SolutionSet solution_;
};

Candidate MakeScheduleCandidate(std::string label, std::size_t k,
                                ThresholdSchedule schedule);
Candidate MakeSieveCandidate(double v, std::size_t k);
Candidate MakeSmallKCandidate(double v, std::size_t k);
// Thresholds 2v/(3k) then 4v/(9k).
Candidate MakeTwoPassCandidate(double v, std::size_t k);
// Pass i (1-based) uses (p/(p+1))^i * v/k, evaluated as p^i v / ((p+1)^i k)
// so that p = 2 reproduces the two-pass thresholds bit for bit.
Candidate MakePPassCandidate(double v, std::size_t k, std::size_t p);

// Dense, fixed, high-low, small-k, sieve, in that order.
std::vector<Candidate> MakeSalsaCandidates(double v, std::size_t k,
                                           std::size_t n,
                                           const SalsaParams& params);

}  // namespace streamsub

#endif  // STREAMSUB_CANDIDATE_H_
