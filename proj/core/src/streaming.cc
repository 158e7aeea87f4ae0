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

#include "streamsub/streaming.h"

#include <algorithm>
#include <utility>

#include "streamsub/errors.h"

namespace streamsub {

StreamResult RunCandidates(const SubmodularOracle& oracle, const Stream& stream,
                           std::vector<Candidate> candidates,
                           std::size_t passes) {
  if (candidates.empty()) throw ParameterError("no candidates to run");
  StreamResult result;
  result.passes = passes;
  for (std::size_t pass = 0; pass < passes; ++pass) {
    for (std::size_t i = 0; i < stream.size(); ++i) {
      const ElementId e = stream.Read(i);
      std::size_t stored = 0;
      for (Candidate& c : candidates) {
        c.Offer(oracle, e, i + 1, pass);
        stored += c.solution().size();
      }
      result.peak_stored = std::max(result.peak_stored, stored);
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const SolutionSet& s = candidates[i].solution();
    result.candidates.push_back(
        CandidateReport{std::string(candidates[i].label()), s.value(), s.size()});
    if (s.value() > candidates[best].solution().value()) best = i;
  }
  result.winner = std::string(candidates[best].label());
  result.solution = std::move(candidates[best]).TakeSolution();
  return result;
}

SolutionSet SchedulePass(const SubmodularOracle& oracle, const Stream& stream,
                         std::size_t k, const ThresholdSchedule& schedule) {
  std::vector<Candidate> one;
  one.push_back(MakeScheduleCandidate("schedule", k, schedule));
  return RunCandidates(oracle, stream, std::move(one)).solution;
}

SolutionSet SievePass(const SubmodularOracle& oracle, const Stream& stream,
                      std::size_t k, double v) {
  if (!(v > 0.0)) throw ParameterError("sieve guess must be positive");
  std::vector<Candidate> one;
  one.push_back(MakeSieveCandidate(v, k));
  return RunCandidates(oracle, stream, std::move(one)).solution;
}

SolutionSet SmallKPass(const SubmodularOracle& oracle, const Stream& stream,
                       std::size_t k, double v) {
  std::vector<Candidate> one;
  one.push_back(MakeSmallKCandidate(v, k));
  return RunCandidates(oracle, stream, std::move(one)).solution;
}

StreamResult Salsa(const SubmodularOracle& oracle, const Stream& stream,
                   std::size_t k, double v, const SalsaParams& params) {
  return RunCandidates(oracle, stream,
                       MakeSalsaCandidates(v, k, stream.size(), params));
}

SolutionSet TwoPass(const SubmodularOracle& oracle, const Stream& stream,
                    std::size_t k, double v) {
  std::vector<Candidate> one;
  one.push_back(MakeTwoPassCandidate(v, k));
  return RunCandidates(oracle, stream, std::move(one), 2).solution;
}

SolutionSet PPass(const SubmodularOracle& oracle, const Stream& stream,
                  std::size_t k, double v, std::size_t p) {
  std::vector<Candidate> one;
  one.push_back(MakePPassCandidate(v, k, p));
  return RunCandidates(oracle, stream, std::move(one), p).solution;
}

}  // namespace streamsub
