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

#ifndef STREAMSUB_STREAMING_H_
#define STREAMSUB_STREAMING_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "streamsub/candidate.h"
#include "streamsub/oracle.h"
#include "streamsub/schedule.h"

namespace streamsub {

// Read-counting view over an ordered stream of element ids.
class Stream {
 public:
  explicit Stream(std::span<const ElementId> items) : items_(items) {}

  std::size_t size() const { return items_.size(); }
  ElementId Read(std::size_t i) const {
    ++reads_;
    return items_[i];
  }
  std::size_t reads() const { return reads_; }

 private:
  std::span<const ElementId> items_;
  mutable std::size_t reads_ = 0;
};

struct CandidateReport {
  std::string label;
  double value = 0.0;
  std::size_t size = 0;
};

struct StreamResult {
  SolutionSet solution{0};
  std::string winner;
  std::size_t passes = 1;
  // Maximum over time of the total number of elements held by all live
  // candidates.
  std::size_t peak_stored = 0;
  // Guess wrapper only: maximum number of simultaneously live guesses.
  std::size_t max_live_guesses = 0;
  std::vector<CandidateReport> candidates;
};

// Feeds the stream to all candidates element by element (every candidate
// finishes element i before element i+1 is read) for `passes` passes and
// returns the best solution; ties go to the earliest candidate.
StreamResult RunCandidates(const SubmodularOracle& oracle, const Stream& stream,
                           std::vector<Candidate> candidates,
                           std::size_t passes = 1);

SolutionSet SchedulePass(const SubmodularOracle& oracle, const Stream& stream,
                         std::size_t k, const ThresholdSchedule& schedule);

// Sieve-Streaming for a single OPT guess v.
SolutionSet SievePass(const SubmodularOracle& oracle, const Stream& stream,
                      std::size_t k, double v);

SolutionSet SmallKPass(const SubmodularOracle& oracle, const Stream& stream,
                       std::size_t k, double v);

// Runs dense, fixed, high-low, small-k and sieve in one pass and keeps the
// best. All five run for every k.
StreamResult Salsa(const SubmodularOracle& oracle, const Stream& stream,
                   std::size_t k, double v, const SalsaParams& params = {});

SolutionSet TwoPass(const SubmodularOracle& oracle, const Stream& stream,
                    std::size_t k, double v);

SolutionSet PPass(const SubmodularOracle& oracle, const Stream& stream,
                  std::size_t k, double v, std::size_t p);

}  // namespace streamsub

#endif  // STREAMSUB_STREAMING_H_
