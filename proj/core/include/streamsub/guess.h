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

#ifndef STREAMSUB_GUESS_H_
#define STREAMSUB_GUESS_H_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "streamsub/candidate.h"
#include "streamsub/oracle.h"
#include "streamsub/schedule.h"
#include "streamsub/streaming.h"

namespace streamsub {

// Builds the candidates an algorithm runs for one OPT guess v.
struct GuessFactory {
  std::string label;
  // T such that no candidate accepts an element of marginal gain below
  // T * v / k before its solution is non-empty.
  double min_threshold_coefficient = 0.5;
  std::size_t passes = 1;
  std::function<std::vector<Candidate>(double v)> make;
};

GuessFactory SieveFactory(std::size_t k);
GuessFactory SalsaFactory(std::size_t k, std::size_t n,
                          const SalsaParams& params = {});
GuessFactory TwoPassFactory(std::size_t k);
GuessFactory PPassFactory(std::size_t k, std::size_t p);
// Any single candidate kind by label: "dense", "fixed", "high-low",
// "small-k", "sieve".
GuessFactory SingleCandidateFactory(const std::string& label, std::size_t k,
                                    std::size_t n, const SalsaParams& params);

// Exponents j with m <= (1+eps)^j <= k*m/t_min, ascending. Empty for m <= 0.
std::vector<int> GuessExponents(double m, std::size_t k, double eps,
                                double t_min);

// ceil(log_{1+eps}(k / t_min)) + 1: the most guesses ever live at once.
std::size_t MaxLiveGuesses(std::size_t k, double eps, double t_min);

// Runs the factory's candidates for every guess (1+eps)^j in
// [m_i, k*m_i/T], where m_i is the largest singleton value seen so far.
// Guesses that leave the range are dropped with their candidates; new
// guesses start from empty sets at the current element, using global
// stream positions. Later passes (multi-pass factories) continue the
// guesses alive at the end of the first pass. Throws ParameterError when
// eps <= 0.
StreamResult GuessOpt(const GuessFactory& factory,
                      const SubmodularOracle& oracle, const Stream& stream,
                      std::size_t k, double eps);

}  // namespace streamsub

#endif  // STREAMSUB_GUESS_H_
