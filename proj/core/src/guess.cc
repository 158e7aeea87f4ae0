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

#include "streamsub/guess.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "streamsub/errors.h"

namespace streamsub {
namespace {

struct LiveGuess {
  int exponent = 0;
  std::vector<Candidate> candidates;
};

void RequireEps(double eps) {
  if (!(eps > 0.0)) throw ParameterError("epsilon must be positive");
}

}  // namespace

GuessFactory SieveFactory(std::size_t k) {
  return GuessFactory{"sieve", 0.5, 1, [k](double v) {
                        std::vector<Candidate> out;
                        out.push_back(MakeSieveCandidate(v, k));
                        return out;
                      }};
}

GuessFactory SalsaFactory(std::size_t k, std::size_t n,
                          const SalsaParams& params) {
  params.Validate();
  return GuessFactory{"salsa", params.MinThresholdCoefficient(), 1,
                      [k, n, params](double v) {
                        return MakeSalsaCandidates(v, k, n, params);
                      }};
}

GuessFactory TwoPassFactory(std::size_t k) {
  return GuessFactory{"two-pass", 4.0 / 9.0, 2, [k](double v) {
                        std::vector<Candidate> out;
                        out.push_back(MakeTwoPassCandidate(v, k));
                        return out;
                      }};
}

GuessFactory PPassFactory(std::size_t k, std::size_t p) {
  if (p == 0) throw ParameterError("number of passes must be positive");
  const double ratio = static_cast<double>(p) / static_cast<double>(p + 1);
  return GuessFactory{"p-pass", std::pow(ratio, static_cast<double>(p)), p,
                      [k, p](double v) {
                        std::vector<Candidate> out;
                        out.push_back(MakePPassCandidate(v, k, p));
                        return out;
                      }};
}

GuessFactory SingleCandidateFactory(const std::string& label, std::size_t k,
                                    std::size_t n, const SalsaParams& params) {
  if (label == "sieve") return SieveFactory(k);
  params.Validate();
  if (label == "small-k") {
    return GuessFactory{label, 1.0, 1, [k](double v) {
                          std::vector<Candidate> out;
                          out.push_back(MakeSmallKCandidate(v, k));
                          return out;
                        }};
  }
  double t_min = 0.0;
  if (label == "dense") {
    t_min = std::min(params.dense_c1, 1.0 / params.dense_c2);
  } else if (label == "fixed") {
    t_min = 0.5 + params.fixed_eps;
  } else if (label == "high-low") {
    t_min = std::min(0.5 + params.highlow_eps, 0.5 - params.highlow_delta);
  } else {
    throw ParameterError("unknown candidate label '" + label + "'");
  }
  return GuessFactory{label, t_min, 1, [label, k, n, params](double v) {
                        std::vector<Candidate> all =
                            MakeSalsaCandidates(v, k, n, params);
                        std::vector<Candidate> out;
                        for (Candidate& c : all) {
                          if (c.label() == label) out.push_back(std::move(c));
                        }
                        return out;
                      }};
}

std::vector<int> GuessExponents(double m, std::size_t k, double eps,
                                double t_min) {
  RequireEps(eps);
  if (!(m > 0.0)) return {};
  if (!(t_min > 0.0)) throw ParameterError("threshold coefficient must be > 0");
  const double base = 1.0 + eps;
  const double upper = static_cast<double>(k) * m / t_min;
  const double log_base = std::log(base);
  int lo = static_cast<int>(std::ceil(std::log(m) / log_base));
  int hi = static_cast<int>(std::floor(std::log(upper) / log_base));
  // The logarithms can land one step off near exact powers.
  while (std::pow(base, lo) < m) ++lo;
  while (std::pow(base, lo - 1) >= m) --lo;
  while (std::pow(base, hi) > upper) --hi;
  while (std::pow(base, hi + 1) <= upper) ++hi;
  std::vector<int> out;
  for (int j = lo; j <= hi; ++j) out.push_back(j);
  return out;
}

std::size_t MaxLiveGuesses(std::size_t k, double eps, double t_min) {
  RequireEps(eps);
  const double span = std::log(static_cast<double>(k) / t_min) /
                      std::log(1.0 + eps);
  return static_cast<std::size_t>(std::ceil(span - 1e-12)) + 1;
}

StreamResult GuessOpt(const GuessFactory& factory,
                      const SubmodularOracle& oracle, const Stream& stream,
                      std::size_t k, double eps) {
  RequireEps(eps);
  if (k == 0) throw ParameterError("cardinality k must be positive");
  const double base = 1.0 + eps;
  std::vector<LiveGuess> live;
  StreamResult result;
  result.passes = factory.passes;
  double max_singleton = 0.0;

  auto offer_all = [&](ElementId e, std::size_t position, std::size_t pass) {
    std::size_t stored = 0;
    for (LiveGuess& g : live) {
      for (Candidate& c : g.candidates) {
        c.Offer(oracle, e, position, pass);
        stored += c.solution().size();
      }
    }
    result.peak_stored = std::max(result.peak_stored, stored);
  };

  for (std::size_t i = 0; i < stream.size(); ++i) {
    const ElementId e = stream.Read(i);
    const double single = oracle.EvalSingleton(e);
    if (single > max_singleton) {
      max_singleton = single;
      const std::vector<int> range = GuessExponents(
          max_singleton, k, eps, factory.min_threshold_coefficient);
      std::erase_if(live, [&](const LiveGuess& g) {
        return !std::binary_search(range.begin(), range.end(), g.exponent);
      });
      std::vector<LiveGuess> next;
      next.reserve(range.size());
      auto it = live.begin();
      for (int j : range) {
        if (it != live.end() && it->exponent == j) {
          next.push_back(std::move(*it++));
        } else {
          next.push_back(LiveGuess{j, factory.make(std::pow(base, j))});
        }
      }
      live = std::move(next);
    }
    result.max_live_guesses = std::max(result.max_live_guesses, live.size());
    offer_all(e, i + 1, 0);
  }
  for (std::size_t pass = 1; pass < factory.passes; ++pass) {
    for (std::size_t i = 0; i < stream.size(); ++i) {
      offer_all(stream.Read(i), i + 1, pass);
    }
  }

  const Candidate* best = nullptr;
  for (const LiveGuess& g : live) {
    for (const Candidate& c : g.candidates) {
      result.candidates.push_back(CandidateReport{
          std::string(c.label()) + "@" + std::to_string(g.exponent),
          c.solution().value(), c.solution().size()});
      if (best == nullptr || c.solution().value() > best->solution().value()) {
        best = &c;
      }
    }
  }
  if (best == nullptr) {
    result.solution = SolutionSet(k);
    result.winner = "none";
    return result;
  }
  result.winner = std::string(best->label());
  result.solution = best->solution();
  return result;
}

}  // namespace streamsub
