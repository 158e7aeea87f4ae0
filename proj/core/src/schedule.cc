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

#include "streamsub/schedule.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "streamsub/errors.h"

namespace streamsub {
namespace {

void RequirePositiveK(std::size_t k) {
  if (k == 0) throw ParameterError("cardinality k must be positive");
}

// Two-piece schedule that collapses to one piece when beta is 0 or 1.
ThresholdSchedule TwoPhase(double beta, double high, double low,
                           std::size_t n) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw ParameterError("beta must lie in [0, 1]");
  }
  if (beta >= 1.0) return ThresholdSchedule({{1.0, high}}, n);
  if (beta <= 0.0) return ThresholdSchedule({{1.0, low}}, n);
  return ThresholdSchedule({{beta, high}, {1.0, low}}, n);
}

}  // namespace

ThresholdSchedule::ThresholdSchedule(std::vector<Breakpoint> pieces,
                                     std::size_t length)
    : pieces_(std::move(pieces)), length_(length) {
  if (pieces_.empty()) throw ParameterError("schedule needs at least one piece");
  double previous = 0.0;
  for (const Breakpoint& b : pieces_) {
    if (!(b.fraction > previous)) {
      throw ParameterError("schedule fractions must be strictly increasing");
    }
    if (!(b.threshold >= 0.0) || !std::isfinite(b.threshold)) {
      throw ParameterError("schedule thresholds must be finite and >= 0");
    }
    previous = b.fraction;
  }
  if (pieces_.back().fraction != 1.0) {
    throw ParameterError("last schedule fraction must be 1.0");
  }
}

ThresholdSchedule ThresholdSchedule::Flat(double threshold, std::size_t length) {
  return ThresholdSchedule({{1.0, threshold}}, length);
}

double ThresholdSchedule::At(std::size_t position) const {
  if (length_ == 0) return pieces_.back().threshold;
  const double at = static_cast<double>(position) / static_cast<double>(length_);
  for (const Breakpoint& b : pieces_) {
    if (at <= b.fraction) return b.threshold;
  }
  return pieces_.back().threshold;
}

double ThresholdSchedule::MinThreshold() const {
  double lowest = pieces_.front().threshold;
  for (const Breakpoint& b : pieces_) lowest = std::min(lowest, b.threshold);
  return lowest;
}

ThresholdSchedule MakeDenseSchedule(double v, std::size_t k, std::size_t n,
                                    double c1, double c2, double beta) {
  RequirePositiveK(k);
  if (!(c1 > 0.0) || !(c2 > 0.0)) {
    throw ParameterError("dense constants C1, C2 must be positive");
  }
  const double kd = static_cast<double>(k);
  return TwoPhase(beta, c1 * v / kd, v / (c2 * kd), n);
}

ThresholdSchedule MakeFixedSchedule(double v, std::size_t k, std::size_t n,
                                    double eps) {
  RequirePositiveK(k);
  return ThresholdSchedule::Flat((0.5 + eps) * v / static_cast<double>(k), n);
}

ThresholdSchedule MakeHighLowSchedule(double v, std::size_t k, std::size_t n,
                                      double beta, double eps, double delta) {
  RequirePositiveK(k);
  if (delta > 0.5) throw ParameterError("delta must not exceed 1/2");
  const double kd = static_cast<double>(k);
  return TwoPhase(beta, (0.5 + eps) * v / kd, (0.5 - delta) * v / kd, n);
}

SalsaParams SalsaParams::Icml() { return SalsaParams{}; }

SalsaParams SalsaParams::Analysis() {
  SalsaParams p;
  p.preset = "analysis";
  p.dense_c1 = 100.0;
  p.dense_c2 = 10.0;
  p.dense_beta = 0.9;
  // Thresholds (1 + 1e-8)/2 * v/k and (1 - 3e-11)/2 * v/k.
  p.fixed_eps = 0.5e-8;
  p.highlow_beta = 1e-3;
  p.highlow_eps = 0.5e-8;
  p.highlow_delta = 1.5e-11;
  return p;
}

SalsaParams SalsaParams::FromPreset(std::string_view name) {
  if (name == "icml") return Icml();
  if (name == "analysis") return Analysis();
  throw ParameterError("unknown preset '" + std::string(name) +
                       "' (expected icml or analysis)");
}

void SalsaParams::Validate() const {
  const bool positive = dense_c1 > 0 && dense_c2 > 0 && fixed_eps > 0 &&
                        highlow_eps > 0 && highlow_delta > 0;
  if (!positive) throw ParameterError("SALSA constants must be positive");
  if (!(dense_beta > 0 && dense_beta < 1) ||
      !(highlow_beta > 0 && highlow_beta < 1)) {
    throw ParameterError("SALSA beta values must lie in (0, 1)");
  }
  if (highlow_delta >= 0.5) {
    throw ParameterError("SALSA delta must be below 1/2");
  }
}

double SalsaParams::MinThresholdCoefficient() const {
  return std::min({dense_c1, 1.0 / dense_c2, 0.5 + fixed_eps,
                   0.5 + highlow_eps, 0.5 - highlow_delta,
                   1.0,    // small-k starts at v/k
                   0.5});  // sieve starts at v/(2k)
}

}  // namespace streamsub
