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

#ifndef STREAMSUB_SCHEDULE_H_
#define STREAMSUB_SCHEDULE_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace streamsub {

// One piece of a threshold schedule: positions i with i/n <= fraction (and
// above the previous piece's fraction) use `threshold`.
struct Breakpoint {
  double fraction = 1.0;
  double threshold = 0.0;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Piecewise-constant threshold over stream positions 1..n.
class ThresholdSchedule {
 public:
  // Fractions must be strictly increasing and end at 1.0; thresholds must
  // be non-negative. Throws ParameterError otherwise.
  ThresholdSchedule(std::vector<Breakpoint> pieces, std::size_t length);

  static ThresholdSchedule Flat(double threshold, std::size_t length);

  // Threshold for 1-based stream position `position`.
  double At(std::size_t position) const;

  std::span<const Breakpoint> pieces() const { return pieces_; }
  std::size_t length() const { return length_; }
  double MinThreshold() const;

 private:
  std::vector<Breakpoint> pieces_;
  std::size_t length_;
};

// High threshold c1*v/k on the first beta fraction, then v/(c2*k).
ThresholdSchedule MakeDenseSchedule(double v, std::size_t k, std::size_t n,
                                    double c1, double c2, double beta);

// Single threshold (1/2 + eps) * v/k.
ThresholdSchedule MakeFixedSchedule(double v, std::size_t k, std::size_t n,
                                    double eps);

// (1/2 + eps) * v/k on the first beta fraction, then (1/2 - delta) * v/k.
ThresholdSchedule MakeHighLowSchedule(double v, std::size_t k, std::size_t n,
                                      double beta, double eps, double delta);

// Constants for the three schedule procedures run inside SALSA.
struct SalsaParams {
  std::string preset = "icml";
  double dense_c1 = 10.0;
  double dense_c2 = 0.2;
  double dense_beta = 0.8;
  double fixed_eps = 1.0 / 6.0;
  double highlow_beta = 0.1;
  double highlow_eps = 0.05;
  double highlow_delta = 0.025;

  // Constants used in the experiments.
  static SalsaParams Icml();
  // Constants from the approximation analysis.
  static SalsaParams Analysis();
  // "icml" or "analysis"; throws ParameterError otherwise.
  static SalsaParams FromPreset(std::string_view name);

  void Validate() const;

  // Smallest initial threshold coefficient T (threshold = T * v / k) over
  // the five SALSA candidates.
  double MinThresholdCoefficient() const;
};

}  // namespace streamsub

#endif  // STREAMSUB_SCHEDULE_H_
