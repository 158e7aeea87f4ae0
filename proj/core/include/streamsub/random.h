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

#ifndef STREAMSUB_RANDOM_H_
#define STREAMSUB_RANDOM_H_

#include <cstdint>
#include <random>

namespace streamsub {

// Seeded generator with platform-independent derived draws. The standard
// distributions are implementation-defined, so everything that feeds a
// reproducible artifact (instances, shuffles, audits) goes through here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound);

  // Standard normal via Box-Muller.
  double Normal();

  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace streamsub

#endif  // STREAMSUB_RANDOM_H_
