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

#ifndef STREAMSUB_EXACT_H_
#define STREAMSUB_EXACT_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "streamsub/oracle.h"

namespace streamsub {

struct BruteForceOptions {
  // Enumerate only sets of size exactly min(k, n). Valid for monotone
  // oracles, whose maxima are attained at full cardinality.
  bool assume_monotone = false;
  std::uint64_t max_subsets = 5'000'000;
};

struct OptResult {
  double value = 0.0;
  // Lexicographically least maximizer, ascending ids.
  std::vector<ElementId> witness;
  std::uint64_t subsets_examined = 0;
};

// Number of subsets BruteForceOpt would enumerate.
std::uint64_t CountSubsets(std::size_t n, std::size_t k, bool exactly_k);

// Exact max of f over feasible sets. Throws SizeError when the subset count
// exceeds options.max_subsets.
OptResult BruteForceOpt(const SubmodularOracle& oracle, std::size_t k,
                        const BruteForceOptions& options = {});

struct RatioCheck {
  bool passed = false;
  double ratio = 0.0;  // value / opt
  double slack = 0.0;  // value - bound * opt
};

// Passes iff value >= (bound - 1e-9) * opt. Throws ParameterError if
// opt <= 0.
RatioCheck VerifyRatio(double value, double opt, double bound);

}  // namespace streamsub

#endif  // STREAMSUB_EXACT_H_
