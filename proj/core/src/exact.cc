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

#include "streamsub/exact.h"

#include <algorithm>
#include <limits>
#include <string>

#include "streamsub/errors.h"

namespace streamsub {
namespace {

// C(n, r), saturating at uint64 max.
std::uint64_t Binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    const std::uint64_t num = n - r + i;
    // out * num / i stays exact because out * num is divisible by i.
    if (out > kMax / num) return kMax;
    out = out * num / i;
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const SubmodularOracle& oracle, std::size_t k, bool exactly_k)
      : oracle_(oracle), n_(oracle.ground_size()), k_(k), exactly_k_(exactly_k) {
    current_.reserve(k);
  }

  OptResult Run() {
    if (!exactly_k_ || k_ == 0) {
      // The empty set is feasible and worth 0.
      best_.subsets_examined = 1;
      have_best_ = true;
    }
    Extend(0);
    return std::move(best_);
  }

 private:
  // Depth-first in lexicographic order: a set is visited before its
  // extensions, and ties keep the first maximizer seen.
  void Extend(std::uint32_t start) {
    if (current_.size() >= k_) return;
    for (std::uint32_t e = start; e < n_; ++e) {
      if (exactly_k_ && n_ - e < k_ - current_.size()) return;
      current_.push_back(ElementId{e});
      if (!exactly_k_ || current_.size() == k_) {
        const double value = oracle_.Eval(current_);
        ++best_.subsets_examined;
        if (!have_best_ || value > best_.value) {
          have_best_ = true;
          best_.value = value;
          best_.witness = current_;
        }
      }
      if (current_.size() < k_) Extend(e + 1);
      current_.pop_back();
    }
  }

  const SubmodularOracle& oracle_;
  std::size_t n_;
  std::size_t k_;
  bool exactly_k_;
  std::vector<ElementId> current_;
  OptResult best_;
  bool have_best_ = false;
};

}  // namespace

std::uint64_t CountSubsets(std::size_t n, std::size_t k, bool exactly_k) {
  k = std::min(k, n);
  if (exactly_k) return Binomial(n, k);
  std::uint64_t total = 0;
  for (std::size_t r = 0; r <= k; ++r) {
    const std::uint64_t c = Binomial(n, r);
    if (total > std::numeric_limits<std::uint64_t>::max() - c) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total += c;
  }
  return total;
}

OptResult BruteForceOpt(const SubmodularOracle& oracle, std::size_t k,
                        const BruteForceOptions& options) {
  k = std::min(k, oracle.ground_size());
  const std::uint64_t count =
      CountSubsets(oracle.ground_size(), k, options.assume_monotone);
  if (count > options.max_subsets) {
    throw SizeError("brute force needs " + std::to_string(count) +
                        " subsets, limit is " +
                        std::to_string(options.max_subsets),
                    count, options.max_subsets);
  }
  return Enumerator(oracle, k, options.assume_monotone).Run();
}

RatioCheck VerifyRatio(double value, double opt, double bound) {
  if (!(opt > 0.0)) throw ParameterError("optimum must be positive");
  RatioCheck out;
  out.ratio = value / opt;
  out.slack = value - bound * opt;
  out.passed = value >= (bound - 1e-9) * opt;
  return out;
}

}  // namespace streamsub
