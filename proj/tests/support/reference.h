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

#ifndef STREAMSUB_TESTS_SUPPORT_REFERENCE_H_
#define STREAMSUB_TESTS_SUPPORT_REFERENCE_H_

// Deliberately naive re-implementations used as test oracles. Nothing here
// shares code with the library.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "streamsub/objectives.h"
#include "streamsub/oracle.h"

namespace streamsub::testing {

// Closed-neighborhood coverage from a bitmask adjacency (n <= 64).
inline double RefCoverage(std::size_t n,
                          const std::vector<std::pair<int, int>>& edges,
                          const std::vector<int>& set) {
  std::vector<std::uint64_t> mask(n);
  for (std::size_t v = 0; v < n; ++v) mask[v] = std::uint64_t{1} << v;
  for (auto [u, v] : edges) {
    mask[u] |= std::uint64_t{1} << v;
    mask[v] |= std::uint64_t{1} << u;
  }
  std::uint64_t covered = 0;
  for (int v : set) covered |= mask[v];
  return static_cast<double>(__builtin_popcountll(covered));
}

// L({e0}) - L(S + e0), with the mean subtracted first when `center`.
inline double RefExemplar(std::vector<std::vector<double>> pts,
                          const std::vector<int>& set, bool center) {
  const std::size_t n = pts.size();
  const std::size_t d = pts[0].size();
  if (center) {
    for (std::size_t j = 0; j < d; ++j) {
      double mean = 0;
      for (const auto& p : pts) mean += p[j];
      mean /= static_cast<double>(n);
      for (auto& p : pts) p[j] -= mean;
    }
  }
  auto dist = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t j = 0; j < d; ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
    return s;
  };
  const std::vector<double> zero(d, 0.0);
  double l0 = 0;
  double ls = 0;
  for (const auto& p : pts) {
    const double base = dist(p, zero);
    double best = base;
    for (int s : set) best = std::min(best, dist(p, pts[s]));
    l0 += base;
    ls += best;
  }
  return (l0 - ls) / static_cast<double>(n);
}

// f(S) = |S|^2: supermodular, used to exercise the audit.
class SquareOracle final : public SubmodularOracle {
 public:
  explicit SquareOracle(std::size_t n) : SubmodularOracle(n) {}
  std::string_view Name() const override { return "square"; }

 protected:
  double Evaluate(std::span<const ElementId> set) const override {
    const double s = static_cast<double>(set.size());
    return s * s;
  }
};

// Star: center 0 joined to leaves 1..leaves.
inline std::vector<Edge> StarEdges(std::uint32_t leaves) {
  std::vector<Edge> edges;
  for (std::uint32_t v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return edges;
}

inline std::shared_ptr<CoverageObjective> Star(std::uint32_t leaves = 5) {
  const auto edges = StarEdges(leaves);
  return std::make_shared<CoverageObjective>(leaves + 1, edges);
}

// Exhaustive max over subsets of size <= k by bitmask (n <= 20).
inline double RefOpt(const SubmodularOracle& f, std::size_t k) {
  const std::size_t n = f.ground_size();
  double best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > k) continue;
    std::vector<ElementId> s;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(ElementId{i});
    }
    best = std::max(best, f.Eval(s));
  }
  return best;
}

}  // namespace streamsub::testing

#endif  // STREAMSUB_TESTS_SUPPORT_REFERENCE_H_
