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

#ifndef STREAMSUB_INSTANCES_H_
#define STREAMSUB_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streamsub/oracle.h"

namespace streamsub {

enum class OptProvenance { kBruteForced, kConstructed };

std::string_view ProvenanceName(OptProvenance p);

struct KnownOpt {
  double value = 0.0;
  OptProvenance provenance = OptProvenance::kConstructed;
};

// One stream arrival. Copies of an element share its id; the oracle never
// sees `copy`.
struct StreamItem {
  ElementId id;
  std::uint32_t copy = 0;

  friend bool operator==(const StreamItem&, const StreamItem&) = default;
};

struct InstanceBundle {
  std::shared_ptr<const SubmodularOracle> oracle;
  std::vector<StreamItem> canonical_order;
  // Default cardinality; 0 when the instance does not fix one.
  std::size_t k = 0;
  std::optional<KnownOpt> known_opt;
  // Human-readable origin, e.g. a synthetic spec or a file path.
  std::string source;
  // Generated instances are shuffled by default, loaded data is not.
  bool synthetic = true;
};

struct StreamPlan {
  std::vector<StreamItem> order;
  std::uint64_t seed = 0;

  std::vector<ElementId> Ids() const;
};

// canonical_order, unshuffled.
StreamPlan CanonicalPlan(const InstanceBundle& bundle);

// Seeded Fisher-Yates over the canonical multiset sequence.
StreamPlan Shuffle(const InstanceBundle& bundle, std::uint64_t seed);

// Canonical order 0..n-1, one copy each.
std::vector<StreamItem> SingleCopies(std::size_t n);

// Erdos-Renyi G(n, p), closed-neighborhood coverage.
InstanceBundle GenRandomGraph(std::size_t n, double edge_prob,
                              std::uint64_t seed);

// n standard-normal points in d dimensions, exemplar objective.
InstanceBundle GenRandomPoints(std::size_t n, std::size_t d, std::uint64_t seed,
                               bool center = true);

// m standard-normal movie vectors and one user vector in d dimensions.
InstanceBundle GenRandomRecsys(std::size_t movies, std::size_t d, double alpha,
                               std::uint64_t seed);

struct SieveHardInstance {
  InstanceBundle bundle;
  // Thresholds actually used, descending.
  std::vector<double> thresholds;
  // x_sets[i] holds the elements of X for thresholds[i].
  std::vector<std::vector<ElementId>> x_sets;
  std::vector<ElementId> optimum;
  // Copies of x_sets[i] in the stream.
  std::vector<std::uint64_t> copies;
};

inline constexpr std::uint64_t kDefaultStreamCap = 10'000'000;

// Weighted cell-cover stream on which a sieve run with the given first-step
// thresholds tends to stop near half of opt_value. The optimum is k
// disjoint elements of value opt_value / k. For each threshold t:
//   t <= opt/(2k):        k elements of value t inside the half-region A;
//   opt/(2k) < t <= opt/k: ceil(opt/(2t)) elements tiling A, each padded
//                         to value t with a private piece of the other half.
// The i-th largest threshold contributes ceil((k^2 |T| / delta)^i) copies of
// its set. Throws ParameterError on bad arguments and SizeError when the
// stream would exceed `cap` items.
SieveHardInstance GenSieveHard(std::size_t k, std::vector<double> thresholds,
                               double delta, double opt_value,
                               std::uint64_t cap = kDefaultStreamCap);

// First-step sieve thresholds v / (2k). Known mode (eps <= 0): v = opt only.
// Otherwise every guess (1+eps)^j in [opt/k, 2 opt], keeping those <= opt/k.
std::vector<double> SieveGuessThresholds(double opt_value, std::size_t k,
                                         double eps = 0.0);

// INDEX reduction instance: Alice's k*m elements (block j unique to the
// reference function when x_j = 1 and j = i) followed by Bob's element.
// i is 1-based. Requires k > 2 and 1 <= i <= m.
InstanceBundle GenIndexInstance(std::size_t m, std::size_t k,
                                const std::vector<bool>& x, std::size_t i);

// Builds a generator instance from "kind:key=value,..." where kind is one of
//   graph:n=,p=          points:n=,d=[,center=0|1]
//   recsys:m=,d=,alpha=  sieve-hard:k=,delta=,opt=[,eps=]
//   index:m=,k=,x=<bits>,i=
// An optional k= sets the bundle's default cardinality. Throws
// ParameterError on unknown kinds or keys.
InstanceBundle ParseSynthetic(std::string_view spec, std::uint64_t seed);

}  // namespace streamsub

#endif  // STREAMSUB_INSTANCES_H_
