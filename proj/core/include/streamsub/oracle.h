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

#ifndef STREAMSUB_ORACLE_H_
#define STREAMSUB_ORACLE_H_

#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace streamsub {

// Index of an element of the ground set.
struct ElementId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

std::vector<ElementId> MakeIds(std::initializer_list<std::uint32_t> indices);
std::vector<ElementId> IotaIds(std::size_t count);

// Snapshot of an oracle's query counters.
struct OracleStats {
  std::uint64_t eval_count = 0;
  // Largest argument size seen since the last reset.
  std::size_t max_query_size = 0;
};

// Value oracle for a normalized set function over {0, ..., ground_size-1}.
//
// Eval() validates ids, updates the counters, and forwards to Evaluate().
// Implementations treat the argument as a set: callers pass distinct ids,
// and objectives whose formula is not idempotent under repetition must
// de-duplicate themselves. Evaluate() must be pure; concurrent Eval() calls
// on one oracle are safe.
class SubmodularOracle {
 public:
  explicit SubmodularOracle(std::size_t ground_size);
  virtual ~SubmodularOracle() = default;

  SubmodularOracle(const SubmodularOracle&) = delete;
  SubmodularOracle& operator=(const SubmodularOracle&) = delete;

  std::size_t ground_size() const { return ground_size_; }

  double Eval(std::span<const ElementId> set) const;
  double EvalSingleton(ElementId e) const;

  // Throws std::domain_error if e is not in the ground set.
  void CheckElement(ElementId e) const;

  OracleStats stats() const;
  void ResetStats() const;

  virtual std::string_view Name() const = 0;

 protected:
  virtual double Evaluate(std::span<const ElementId> set) const = 0;

 private:
  std::size_t ground_size_;
  mutable std::atomic<std::uint64_t> eval_count_{0};
  mutable std::atomic<std::size_t> max_query_size_{0};
};

// Ordered selection with a cached value and the marginal gain recorded at
// each insertion. thresholds()[i] is the bar that gains()[i] cleared when
// the element was inserted (for greedy, the gain itself).
class SolutionSet {
 public:
  explicit SolutionSet(std::size_t capacity);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool full() const { return members_.size() >= capacity_; }
  bool Contains(ElementId e) const;

  double value() const { return value_; }
  std::span<const ElementId> members() const { return members_; }
  std::span<const double> gains() const { return gains_; }
  std::span<const double> thresholds() const { return thresholds_; }

  // Appends e. value_after is f(S + e) as evaluated by the caller.
  // Throws std::logic_error on a duplicate or when full.
  void Insert(ElementId e, double value_after, double threshold);

 private:
  std::size_t capacity_;
  std::vector<ElementId> members_;
  std::vector<double> gains_;
  std::vector<double> thresholds_;
  std::unordered_set<std::uint32_t> index_;
  double value_ = 0.0;
};

// Result of probing f(e | S) with one oracle call.
struct GainProbe {
  double gain = 0.0;
  double value_with = 0.0;
};

// f(e | S) computed as f(S + e) - cached f(S): one oracle call, none when
// e is already in S.
GainProbe ProbeGain(const SubmodularOracle& oracle, ElementId e,
                    const SolutionSet& s);

// f(S + e) - f(S). With trust_cache the cached value of S is used (one
// oracle call); otherwise f(S) is re-evaluated as well (two calls).
double MarginalGain(const SubmodularOracle& oracle, ElementId e,
                    const SolutionSet& s, bool trust_cache = true);

// Relative comparison used throughout: |a - b| <= tol * max(|a|, |b|, 1).
bool NearlyEqual(double a, double b, double rel_tol = 1e-9);

struct AuditViolation {
  enum class Kind { kMonotonicity, kSubmodularity };
  Kind kind = Kind::kSubmodularity;
  std::vector<ElementId> smaller;  // X
  std::vector<ElementId> larger;   // Y, with X a subset of Y
  ElementId element;               // e, not in Y
  double gain_smaller = 0.0;       // f(e | X)
  double gain_larger = 0.0;        // f(e | Y)
};

struct AuditReport {
  bool passed = true;
  std::size_t checked = 0;
  std::optional<AuditViolation> first_violation;
};

// Samples `samples` triples X <= Y, e not in Y and checks
// f(e|X) >= f(e|Y) - 1e-9 * scale and f(e|Y) >= -1e-9 * scale with
// scale = max(1, f(Y + e)). Requires ground_size >= 2.
AuditReport AuditMonotoneSubmodular(const SubmodularOracle& oracle,
                                    std::size_t samples, std::uint64_t seed);

// Checks every triple. Evaluates all 2^n subsets once; n <= 16.
AuditReport AuditExhaustive(const SubmodularOracle& oracle);

}  // namespace streamsub

#endif  // STREAMSUB_ORACLE_H_
