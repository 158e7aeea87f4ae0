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

#include "streamsub/oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "streamsub/errors.h"
#include "streamsub/random.h"

namespace streamsub {

ParseError::ParseError(const std::string& source, std::size_t line,
                       const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : "") +
                         ": " + message),
      line_(line) {}

SizeError::SizeError(const std::string& message, std::uint64_t required,
                     std::uint64_t limit)
    : std::length_error(message + " (required " + std::to_string(required) +
                        ", limit " + std::to_string(limit) + ")"),
      required_(required),
      limit_(limit) {}

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::Below: bound must be > 0");
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double Rng::Normal() {
  double u1 = Uniform();
  while (u1 <= 0.0) u1 = Uniform();
  const double u2 = Uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<ElementId> MakeIds(std::initializer_list<std::uint32_t> indices) {
  std::vector<ElementId> ids;
  ids.reserve(indices.size());
  for (std::uint32_t i : indices) ids.push_back(ElementId{i});
  return ids;
}

std::vector<ElementId> IotaIds(std::size_t count) {
  std::vector<ElementId> ids(count);
  for (std::size_t i = 0; i < count; ++i) {
    ids[i] = ElementId{static_cast<std::uint32_t>(i)};
  }
  return ids;
}

SubmodularOracle::SubmodularOracle(std::size_t ground_size)
    : ground_size_(ground_size) {
  if (ground_size == 0) {
    throw std::domain_error("oracle ground set must be non-empty");
  }
}

void SubmodularOracle::CheckElement(ElementId e) const {
  if (e.index >= ground_size_) {
    throw std::domain_error("element " + std::to_string(e.index) +
                            " outside ground set of size " +
                            std::to_string(ground_size_));
  }
}

double SubmodularOracle::Eval(std::span<const ElementId> set) const {
  for (ElementId e : set) CheckElement(e);
  eval_count_.fetch_add(1, std::memory_order_relaxed);
  std::size_t seen = max_query_size_.load(std::memory_order_relaxed);
  while (set.size() > seen &&
         !max_query_size_.compare_exchange_weak(seen, set.size(),
                                                std::memory_order_relaxed)) {
  }
  return Evaluate(set);
}

double SubmodularOracle::EvalSingleton(ElementId e) const {
  const ElementId one[] = {e};
  return Eval(one);
}

OracleStats SubmodularOracle::stats() const {
  return OracleStats{eval_count_.load(std::memory_order_relaxed),
                     max_query_size_.load(std::memory_order_relaxed)};
}

void SubmodularOracle::ResetStats() const {
  eval_count_.store(0, std::memory_order_relaxed);
  max_query_size_.store(0, std::memory_order_relaxed);
}

SolutionSet::SolutionSet(std::size_t capacity) : capacity_(capacity) {
  members_.reserve(capacity);
  gains_.reserve(capacity);
  thresholds_.reserve(capacity);
}

bool SolutionSet::Contains(ElementId e) const {
  return index_.contains(e.index);
}

void SolutionSet::Insert(ElementId e, double value_after, double threshold) {
  if (full()) throw std::logic_error("SolutionSet::Insert: set is full");
  if (!index_.insert(e.index).second) {
    throw std::logic_error("SolutionSet::Insert: duplicate element " +
                           std::to_string(e.index));
  }
  members_.push_back(e);
  gains_.push_back(value_after - value_);
  thresholds_.push_back(threshold);
  value_ = value_after;
}

GainProbe ProbeGain(const SubmodularOracle& oracle, ElementId e,
                    const SolutionSet& s) {
  oracle.CheckElement(e);
  if (s.Contains(e)) return GainProbe{0.0, s.value()};
  std::vector<ElementId> with;
  with.reserve(s.size() + 1);
  with.assign(s.members().begin(), s.members().end());
  with.push_back(e);
  const double value_with = oracle.Eval(with);
  return GainProbe{value_with - s.value(), value_with};
}

double MarginalGain(const SubmodularOracle& oracle, ElementId e,
                    const SolutionSet& s, bool trust_cache) {
  oracle.CheckElement(e);
  if (s.Contains(e)) return 0.0;
  const GainProbe probe = ProbeGain(oracle, e, s);
  if (trust_cache) return probe.gain;
  return probe.value_with - oracle.Eval(s.members());
}

bool NearlyEqual(double a, double b, double rel_tol) {
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) <= rel_tol * scale;
}

}  // namespace streamsub
