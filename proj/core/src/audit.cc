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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "streamsub/oracle.h"
#include "streamsub/random.h"

namespace streamsub {
namespace {

constexpr double kAuditTolerance = 1e-9;

std::vector<ElementId> WithElement(std::vector<ElementId> set, ElementId e) {
  set.push_back(e);
  return set;
}

// Returns a violation for the triple, if any.
std::optional<AuditViolation> CheckTriple(const std::vector<ElementId>& x,
                                          const std::vector<ElementId>& y,
                                          ElementId e, double fx, double fxe,
                                          double fy, double fye) {
  const double scale = std::max(1.0, std::abs(fye));
  const double gain_x = fxe - fx;
  const double gain_y = fye - fy;
  AuditViolation v{AuditViolation::Kind::kMonotonicity, x, y, e, gain_x,
                   gain_y};
  if (gain_y < -kAuditTolerance * scale || gain_x < -kAuditTolerance * scale) {
    return v;
  }
  if (gain_x < gain_y - kAuditTolerance * scale) {
    v.kind = AuditViolation::Kind::kSubmodularity;
    return v;
  }
  return std::nullopt;
}

std::vector<ElementId> MaskToSet(std::uint32_t mask, std::size_t n) {
  std::vector<ElementId> set;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask & (1u << i)) set.push_back(ElementId{static_cast<std::uint32_t>(i)});
  }
  return set;
}

}  // namespace

AuditReport AuditMonotoneSubmodular(const SubmodularOracle& oracle,
                                    std::size_t samples, std::uint64_t seed) {
  const std::size_t n = oracle.ground_size();
  if (n < 2) {
    throw std::invalid_argument("audit requires a ground set of size >= 2");
  }
  Rng rng(seed);
  AuditReport report;
  std::vector<ElementId> x;
  std::vector<ElementId> y;
  for (std::size_t s = 0; s < samples; ++s) {
    const ElementId e{static_cast<std::uint32_t>(rng.Below(n))};
    // Vary the density so both tiny and near-full sets get exercised.
    const double y_density = rng.Uniform();
    const double x_density = rng.Uniform();
    x.clear();
    y.clear();
    for (std::uint32_t i = 0; i < n; ++i) {
      if (i == e.index || !rng.Bernoulli(y_density)) continue;
      y.push_back(ElementId{i});
      if (rng.Bernoulli(x_density)) x.push_back(ElementId{i});
    }
    const double fx = oracle.Eval(x);
    const double fxe = oracle.Eval(WithElement(x, e));
    const double fy = oracle.Eval(y);
    const double fye = oracle.Eval(WithElement(y, e));
    ++report.checked;
    if (auto v = CheckTriple(x, y, e, fx, fxe, fy, fye)) {
      report.passed = false;
      if (!report.first_violation) report.first_violation = std::move(v);
    }
  }
  return report;
}

AuditReport AuditExhaustive(const SubmodularOracle& oracle) {
  const std::size_t n = oracle.ground_size();
  if (n > 16) {
    throw std::invalid_argument("exhaustive audit limited to 16 elements");
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<double> value(std::size_t{full} + 1);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    value[mask] = oracle.Eval(MaskToSet(mask, n));
  }
  AuditReport report;
  for (std::uint32_t y = 0; y <= full; ++y) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t bit = 1u << i;
      if (y & bit) continue;
      // Every submask x of y, including y itself and the empty set.
      for (std::uint32_t x = y;; x = (x - 1) & y) {
        ++report.checked;
        const double scale = std::max(1.0, std::abs(value[y | bit]));
        const double gx = value[x | bit] - value[x];
        const double gy = value[y | bit] - value[y];
        const bool bad = gx < gy - kAuditTolerance * scale ||
                         gy < -kAuditTolerance * scale ||
                         gx < -kAuditTolerance * scale;
        if (bad) {
          report.passed = false;
          if (!report.first_violation) {
            report.first_violation = CheckTriple(
                MaskToSet(x, n), MaskToSet(y, n),
                ElementId{static_cast<std::uint32_t>(i)}, value[x],
                value[x | bit], value[y], value[y | bit]);
          }
        }
        if (x == 0) break;
      }
    }
  }
  return report;
}

}  // namespace streamsub
