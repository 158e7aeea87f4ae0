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

#include "streamsub/instances.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "streamsub/errors.h"
#include "streamsub/guess.h"
#include "streamsub/objectives.h"
#include "streamsub/random.h"

namespace streamsub {
namespace {

struct Interval {
  double begin;
  double end;
};

// Turns per-element interval lists into a cell cover whose cells are the
// pieces between consecutive endpoints, weighted by their length.
std::shared_ptr<CellCoverObjective> BuildCellCover(
    const std::vector<std::vector<Interval>>& elements) {
  std::vector<double> cuts;
  for (const auto& parts : elements) {
    for (const Interval& iv : parts) {
      cuts.push_back(iv.begin);
      cuts.push_back(iv.end);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<double> weights;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    weights.push_back(cuts[i + 1] - cuts[i]);
  }
  std::vector<std::vector<std::uint32_t>> element_cells;
  element_cells.reserve(elements.size());
  for (const auto& parts : elements) {
    std::vector<std::uint32_t> cells;
    for (const Interval& iv : parts) {
      const auto lo = std::lower_bound(cuts.begin(), cuts.end(), iv.begin);
      const auto hi = std::lower_bound(cuts.begin(), cuts.end(), iv.end);
      for (auto it = lo; it != hi; ++it) {
        cells.push_back(static_cast<std::uint32_t>(it - cuts.begin()));
      }
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    element_cells.push_back(std::move(cells));
  }
  return std::make_shared<CellCoverObjective>(std::move(weights),
                                              std::move(element_cells));
}

std::uint64_t SaturatingCeil(double x) {
  if (!(x < 1.8e19)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ceil(x));
}

std::map<std::string, std::string> ParseKeyValues(std::string_view body) {
  std::map<std::string, std::string> out;
  while (!body.empty()) {
    const std::size_t comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParameterError("expected key=value, got '" + std::string(item) +
                           "'");
    }
    out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

class SpecArgs {
 public:
  SpecArgs(std::string kind, std::map<std::string, std::string> values)
      : kind_(std::move(kind)), values_(std::move(values)) {}

  double Real(const std::string& key) {
    const std::string text = Take(key);
    std::size_t used = 0;
    double out = 0.0;
    try {
      out = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) {
      throw ParameterError(kind_ + ": '" + key + "' is not a number");
    }
    return out;
  }
  double Real(const std::string& key, double fallback) {
    return values_.contains(key) ? Real(key) : fallback;
  }
  std::size_t Count(const std::string& key) {
    const double v = Real(key);
    if (v < 0 || v != std::floor(v)) {
      throw ParameterError(kind_ + ": '" + key + "' must be a whole number");
    }
    return static_cast<std::size_t>(v);
  }
  std::size_t Count(const std::string& key, std::size_t fallback) {
    return values_.contains(key) ? Count(key) : fallback;
  }
  std::string Text(const std::string& key) { return Take(key); }

  void Finish() const {
    if (!values_.empty()) {
      throw ParameterError(kind_ + ": unknown key '" + values_.begin()->first +
                           "'");
    }
  }

 private:
  std::string Take(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) {
      throw ParameterError(kind_ + ": missing '" + key + "'");
    }
    std::string out = std::move(it->second);
    values_.erase(it);
    return out;
  }

  std::string kind_;
  std::map<std::string, std::string> values_;
};

}  // namespace

std::string_view ProvenanceName(OptProvenance p) {
  return p == OptProvenance::kBruteForced ? "brute-forced" : "constructed";
}

std::vector<ElementId> StreamPlan::Ids() const {
  std::vector<ElementId> out;
  out.reserve(order.size());
  for (const StreamItem& item : order) out.push_back(item.id);
  return out;
}

StreamPlan CanonicalPlan(const InstanceBundle& bundle) {
  return StreamPlan{bundle.canonical_order, 0};
}

StreamPlan Shuffle(const InstanceBundle& bundle, std::uint64_t seed) {
  StreamPlan plan{bundle.canonical_order, seed};
  Rng rng(seed);
  for (std::size_t i = plan.order.size(); i > 1; --i) {
    const std::size_t j = rng.Below(i);
    std::swap(plan.order[i - 1], plan.order[j]);
  }
  return plan;
}

std::vector<StreamItem> SingleCopies(std::size_t n) {
  std::vector<StreamItem> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(StreamItem{ElementId{static_cast<std::uint32_t>(i)}, 0});
  }
  return out;
}

InstanceBundle GenRandomGraph(std::size_t n, double edge_prob,
                              std::uint64_t seed) {
  if (n == 0) throw ParameterError("graph needs at least one vertex");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw ParameterError("edge probability must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(edge_prob)) edges.emplace_back(u, v);
    }
  }
  InstanceBundle b;
  b.oracle = std::make_shared<CoverageObjective>(n, edges);
  b.canonical_order = SingleCopies(n);
  b.source = "graph";
  return b;
}

InstanceBundle GenRandomPoints(std::size_t n, std::size_t d, std::uint64_t seed,
                               bool center) {
  if (n == 0 || d == 0) throw ParameterError("points need n, d > 0");
  Rng rng(seed);
  PointMatrix points(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    for (double& x : points.row(i)) x = rng.Normal();
  }
  InstanceBundle b;
  b.oracle = std::make_shared<ExemplarObjective>(std::move(points), center);
  b.canonical_order = SingleCopies(n);
  b.source = "points";
  return b;
}

InstanceBundle GenRandomRecsys(std::size_t movies, std::size_t d, double alpha,
                               std::uint64_t seed) {
  if (movies == 0 || d == 0) throw ParameterError("recsys needs m, d > 0");
  Rng rng(seed);
  PointMatrix m(movies, d);
  for (std::size_t i = 0; i < movies; ++i) {
    for (double& x : m.row(i)) x = rng.Normal();
  }
  std::vector<double> user(d);
  for (double& x : user) x = rng.Normal();
  InstanceBundle b;
  b.oracle =
      std::make_shared<RecommendationObjective>(std::move(m), user, alpha);
  b.canonical_order = SingleCopies(movies);
  b.source = "recsys";
  return b;
}

SieveHardInstance GenSieveHard(std::size_t k, std::vector<double> thresholds,
                               double delta, double opt_value,
                               std::uint64_t cap) {
  if (k == 0 || k > 6) throw ParameterError("sieve-hard needs 1 <= k <= 6");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ParameterError("delta must lie in (0, 1)");
  }
  if (!(opt_value > 0.0) || !std::isfinite(opt_value)) {
    throw ParameterError("optimum value must be positive");
  }
  if (thresholds.empty()) throw ParameterError("no thresholds given");
  const double kd = static_cast<double>(k);
  const double half = opt_value / 2.0;
  const double unit = opt_value / kd;
  for (double t : thresholds) {
    if (!(t > 0.0) || t > unit) {
      throw ParameterError("thresholds must lie in (0, opt/k]");
    }
  }
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  SieveHardInstance out;
  std::vector<std::vector<Interval>> elements;
  // Optimum: element i owns slot i of both halves.
  const double slot = half / kd;
  for (std::size_t i = 0; i < k; ++i) {
    const double a0 = static_cast<double>(i) * slot;
    const double a1 = i + 1 == k ? half : static_cast<double>(i + 1) * slot;
    const double b1 =
        i + 1 == k ? opt_value : half + static_cast<double>(i + 1) * slot;
    elements.push_back({{a0, a1}, {half + a0, b1}});
    out.optimum.push_back(ElementId{static_cast<std::uint32_t>(i)});
  }
  double pad_cursor = half;
  for (double t : thresholds) {
    std::vector<ElementId> xs;
    auto add = [&](std::vector<Interval> parts) {
      xs.push_back(ElementId{static_cast<std::uint32_t>(elements.size())});
      elements.push_back(std::move(parts));
    };
    if (t <= opt_value / (2.0 * kd)) {
      for (std::size_t j = 0; j < k; ++j) {
        add({{static_cast<double>(j) * t, static_cast<double>(j + 1) * t}});
      }
    } else {
      const std::size_t pieces =
          static_cast<std::size_t>(std::ceil(opt_value / (2.0 * t)));
      const double width = half / static_cast<double>(pieces);
      const double pad = t - width;
      for (std::size_t j = 0; j < pieces; ++j) {
        std::vector<Interval> parts{
            {static_cast<double>(j) * width,
             j + 1 == pieces ? half : static_cast<double>(j + 1) * width}};
        if (pad > 0.0) {
          parts.push_back({pad_cursor, pad_cursor + pad});
          pad_cursor += pad;
        }
        add(std::move(parts));
      }
      if (pad_cursor > opt_value) {
        throw ParameterError("too many mid-band thresholds for this k");
      }
    }
    out.x_sets.push_back(std::move(xs));
  }
  out.thresholds = thresholds;

  const double base =
      kd * kd * static_cast<double>(thresholds.size()) / delta;
  double required = kd;
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    const std::uint64_t c = SaturatingCeil(std::pow(base, i + 1.0));
    out.copies.push_back(c);
    required += static_cast<double>(c) *
                static_cast<double>(out.x_sets[i].size());
  }
  const std::uint64_t needed = SaturatingCeil(required);
  if (needed > cap) {
    throw SizeError("sieve-hard stream needs " + std::to_string(needed) +
                        " items, cap is " + std::to_string(cap),
                    needed, cap);
  }

  InstanceBundle& b = out.bundle;
  b.oracle = BuildCellCover(elements);
  b.canonical_order.reserve(needed);
  for (std::size_t i = 0; i < out.x_sets.size(); ++i) {
    for (std::uint64_t c = 0; c < out.copies[i]; ++c) {
      for (ElementId e : out.x_sets[i]) {
        b.canonical_order.push_back(
            StreamItem{e, static_cast<std::uint32_t>(c)});
      }
    }
  }
  for (ElementId e : out.optimum) b.canonical_order.push_back(StreamItem{e, 0});
  b.k = k;
  b.known_opt = KnownOpt{opt_value, OptProvenance::kConstructed};
  b.source = "sieve-hard";
  return out;
}

std::vector<double> SieveGuessThresholds(double opt_value, std::size_t k,
                                         double eps) {
  if (!(opt_value > 0.0) || k == 0) {
    throw ParameterError("need opt > 0 and k > 0");
  }
  const double kd = static_cast<double>(k);
  if (!(eps > 0.0)) return {opt_value / (2.0 * kd)};
  std::vector<double> out;
  for (int j : GuessExponents(opt_value / kd, k, eps, 0.5)) {
    const double t = std::pow(1.0 + eps, j) / (2.0 * kd);
    if (t <= opt_value / kd) out.push_back(t);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

InstanceBundle GenIndexInstance(std::size_t m, std::size_t k,
                                const std::vector<bool>& x, std::size_t i) {
  if (k <= 2) throw ParameterError("INDEX instance needs k > 2");
  if (m == 0 || x.size() != m) {
    throw ParameterError("bit vector length must equal m > 0");
  }
  if (i < 1 || i > m) throw ParameterError("index i must lie in [1, m]");
  using Role = IndexObjective::Role;
  std::vector<Role> roles;
  roles.reserve(k * m + 1);
  for (std::size_t j = 1; j <= m; ++j) {
    const Role r = (j == i && x[j - 1]) ? Role::kUnique : Role::kShared;
    roles.insert(roles.end(), k, r);
  }
  roles.push_back(Role::kBob);
  InstanceBundle b;
  b.oracle = std::make_shared<IndexObjective>(std::move(roles),
                                              static_cast<std::uint32_t>(k));
  b.canonical_order = SingleCopies(k * m + 1);
  b.k = k;
  b.source = "index";
  return b;
}

InstanceBundle ParseSynthetic(std::string_view spec, std::uint64_t seed) {
  const std::size_t colon = spec.find(':');
  const std::string kind(spec.substr(0, colon));
  SpecArgs args(kind, colon == std::string_view::npos
                          ? std::map<std::string, std::string>{}
                          : ParseKeyValues(spec.substr(colon + 1)));
  InstanceBundle b;
  if (kind == "sieve-hard") {
    const std::size_t k = args.Count("k");
    const double delta = args.Real("delta");
    const double opt = args.Real("opt");
    const double eps = args.Real("eps", 0.0);
    args.Finish();
    b = GenSieveHard(k, SieveGuessThresholds(opt, k, eps), delta, opt).bundle;
  } else if (kind == "index") {
    const std::size_t m = args.Count("m");
    const std::size_t k = args.Count("k");
    const std::string bits = args.Text("x");
    const std::size_t i = args.Count("i");
    args.Finish();
    std::vector<bool> x;
    for (char c : bits) {
      if (c != '0' && c != '1') throw ParameterError("index: x must be bits");
      x.push_back(c == '1');
    }
    b = GenIndexInstance(m, k, x, i);
  } else {
    const std::size_t k = args.Count("k", 0);
    if (kind == "graph") {
      const std::size_t n = args.Count("n");
      const double p = args.Real("p");
      args.Finish();
      b = GenRandomGraph(n, p, seed);
    } else if (kind == "points") {
      const std::size_t n = args.Count("n");
      const std::size_t d = args.Count("d");
      const bool center = args.Count("center", 1) != 0;
      args.Finish();
      b = GenRandomPoints(n, d, seed, center);
    } else if (kind == "recsys") {
      const std::size_t m = args.Count("m");
      const std::size_t d = args.Count("d");
      const double alpha = args.Real("alpha");
      args.Finish();
      b = GenRandomRecsys(m, d, alpha, seed);
    } else {
      throw ParameterError("unknown synthetic kind '" + kind + "'");
    }
    b.k = k;
  }
  b.source = std::string(spec);
  b.synthetic = true;
  return b;
}

}  // namespace streamsub
