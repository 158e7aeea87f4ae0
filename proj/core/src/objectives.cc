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

#include "streamsub/objectives.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "streamsub/errors.h"

namespace streamsub {
namespace {

std::vector<std::uint32_t> DistinctIndices(std::span<const ElementId> set) {
  std::vector<std::uint32_t> ids;
  ids.reserve(set.size());
  for (ElementId e : set) ids.push_back(e.index);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

PointMatrix::PointMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

PointMatrix::PointMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw std::domain_error("PointMatrix: data size does not match shape");
  }
}

PointMatrix PointMatrix::FromRows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<double> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw std::domain_error("PointMatrix: ragged rows");
    }
    data.insert(data.end(), r.begin(), r.end());
  }
  return PointMatrix(rows.size(), cols, std::move(data));
}

void PointMatrix::CenterColumns() {
  if (rows_ == 0) return;
  std::vector<double> mean(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) mean[j] += r[j];
  }
  for (double& m : mean) m /= static_cast<double>(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) r[j] -= mean[j];
  }
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double SquaredDistance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Coverage

CoverageObjective::CoverageObjective(std::size_t vertex_count,
                                     std::span<const Edge> edges,
                                     Neighborhood neighborhood)
    : SubmodularOracle(vertex_count),
      neighborhood_(neighborhood),
      adjacency_(vertex_count) {
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw std::domain_error("edge (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") outside vertex range " +
                              std::to_string(vertex_count));
    }
    if (u == v) continue;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::vector<Edge> CoverageObjective::Edges() const {
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < adjacency_.size(); ++u) {
    for (std::uint32_t v : adjacency_[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

double CoverageObjective::Evaluate(std::span<const ElementId> set) const {
  std::vector<std::uint32_t> covered;
  for (ElementId e : set) {
    if (neighborhood_ == Neighborhood::kClosed) covered.push_back(e.index);
    const auto& nbrs = adjacency_[e.index];
    covered.insert(covered.end(), nbrs.begin(), nbrs.end());
  }
  std::sort(covered.begin(), covered.end());
  return static_cast<double>(
      std::unique(covered.begin(), covered.end()) - covered.begin());
}

// ---------------------------------------------------------------------------
// Exemplar clustering

std::size_t ExemplarObjective::CheckedRows(const PointMatrix& points) {
  if (points.rows() == 0) {
    throw std::domain_error("exemplar objective needs at least one point");
  }
  return points.rows();
}

ExemplarObjective::ExemplarObjective(PointMatrix points, bool center)
    : SubmodularOracle(CheckedRows(points)),
      points_(std::move(points)),
      centered_(center) {
  if (centered_) points_.CenterColumns();
  norms_.resize(points_.rows());
  for (std::size_t i = 0; i < points_.rows(); ++i) {
    const auto r = points_.row(i);
    norms_[i] = Dot(r, r);
  }
}

double ExemplarObjective::Evaluate(std::span<const ElementId> set) const {
  if (set.empty()) return 0.0;
  // Summing the per-point loss reduction max(0, |x|^2 - d(x, S)) keeps the
  // value monotone in floating point, unlike a difference of two sums.
  double total = 0.0;
  for (std::size_t i = 0; i < points_.rows(); ++i) {
    const auto x = points_.row(i);
    double best = norms_[i];
    for (ElementId e : set) {
      best = std::min(best, SquaredDistance(x, points_.row(e.index)));
    }
    total += norms_[i] - best;
  }
  return total / static_cast<double>(points_.rows());
}

// ---------------------------------------------------------------------------
// Movie recommendation

std::size_t RecommendationObjective::CheckedRows(const PointMatrix& movies) {
  if (movies.rows() == 0) {
    throw std::domain_error("recommendation objective needs at least one movie");
  }
  return movies.rows();
}

RecommendationObjective::RecommendationObjective(PointMatrix movies,
                                                 std::vector<double> user,
                                                 double alpha)
    : SubmodularOracle(CheckedRows(movies)),
      movies_(std::move(movies)),
      user_(std::move(user)),
      alpha_(alpha) {
  if (user_.size() != movies_.cols()) {
    throw std::domain_error("user vector has dimension " +
                            std::to_string(user_.size()) +
                            ", movie vectors have " +
                            std::to_string(movies_.cols()));
  }
  if (!(alpha_ >= 0.0 && alpha_ <= 1.0)) {
    throw ParameterError("alpha must lie in [0, 1]");
  }
  user_scores_.resize(movies_.rows());
  for (std::size_t m = 0; m < movies_.rows(); ++m) {
    user_scores_[m] = std::max(0.0, Dot(user_, movies_.row(m)));
  }
}

double RecommendationObjective::Evaluate(std::span<const ElementId> set) const {
  if (set.empty()) return 0.0;
  const std::vector<std::uint32_t> ids = DistinctIndices(set);
  double coverage = 0.0;
  if (alpha_ > 0.0) {
    for (std::size_t other = 0; other < movies_.rows(); ++other) {
      const auto v = movies_.row(other);
      double best = 0.0;
      for (std::uint32_t m : ids) {
        best = std::max(best, Dot(v, movies_.row(m)));
      }
      coverage += best;
    }
  }
  double personal = 0.0;
  for (std::uint32_t m : ids) personal += user_scores_[m];
  return alpha_ * coverage + (1.0 - alpha_) * personal;
}

// ---------------------------------------------------------------------------
// Cell cover

std::size_t CellCoverObjective::CheckedSize(
    const std::vector<std::vector<std::uint32_t>>& element_cells) {
  if (element_cells.empty()) {
    throw std::domain_error("cell cover objective needs at least one element");
  }
  return element_cells.size();
}

CellCoverObjective::CellCoverObjective(
    std::vector<double> cell_weights,
    std::vector<std::vector<std::uint32_t>> element_cells)
    : SubmodularOracle(CheckedSize(element_cells)),
      cell_weights_(std::move(cell_weights)),
      element_cells_(std::move(element_cells)) {
  for (double w : cell_weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::domain_error("cell weights must be finite and non-negative");
    }
  }
  for (auto& cells : element_cells_) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (!cells.empty() && cells.back() >= cell_weights_.size()) {
      throw std::domain_error("cell index " + std::to_string(cells.back()) +
                              " outside " +
                              std::to_string(cell_weights_.size()) + " cells");
    }
  }
}

double CellCoverObjective::Evaluate(std::span<const ElementId> set) const {
  std::vector<std::uint32_t> covered;
  for (ElementId e : set) {
    const auto& cells = element_cells_[e.index];
    covered.insert(covered.end(), cells.begin(), cells.end());
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  double total = 0.0;
  for (std::uint32_t c : covered) total += cell_weights_[c];
  return total;
}

// ---------------------------------------------------------------------------
// INDEX reduction

IndexObjective::IndexObjective(std::vector<Role> roles, std::uint32_t k)
    : SubmodularOracle(roles.size()), roles_(std::move(roles)), k_(k) {}

double IndexObjective::Evaluate(std::span<const ElementId> set) const {
  std::size_t unique = 0;
  std::size_t shared = 0;
  bool bob = false;
  for (std::uint32_t id : DistinctIndices(set)) {
    switch (roles_[id]) {
      case Role::kUnique:
        ++unique;
        break;
      case Role::kShared:
        ++shared;
        break;
      case Role::kBob:
        bob = true;
        break;
    }
  }
  const std::size_t rest = bob ? k_ : std::min<std::size_t>(k_, shared);
  return static_cast<double>(unique + rest);
}

// ---------------------------------------------------------------------------
// Modular

ModularObjective::ModularObjective(std::vector<double> weights)
    : SubmodularOracle(weights.size()), weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::domain_error("modular weights must be finite and non-negative");
    }
  }
}

double ModularObjective::Evaluate(std::span<const ElementId> set) const {
  double total = 0.0;
  for (std::uint32_t id : DistinctIndices(set)) total += weights_[id];
  return total;
}

}  // namespace streamsub
