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

#ifndef STREAMSUB_OBJECTIVES_H_
#define STREAMSUB_OBJECTIVES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "streamsub/oracle.h"

namespace streamsub {

// Dense row-major matrix of doubles; one row per point.
class PointMatrix {
 public:
  PointMatrix() = default;
  PointMatrix(std::size_t rows, std::size_t cols);
  PointMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  static PointMatrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<double> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  const std::vector<double>& data() const { return data_; }

  // Subtracts the column means from every row.
  void CenterColumns();

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double Dot(std::span<const double> a, std::span<const double> b);
double SquaredDistance(std::span<const double> a, std::span<const double> b);

using Edge = std::pair<std::uint32_t, std::uint32_t>;

// Number of vertices dominated by S in an undirected graph.
class CoverageObjective final : public SubmodularOracle {
 public:
  enum class Neighborhood {
    kClosed,  // S plus all neighbors of S
    kOpen,    // neighbors of S only
  };

  // Self-loops are dropped and duplicate edges collapsed. Throws
  // std::domain_error on an endpoint >= vertex_count.
  CoverageObjective(std::size_t vertex_count, std::span<const Edge> edges,
                    Neighborhood neighborhood = Neighborhood::kClosed);

  std::size_t vertex_count() const { return ground_size(); }
  Neighborhood neighborhood() const { return neighborhood_; }
  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return adjacency_[v];
  }
  // Each undirected edge once, as (smaller, larger), sorted.
  std::vector<Edge> Edges() const;

  std::string_view Name() const override { return "coverage"; }

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  Neighborhood neighborhood_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

// Exemplar-based clustering: f(S) = L({e0}) - L(S + e0) where
// L(S) = (1/|V|) sum_x min_{s in S} |x - s|^2 and e0 is the origin. The
// origin is virtual and never selectable.
class ExemplarObjective final : public SubmodularOracle {
 public:
  // Throws std::domain_error on an empty point set.
  explicit ExemplarObjective(PointMatrix points, bool center = true);

  const PointMatrix& points() const { return points_; }
  bool centered() const { return centered_; }

  std::string_view Name() const override { return "exemplar"; }

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  static std::size_t CheckedRows(const PointMatrix& points);

  PointMatrix points_;
  bool centered_;
  std::vector<double> norms_;  // |x - e0|^2
};

// Personalized recommendation:
//   f(S) = alpha * sum_{m'} max(0, max_{m in S} <v_m', v_m>)
//        + (1 - alpha) * sum_{m in S} max(0, <w_u, v_m>).
// Both similarity terms are clamped at zero.
class RecommendationObjective final : public SubmodularOracle {
 public:
  // Throws std::domain_error on a dimension mismatch and ParameterError
  // when alpha is outside [0, 1].
  RecommendationObjective(PointMatrix movies, std::vector<double> user,
                          double alpha);

  const PointMatrix& movies() const { return movies_; }
  std::span<const double> user() const { return user_; }
  double alpha() const { return alpha_; }

  std::string_view Name() const override { return "recommendation"; }

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  static std::size_t CheckedRows(const PointMatrix& movies);

  PointMatrix movies_;
  std::vector<double> user_;
  double alpha_;
  std::vector<double> user_scores_;
};

// Weighted coverage over discrete cells: f(S) = total weight of cells
// covered by S.
class CellCoverObjective final : public SubmodularOracle {
 public:
  CellCoverObjective(std::vector<double> cell_weights,
                     std::vector<std::vector<std::uint32_t>> element_cells);

  std::span<const double> cell_weights() const { return cell_weights_; }
  std::span<const std::uint32_t> cells(ElementId e) const {
    return element_cells_[e.index];
  }

  std::string_view Name() const override { return "cellcover"; }

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  static std::size_t CheckedSize(
      const std::vector<std::vector<std::uint32_t>>& element_cells);

  std::vector<double> cell_weights_;
  std::vector<std::vector<std::uint32_t>> element_cells_;
};

// Lower-bound instance function for the INDEX reduction:
//   f(S) = |U_i & S| + (k if w_i in S else min(k, |V_i & S|)).
class IndexObjective final : public SubmodularOracle {
 public:
  enum class Role : std::uint8_t { kUnique, kShared, kBob };

  IndexObjective(std::vector<Role> roles, std::uint32_t k);

  std::span<const Role> roles() const { return roles_; }
  std::uint32_t k() const { return k_; }

  std::string_view Name() const override { return "index"; }

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  std::vector<Role> roles_;
  std::uint32_t k_;
};

// f(S) = sum of non-negative weights. Mostly useful for hand traces.
class ModularObjective final : public SubmodularOracle {
 public:
  explicit ModularObjective(std::vector<double> weights);

  std::span<const double> weights() const { return weights_; }

  std::string_view Name() const override { return "modular"; }

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  std::vector<double> weights_;
};

}  // namespace streamsub

#endif  // STREAMSUB_OBJECTIVES_H_
