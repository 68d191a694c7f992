// Copyright 2026 The ohsolve Authors
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

// Bounded-variable primal revised simplex in double precision.
//
// The model is  A x - r = 0,  l <= (x, r) <= u  where x are the structural
// columns and r the row activities ("logicals"). The basis inverse is kept as
// a dense matrix updated by rank-one pivots and refactored periodically; the
// refactorization only inverts the square block formed by basic structurals
// and rows whose logical is nonbasic, which keeps it cheap when most logicals
// are basic.
//
// Phase I minimizes the sum of bound violations of basic variables directly
// (no explicit artificial columns). Bound changes and objective changes keep
// the current basis, so every solve after the first is a warm start.

#ifndef OHS_SIMPLEX_HPP_
#define OHS_SIMPLEX_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace ohs {

struct SparseEntry {
  int index = 0;
  double value = 0.0;
};

struct SimplexRow {
  std::vector<SparseEntry> entries;  // column index, coefficient
  double lower = 0.0;
  double upper = 0.0;
};

enum class SimplexStatus { kOptimal, kInfeasible, kUnbounded };

struct SimplexOptions {
  double primal_tol = 1e-7;
  double dual_tol = 1e-7;
  double pivot_tol = 1e-9;
  int refactor_interval = 100;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int bland_trigger = 50;
  // 0 picks a size-dependent cap.
  std::int64_t max_iterations = 0;
};

class BoundedSimplex {
 public:
  BoundedSimplex(int num_cols, std::vector<SimplexRow> rows,
                 std::vector<double> col_lower, std::vector<double> col_upper,
                 SimplexOptions options = {});

  int num_cols() const { return n_; }
  int num_rows() const { return m_; }

  void SetColumnBounds(int j, double lower, double upper);
  double column_lower(int j) const { return lo_[j]; }
  double column_upper(int j) const { return hi_[j]; }

  // Dense costs over structural columns.
  void SetObjective(std::span<const double> cost);
  std::span<const double> objective() const { return cost_; }

  // Phase I only: stops at the first point within the bounds.
  SimplexStatus FindFeasible();
  // Phase I followed by phase II on the current objective.
  SimplexStatus Minimize();

  double value(int j) const { return x_[j]; }
  std::vector<double> ColumnValues() const;
  double ObjectiveValue() const;

  // Reduced-cost sign conditions of the current basis under the current
  // objective, meaningful right after Minimize() returned kOptimal.
  bool CheckOptimalityCertificate(double tol) const;

  // Drops the basis in favour of the all-logical one.
  void ResetBasis();

  std::int64_t total_iterations() const { return total_iterations_; }
  std::int64_t last_iterations() const { return last_iterations_; }

 private:
  enum class NonbasicState : std::uint8_t { kBasic, kAtLower, kAtUpper, kFree };

  SimplexStatus Run(bool optimize);
  void PlaceNonbasic(int j, bool prefer_upper);
  void Refactor();
  void RecomputeBasics();
  void Btran(std::span<const double> cb, std::vector<double>& y) const;
  void Ftran(int j, std::vector<double>& out) const;
  double ColumnDot(int j, std::span<const double> y) const;
  double CostOf(int j, bool phase_two) const {
    return phase_two && j < n_ ? cost_[j] : 0.0;
  }
  void Pivot(int r, std::span<const double> alpha);

  int n_;
  int m_;
  SimplexOptions options_;
  std::vector<std::vector<SparseEntry>> cols_;  // row index, value
  std::vector<std::vector<SparseEntry>> rows_;  // column index, value
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<double> x_;
  std::vector<double> cost_;
  std::vector<NonbasicState> state_;
  std::vector<int> head_;  // basis position -> variable
  std::vector<int> pos_;   // variable -> basis position or -1
  std::vector<double> binv_;  // m x m, row p belongs to basis position p
  bool need_refactor_ = true;
  bool need_recompute_ = true;
  int pivots_since_refactor_ = 0;
  std::int64_t total_iterations_ = 0;
  std::int64_t last_iterations_ = 0;
};

}  // namespace ohs

#endif  // OHS_SIMPLEX_HPP_
