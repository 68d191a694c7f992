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

#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace ohs {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// In-place Gauss-Jordan inversion of a dense k x k row-major matrix. Returns
// false when a pivot falls below `tol`.
bool InvertDense(std::vector<double>& a, int k, double tol) {
  std::vector<double> inv(static_cast<std::size_t>(k) * k, 0.0);
  for (int i = 0; i < k; ++i) inv[i * k + i] = 1.0;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    double best = std::abs(a[col * k + col]);
    for (int r = col + 1; r < k; ++r) {
      const double v = std::abs(a[r * k + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < tol) return false;
    if (piv != col) {
      for (int c = 0; c < k; ++c) {
        std::swap(a[piv * k + c], a[col * k + c]);
        std::swap(inv[piv * k + c], inv[col * k + c]);
      }
    }
    const double d = 1.0 / a[col * k + col];
    for (int c = 0; c < k; ++c) {
      a[col * k + c] *= d;
      inv[col * k + c] *= d;
    }
    for (int r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = a[r * k + col];
      if (f == 0.0) continue;
      for (int c = 0; c < k; ++c) {
        a[r * k + c] -= f * a[col * k + c];
        inv[r * k + c] -= f * inv[col * k + c];
      }
    }
  }
  a = std::move(inv);
  return true;
}

}  // namespace

BoundedSimplex::BoundedSimplex(int num_cols, std::vector<SimplexRow> rows,
                               std::vector<double> col_lower,
                               std::vector<double> col_upper,
                               SimplexOptions options)
    : n_(num_cols),
      m_(static_cast<int>(rows.size())),
      options_(options),
      cols_(num_cols),
      rows_(rows.size()) {
  if (col_lower.size() != static_cast<std::size_t>(n_) ||
      col_upper.size() != static_cast<std::size_t>(n_)) {
    throw Error(ErrorCode::kInvalidArgument, "bound vector size mismatch");
  }
  const int total = n_ + m_;
  lo_.resize(total);
  hi_.resize(total);
  for (int j = 0; j < n_; ++j) {
    lo_[j] = col_lower[j];
    hi_[j] = col_upper[j];
  }
  for (int i = 0; i < m_; ++i) {
    for (const SparseEntry& e : rows[i].entries) {
      if (e.index < 0 || e.index >= n_) {
        throw Error(ErrorCode::kInvalidArgument, "row references bad column");
      }
      if (e.value == 0.0) continue;
      rows_[i].push_back(e);
      cols_[e.index].push_back(SparseEntry{i, e.value});
    }
    lo_[n_ + i] = rows[i].lower;
    hi_[n_ + i] = rows[i].upper;
  }
  x_.assign(total, 0.0);
  cost_.assign(n_, 0.0);
  state_.assign(total, NonbasicState::kAtLower);
  head_.resize(m_);
  pos_.assign(total, -1);
  if (options_.max_iterations <= 0) {
    options_.max_iterations = 200 * static_cast<std::int64_t>(total) + 20000;
  }
  ResetBasis();
}

void BoundedSimplex::PlaceNonbasic(int j, bool prefer_upper) {
  const bool has_lo = std::isfinite(lo_[j]);
  const bool has_hi = std::isfinite(hi_[j]);
  if (prefer_upper && has_hi) {
    state_[j] = NonbasicState::kAtUpper;
    x_[j] = hi_[j];
  } else if (has_lo) {
    state_[j] = NonbasicState::kAtLower;
    x_[j] = lo_[j];
  } else if (has_hi) {
    state_[j] = NonbasicState::kAtUpper;
    x_[j] = hi_[j];
  } else {
    state_[j] = NonbasicState::kFree;
    x_[j] = 0.0;
  }
}

void BoundedSimplex::ResetBasis() {
  for (int j = 0; j < n_; ++j) {
    pos_[j] = -1;
    PlaceNonbasic(j, false);
  }
  for (int i = 0; i < m_; ++i) {
    head_[i] = n_ + i;
    pos_[n_ + i] = i;
    state_[n_ + i] = NonbasicState::kBasic;
  }
  need_refactor_ = true;
  need_recompute_ = true;
}

void BoundedSimplex::SetColumnBounds(int j, double lower, double upper) {
  lo_[j] = lower;
  hi_[j] = upper;
  if (pos_[j] < 0) {
    PlaceNonbasic(j, state_[j] == NonbasicState::kAtUpper);
    need_recompute_ = true;
  }
}

void BoundedSimplex::SetObjective(std::span<const double> cost) {
  if (cost.size() != static_cast<std::size_t>(n_)) {
    throw Error(ErrorCode::kInvalidArgument, "objective size mismatch");
  }
  std::copy(cost.begin(), cost.end(), cost_.begin());
}

std::vector<double> BoundedSimplex::ColumnValues() const {
  return std::vector<double>(x_.begin(), x_.begin() + n_);
}

double BoundedSimplex::ObjectiveValue() const {
  double sum = 0.0;
  for (int j = 0; j < n_; ++j) sum += cost_[j] * x_[j];
  return sum;
}

void BoundedSimplex::Refactor() {
  pivots_since_refactor_ = 0;
  need_refactor_ = false;
  need_recompute_ = true;
  if (m_ == 0) return;

  std::vector<int> basic_structural;
  std::vector<int> col_slot(n_, -1);
  for (int p = 0; p < m_; ++p) {
    if (head_[p] < n_) {
      col_slot[head_[p]] = static_cast<int>(basic_structural.size());
      basic_structural.push_back(head_[p]);
    }
  }
  std::vector<int> core_rows;
  std::vector<int> row_slot(m_, -1);
  for (int i = 0; i < m_; ++i) {
    if (pos_[n_ + i] < 0) {
      row_slot[i] = static_cast<int>(core_rows.size());
      core_rows.push_back(i);
    }
  }
  const int k = static_cast<int>(basic_structural.size());
  bool ok = static_cast<int>(core_rows.size()) == k;
  std::vector<double> core(static_cast<std::size_t>(k) * k, 0.0);
  if (ok) {
    for (int b = 0; b < k; ++b) {
      for (const SparseEntry& e : cols_[basic_structural[b]]) {
        const int a = row_slot[e.index];
        if (a >= 0) core[a * k + b] = e.value;
      }
    }
    ok = InvertDense(core, k, 1e-11);
  }
  if (!ok) {
    // Numerically singular basis: fall back to the all-logical basis.
    ResetBasis();
    need_refactor_ = false;
    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) binv_[i * m_ + i] = -1.0;
    return;
  }

  binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
  std::vector<double> tmp(k);
  for (int p = 0; p < m_; ++p) {
    double* out = &binv_[static_cast<std::size_t>(p) * m_];
    const int v = head_[p];
    if (v < n_) {
      const int b = col_slot[v];
      for (int a = 0; a < k; ++a) out[core_rows[a]] = core[b * k + a];
    } else {
      const int i = v - n_;
      out[i] = -1.0;
      std::fill(tmp.begin(), tmp.end(), 0.0);
      bool any = false;
      for (const SparseEntry& e : rows_[i]) {
        const int b = col_slot[e.index];
        if (b < 0) continue;
        any = true;
        const double* mrow = &core[static_cast<std::size_t>(b) * k];
        for (int a = 0; a < k; ++a) tmp[a] += e.value * mrow[a];
      }
      if (any) {
        for (int a = 0; a < k; ++a) out[core_rows[a]] = tmp[a];
      }
    }
  }
}

void BoundedSimplex::RecomputeBasics() {
  need_recompute_ = false;
  std::vector<double> rhs(m_, 0.0);
  for (int j = 0; j < n_; ++j) {
    if (pos_[j] >= 0 || x_[j] == 0.0) continue;
    for (const SparseEntry& e : cols_[j]) rhs[e.index] -= e.value * x_[j];
  }
  for (int i = 0; i < m_; ++i) {
    if (pos_[n_ + i] < 0) rhs[i] += x_[n_ + i];
  }
  for (int p = 0; p < m_; ++p) {
    const double* row = &binv_[static_cast<std::size_t>(p) * m_];
    double s = 0.0;
    for (int i = 0; i < m_; ++i) s += row[i] * rhs[i];
    x_[head_[p]] = s;
  }
}

void BoundedSimplex::Btran(std::span<const double> cb,
                           std::vector<double>& y) const {
  y.assign(m_, 0.0);
  for (int p = 0; p < m_; ++p) {
    const double c = cb[p];
    if (c == 0.0) continue;
    const double* row = &binv_[static_cast<std::size_t>(p) * m_];
    for (int i = 0; i < m_; ++i) y[i] += c * row[i];
  }
}

void BoundedSimplex::Ftran(int j, std::vector<double>& out) const {
  out.assign(m_, 0.0);
  if (j < n_) {
    for (int p = 0; p < m_; ++p) {
      const double* row = &binv_[static_cast<std::size_t>(p) * m_];
      double s = 0.0;
      for (const SparseEntry& e : cols_[j]) s += row[e.index] * e.value;
      out[p] = s;
    }
  } else {
    const int i = j - n_;
    for (int p = 0; p < m_; ++p) out[p] = -binv_[static_cast<std::size_t>(p) * m_ + i];
  }
}

double BoundedSimplex::ColumnDot(int j, std::span<const double> y) const {
  if (j >= n_) return -y[j - n_];
  double s = 0.0;
  for (const SparseEntry& e : cols_[j]) s += y[e.index] * e.value;
  return s;
}

void BoundedSimplex::Pivot(int r, std::span<const double> alpha) {
  double* prow = &binv_[static_cast<std::size_t>(r) * m_];
  const double inv = 1.0 / alpha[r];
  for (int i = 0; i < m_; ++i) prow[i] *= inv;
  for (int p = 0; p < m_; ++p) {
    if (p == r) continue;
    const double f = alpha[p];
    if (f == 0.0) continue;
    double* row = &binv_[static_cast<std::size_t>(p) * m_];
    for (int i = 0; i < m_; ++i) row[i] -= f * prow[i];
  }
  ++pivots_since_refactor_;
}

SimplexStatus BoundedSimplex::FindFeasible() { return Run(false); }

SimplexStatus BoundedSimplex::Minimize() { return Run(true); }

SimplexStatus BoundedSimplex::Run(bool optimize) {
  const double ptol = options_.primal_tol;
  const double dtol = options_.dual_tol;
  const int total = n_ + m_;
  last_iterations_ = 0;

  for (int j = 0; j < total; ++j) {
    if (lo_[j] > hi_[j] + ptol) return SimplexStatus::kInfeasible;
  }
  if (need_refactor_) Refactor();
  if (need_recompute_) RecomputeBasics();

  std::vector<double> cb(m_);
  std::vector<double> y;
  std::vector<double> alpha;
  int degenerate_run = 0;
  bool retried_phase_one = false;

  for (;;) {
    if (last_iterations_ >= options_.max_iterations) {
      throw Error(ErrorCode::kNumerical, "simplex iteration limit reached");
    }
    if (pivots_since_refactor_ >= options_.refactor_interval) {
      Refactor();
      RecomputeBasics();
    }

    bool infeasible = false;
    for (int p = 0; p < m_; ++p) {
      const int v = head_[p];
      if (x_[v] < lo_[v] - ptol) {
        cb[p] = -1.0;
        infeasible = true;
      } else if (x_[v] > hi_[v] + ptol) {
        cb[p] = 1.0;
        infeasible = true;
      } else {
        cb[p] = 0.0;
      }
    }
    const bool phase_two = !infeasible;
    if (phase_two) {
      if (!optimize) return SimplexStatus::kOptimal;
      for (int p = 0; p < m_; ++p) cb[p] = CostOf(head_[p], true);
    }
    Btran(cb, y);

    const bool bland = degenerate_run >= options_.bland_trigger;
    int entering = -1;
    int direction = 0;
    double best = 0.0;
    for (int j = 0; j < total; ++j) {
      if (pos_[j] >= 0) continue;
      if (lo_[j] == hi_[j]) continue;
      const double d = CostOf(j, phase_two) - ColumnDot(j, y);
      int dir = 0;
      switch (state_[j]) {
        case NonbasicState::kAtLower:
          if (d < -dtol) dir = 1;
          break;
        case NonbasicState::kAtUpper:
          if (d > dtol) dir = -1;
          break;
        case NonbasicState::kFree:
          if (std::abs(d) > dtol) dir = d < 0 ? 1 : -1;
          break;
        case NonbasicState::kBasic:
          break;
      }
      if (dir == 0) continue;
      if (bland) {
        entering = j;
        direction = dir;
        break;
      }
      if (std::abs(d) > best) {
        best = std::abs(d);
        entering = j;
        direction = dir;
      }
    }
    if (entering < 0) {
      return infeasible ? SimplexStatus::kInfeasible : SimplexStatus::kOptimal;
    }

    Ftran(entering, alpha);

    // Harris two-pass ratio test. In phase I an infeasible basic variable
    // blocks when it reaches the bound it violates.
    auto target_of = [&](int p, double rate, double& target) -> bool {
      const int v = head_[p];
      const double val = x_[v];
      if (rate > 0) {
        if (val < lo_[v] - ptol) {
          target = lo_[v];
          return true;
        }
        if (val > hi_[v] + ptol || !std::isfinite(hi_[v])) return false;
        target = hi_[v];
        return true;
      }
      if (val > hi_[v] + ptol) {
        target = hi_[v];
        return true;
      }
      if (val < lo_[v] - ptol || !std::isfinite(lo_[v])) return false;
      target = lo_[v];
      return true;
    };

    const double range = hi_[entering] - lo_[entering];
    double relaxed = kInfinity;
    for (int p = 0; p < m_; ++p) {
      const double a = alpha[p];
      if (std::abs(a) < options_.pivot_tol) continue;
      const double rate = -direction * a;
      double target;
      if (!target_of(p, rate, target)) continue;
      const double slack = rate > 0 ? target + ptol : target - ptol;
      const double t = (slack - x_[head_[p]]) / rate;
      relaxed = std::min(relaxed, t);
    }

    int leave = -1;
    double step = kInfinity;
    double leave_target = 0.0;
    if (bland) {
      for (int p = 0; p < m_; ++p) {
        const double a = alpha[p];
        if (std::abs(a) < options_.pivot_tol) continue;
        const double rate = -direction * a;
        double target;
        if (!target_of(p, rate, target)) continue;
        const double t = std::max(0.0, (target - x_[head_[p]]) / rate);
        if (t < step - 1e-12 ||
            (t <= step + 1e-12 && leave >= 0 && head_[p] < head_[leave])) {
          step = t;
          leave = p;
          leave_target = target;
        }
      }
    } else if (std::isfinite(relaxed)) {
      double best_pivot = 0.0;
      for (int p = 0; p < m_; ++p) {
        const double a = alpha[p];
        if (std::abs(a) < options_.pivot_tol) continue;
        const double rate = -direction * a;
        double target;
        if (!target_of(p, rate, target)) continue;
        const double t = (target - x_[head_[p]]) / rate;
        if (t <= relaxed && std::abs(a) > best_pivot) {
          best_pivot = std::abs(a);
          leave = p;
          step = std::max(0.0, t);
          leave_target = target;
        }
      }
    }

    const bool flip = std::isfinite(range) && (leave < 0 || range <= step);
    if (leave < 0 && !flip) {
      if (!phase_two) {
        // Phase I cannot be unbounded in exact arithmetic; the pivot column
        // must have lost its entries to round-off.
        if (retried_phase_one) {
          throw Error(ErrorCode::kNumerical, "phase I lost its ratio test");
        }
        retried_phase_one = true;
        Refactor();
        RecomputeBasics();
        continue;
      }
      return SimplexStatus::kUnbounded;
    }

    ++last_iterations_;
    ++total_iterations_;
    const double t = flip ? range : step;
    if (t <= 1e-12) {
      ++degenerate_run;
    } else {
      degenerate_run = 0;
    }
    for (int p = 0; p < m_; ++p) {
      if (alpha[p] != 0.0) x_[head_[p]] += -direction * alpha[p] * t;
    }
    if (flip) {
      if (direction > 0) {
        state_[entering] = NonbasicState::kAtUpper;
        x_[entering] = hi_[entering];
      } else {
        state_[entering] = NonbasicState::kAtLower;
        x_[entering] = lo_[entering];
      }
      continue;
    }
    x_[entering] += direction * t;
    const int leaving = head_[leave];
    x_[leaving] = leave_target;
    state_[leaving] = (leave_target == lo_[leaving]) ? NonbasicState::kAtLower
                                                     : NonbasicState::kAtUpper;
    pos_[leaving] = -1;
    head_[leave] = entering;
    pos_[entering] = leave;
    state_[entering] = NonbasicState::kBasic;
    Pivot(leave, alpha);
  }
}

bool BoundedSimplex::CheckOptimalityCertificate(double tol) const {
  std::vector<double> cb(m_);
  for (int p = 0; p < m_; ++p) cb[p] = CostOf(head_[p], true);
  std::vector<double> y;
  Btran(cb, y);
  for (int j = 0; j < n_ + m_; ++j) {
    if (pos_[j] >= 0 || lo_[j] == hi_[j]) continue;
    const double d = CostOf(j, true) - ColumnDot(j, y);
    switch (state_[j]) {
      case NonbasicState::kAtLower:
        if (d < -tol) return false;
        break;
      case NonbasicState::kAtUpper:
        if (d > tol) return false;
        break;
      case NonbasicState::kFree:
        if (std::abs(d) > tol) return false;
        break;
      case NonbasicState::kBasic:
        break;
    }
  }
  for (int p = 0; p < m_; ++p) {
    const int v = head_[p];
    if (x_[v] < lo_[v] - 10 * options_.primal_tol ||
        x_[v] > hi_[v] + 10 * options_.primal_tol) {
      return false;
    }
  }
  return true;
}

}  // namespace ohs
