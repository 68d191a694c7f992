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

// Exact-rational reference LP used only by tests: a dense two-phase tableau
// simplex over GMP rationals with Bland's rule. It shares nothing with the
// floating-point engine besides the Problem type it reads.

#ifndef OHS_TESTS_EXACT_LP_HPP_
#define OHS_TESTS_EXACT_LP_HPP_

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ir.hpp"

namespace ohs::testing {

struct ExactLpResult {
  bool feasible = false;
  mpq_class value = 0;  // minimum of the objective when feasible
};

namespace detail {

class Tableau {
 public:
  // rows: a x = b with b >= 0; every variable >= 0.
  Tableau(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b)
      : m_(static_cast<int>(a.size())),
        n_(a.empty() ? 0 : static_cast<int>(a[0].size())) {
    // Layout: [original n | artificials m | rhs]
    width_ = n_ + m_ + 1;
    t_.assign(m_, std::vector<mpq_class>(width_, 0));
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) t_[i][j] = a[i][j];
      t_[i][n_ + i] = 1;
      t_[i][width_ - 1] = b[i];
      basis_[i] = n_ + i;
    }
  }

  // Minimizes cost (size n_ + m_) over allowed columns. Returns false when
  // unbounded.
  bool Minimize(const std::vector<mpq_class>& cost,
                const std::vector<bool>& allowed) {
    for (;;) {
      // reduced costs
      int enter = -1;
      for (int j = 0; j < n_ + m_; ++j) {
        if (!allowed[j] || IsBasic(j)) continue;
        mpq_class d = cost[j];
        for (int i = 0; i < m_; ++i) d -= cost[basis_[i]] * t_[i][j];
        if (d < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      mpq_class best;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        mpq_class ratio = t_[i][width_ - 1] / t_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  mpq_class Value(const std::vector<mpq_class>& cost) const {
    mpq_class v = 0;
    for (int i = 0; i < m_; ++i) v += cost[basis_[i]] * t_[i][width_ - 1];
    return v;
  }

  // Pivots basic artificials out where possible.
  void DriveOutArtificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (int j = 0; j < n_; ++j) {
        if (!IsBasic(j) && t_[i][j] != 0) {
          Pivot(i, j);
          break;
        }
      }
    }
  }

  int n() const { return n_; }
  int m() const { return m_; }

 private:
  bool IsBasic(int j) const {
    for (int b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  void Pivot(int r, int c) {
    const mpq_class p = t_[r][c];
    for (auto& v : t_[r]) v /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const mpq_class f = t_[i][c];
      for (int j = 0; j < width_; ++j) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  int m_;
  int n_;
  int width_;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<int> basis_;
};

}  // namespace detail

// Solves min objective over the relaxation of `problem` under `decisions`.
// Every variable must have finite bounds. A null objective checks
// feasibility only.
inline ExactLpResult ExactSolve(const Problem& problem,
                                const DecisionSet& decisions,
                                const LinearObjective* objective) {
  const int n = problem.num_vars();
  std::vector<mpq_class> lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    double l = problem.lower(VarId(j));
    double h = problem.upper(VarId(j));
    if (problem.group_of(VarId(j))) {
      l = std::max(l, 0.0);
      h = std::min(h, 1.0);
    }
    if (!std::isfinite(l) || !std::isfinite(h)) {
      throw std::invalid_argument("exact LP needs finite bounds");
    }
    lo[j] = l;
    hi[j] = h;
  }
  for (const Fixing& f : decisions.fixings) {
    const mpq_class v = f.value ? 1 : 0;
    if (v > lo[f.var.index]) lo[f.var.index] = v;
    if (v < hi[f.var.index]) hi[f.var.index] = v;
  }
  for (int j = 0; j < n; ++j) {
    if (lo[j] > hi[j]) return {};
  }

  struct Row {
    std::vector<mpq_class> a;
    mpq_class b;
    bool eq;
  };
  std::vector<Row> rows;
  auto add_row = [&](const std::vector<Term>& terms, double rhs, bool eq) {
    Row r{std::vector<mpq_class>(n, 0), mpq_class(rhs), eq};
    for (const Term& t : terms) {
      r.a[t.var.index] += mpq_class(t.coeff);
    }
    for (int j = 0; j < n; ++j) r.b -= r.a[j] * lo[j];  // shift x = lo + x'
    rows.push_back(std::move(r));
  };
  for (const LinearConstraint& c : problem.constraints()) {
    add_row(c.terms, c.rhs, c.relation == Relation::kEq);
  }
  for (const OneHotGroup& g : problem.groups()) {
    std::vector<Term> terms;
    for (VarId v : g.members) terms.push_back(Term{v, 1.0});
    add_row(terms, 1.0, true);
  }
  // x'_j <= hi - lo
  const int base_rows = static_cast<int>(rows.size());
  for (int j = 0; j < n; ++j) {
    Row r{std::vector<mpq_class>(n, 0), hi[j] - lo[j], false};
    r.a[j] = 1;
    rows.push_back(std::move(r));
  }
  (void)base_rows;

  // Columns: x' (n) then one slack per inequality row.
  int slacks = 0;
  for (const Row& r : rows) slacks += r.eq ? 0 : 1;
  const int cols = n + slacks;
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  int s = 0;
  for (const Row& r : rows) {
    std::vector<mpq_class> row(cols, 0);
    for (int j = 0; j < n; ++j) row[j] = r.a[j];
    if (!r.eq) row[n + s++] = 1;
    mpq_class rhs = r.b;
    if (rhs < 0) {
      for (auto& v : row) v = -v;
      rhs = -rhs;
    }
    a.push_back(std::move(row));
    b.push_back(rhs);
  }
  detail::Tableau tab(a, b);
  const int m = tab.m();
  std::vector<mpq_class> phase1(cols + m, 0);
  for (int i = 0; i < m; ++i) phase1[cols + i] = 1;
  std::vector<bool> all(cols + m, true);
  tab.Minimize(phase1, all);
  if (tab.Value(phase1) != 0) return {};
  ExactLpResult out;
  out.feasible = true;
  if (objective == nullptr) return out;

  tab.DriveOutArtificials();
  std::vector<mpq_class> cost(cols + m, 0);
  mpq_class constant = mpq_class(objective->constant);
  for (const Term& t : objective->terms) {
    cost[t.var.index] += mpq_class(t.coeff);
    constant += mpq_class(t.coeff) * lo[t.var.index];
  }
  std::vector<bool> allowed(cols + m, true);
  for (int i = 0; i < m; ++i) allowed[cols + i] = false;
  if (!tab.Minimize(cost, allowed)) {
    throw std::runtime_error("exact LP unbounded despite finite bounds");
  }
  out.value = tab.Value(cost) + constant;
  return out;
}

}  // namespace ohs::testing

#endif  // OHS_TESTS_EXACT_LP_HPP_
