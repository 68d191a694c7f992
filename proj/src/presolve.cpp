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

#include "presolve.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "errors.hpp"

namespace ohs {

namespace {

// Outward slack on every derived bound to absorb rounding.
constexpr double kSafety = 1e-11;

// Work items: constraint rows first, then groups at offset num_rows.
class Propagator {
 public:
  Propagator(const Problem& problem, const PresolveOptions& options)
      : problem_(problem),
        options_(options),
        lo_(problem.lower_bounds().begin(), problem.lower_bounds().end()),
        hi_(problem.upper_bounds().begin(), problem.upper_bounds().end()),
        num_rows_(static_cast<int>(problem.constraints().size())),
        watchers_(problem.num_vars()) {
    for (int r = 0; r < num_rows_; ++r) {
      for (const Term& t : problem.constraints()[r].terms) {
        watchers_[t.var.index].push_back(r);
      }
    }
    for (const OneHotGroup& g : problem.groups()) {
      for (VarId v : g.members) watchers_[v.index].push_back(num_rows_ + g.id);
    }
    const int items = num_rows_ + problem.num_groups();
    queued_.assign(items, 1);
    for (int i = 0; i < items; ++i) queue_.push_back(i);
  }

  PresolveResult Run() {
    PresolveResult result;
    std::int64_t cap = options_.max_work;
    if (cap <= 0) cap = 200 * static_cast<std::int64_t>(queued_.size()) + 10000;
    for (int j = 0; j < problem_.num_vars(); ++j) {
      if (problem_.is_binary(VarId(j))) Update(j, 0.0, 1.0);
    }
    std::int64_t work = 0;
    while (!queue_.empty() && !infeasible_) {
      if (++work > cap) {
        result.fixed_point = false;
        break;
      }
      const int item = queue_.front();
      queue_.pop_front();
      queued_[item] = 0;
      if (item < num_rows_) {
        PropagateRow(problem_.constraints()[item]);
      } else {
        PropagateGroup(problem_.group(item - num_rows_));
      }
    }
    result.status = infeasible_ ? PresolveStatus::kProvenInfeasible
                                : PresolveStatus::kTightened;
    result.lower = std::move(lo_);
    result.upper = std::move(hi_);
    result.tightenings = tightenings_;
    return result;
  }

 private:
  // Intersects [lo, hi] of variable j with [new_lo, new_hi].
  void Update(int j, double new_lo, double new_hi) {
    if (problem_.is_binary(VarId(j))) {
      new_lo = std::ceil(new_lo - options_.feasibility_tol);
      new_hi = std::floor(new_hi + options_.feasibility_tol);
    }
    bool changed = false;
    if (std::abs(new_lo) <= options_.max_bound &&
        new_lo > lo_[j] + options_.min_change * std::max(1.0, std::abs(new_lo))) {
      lo_[j] = new_lo;
      changed = true;
    }
    if (std::abs(new_hi) <= options_.max_bound &&
        new_hi < hi_[j] - options_.min_change * std::max(1.0, std::abs(new_hi))) {
      hi_[j] = new_hi;
      changed = true;
    }
    if (!changed) return;
    ++tightenings_;
    if (lo_[j] > hi_[j]) {
      if (lo_[j] > hi_[j] + options_.feasibility_tol) {
        infeasible_ = true;
        return;
      }
      const double mid = 0.5 * (lo_[j] + hi_[j]);
      lo_[j] = hi_[j] = mid;
    }
    for (int item : watchers_[j]) {
      if (!queued_[item]) {
        queued_[item] = 1;
        queue_.push_back(item);
      }
    }
  }

  // sum c_i x_i <= rhs: each term is bounded by rhs minus the least the other
  // terms can contribute.
  void PropagateUpper(const std::vector<Term>& terms, double sign, double rhs) {
    double min_act = 0.0;
    int inf_count = 0;
    int inf_term = -1;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const double c = sign * terms[i].coeff;
      const int j = terms[i].var.index;
      const double b = c > 0 ? lo_[j] : hi_[j];
      if (std::isinf(b)) {
        ++inf_count;
        inf_term = static_cast<int>(i);
      } else {
        min_act += c * b;
      }
    }
    if (inf_count > 1) return;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (inf_count == 1 && static_cast<int>(i) != inf_term) continue;
      const double c = sign * terms[i].coeff;
      const int j = terms[i].var.index;
      double residual = min_act;
      if (inf_count == 0) residual -= c * (c > 0 ? lo_[j] : hi_[j]);
      double bound = (rhs - residual) / c;
      bound += (c > 0 ? 1 : -1) * kSafety * std::max(1.0, std::abs(bound));
      if (c > 0) {
        Update(j, -kInf, bound);
      } else {
        Update(j, bound, kInf);
      }
      if (infeasible_) return;
    }
  }

  void PropagateRow(const LinearConstraint& row) {
    PropagateUpper(row.terms, 1.0, row.rhs);
    if (row.relation == Relation::kEq && !infeasible_) {
      PropagateUpper(row.terms, -1.0, -row.rhs);
    }
  }

  void PropagateGroup(const OneHotGroup& g) {
    int ones = 0;
    int open = 0;
    int last_open = -1;
    for (VarId v : g.members) {
      if (lo_[v.index] >= 1.0) {
        ++ones;
      } else if (hi_[v.index] > 0.0) {
        ++open;
        last_open = v.index;
      }
    }
    if (ones > 1 || (ones == 0 && open == 0)) {
      infeasible_ = true;
      return;
    }
    if (ones == 1) {
      for (VarId v : g.members) {
        if (lo_[v.index] < 1.0) Update(v.index, -kInf, 0.0);
        if (infeasible_) return;
      }
    } else if (open == 1) {
      Update(last_open, 1.0, kInf);
    }
  }

  const Problem& problem_;
  const PresolveOptions& options_;
  std::vector<double> lo_;
  std::vector<double> hi_;
  int num_rows_;
  std::vector<std::vector<int>> watchers_;
  std::deque<int> queue_;
  std::vector<char> queued_;
  int tightenings_ = 0;
  bool infeasible_ = false;
};

}  // namespace

PresolveResult Propagate(const Problem& problem,
                         const PresolveOptions& options) {
  return Propagator(problem, options).Run();
}

void ApplyBounds(Problem& problem, const PresolveResult& result) {
  if (result.status != PresolveStatus::kTightened) {
    throw Error(ErrorCode::kContractViolation,
                "cannot apply bounds of an infeasible presolve");
  }
  for (int j = 0; j < problem.num_vars(); ++j) {
    problem.SetBounds(VarId(j), result.lower[j], result.upper[j]);
  }
}

}  // namespace ohs
