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

#include "lp.hpp"

#include <algorithm>

#include "errors.hpp"

namespace ohs {

namespace {

std::vector<SimplexRow> BuildRows(const Problem& problem) {
  std::vector<SimplexRow> rows;
  rows.reserve(problem.constraints().size() + problem.groups().size());
  for (const LinearConstraint& c : problem.constraints()) {
    SimplexRow row;
    for (const Term& t : c.terms) {
      row.entries.push_back(SparseEntry{t.var.index, t.coeff});
    }
    row.upper = c.rhs;
    row.lower = c.relation == Relation::kEq ? c.rhs : -kInf;
    rows.push_back(std::move(row));
  }
  for (const OneHotGroup& g : problem.groups()) {
    SimplexRow row;
    for (VarId v : g.members) row.entries.push_back(SparseEntry{v.index, 1.0});
    row.lower = 1.0;
    row.upper = 1.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> RelaxedLower(const Problem& problem) {
  std::vector<double> lo(problem.lower_bounds().begin(),
                         problem.lower_bounds().end());
  for (const OneHotGroup& g : problem.groups()) {
    for (VarId v : g.members) lo[v.index] = std::max(lo[v.index], 0.0);
  }
  return lo;
}

std::vector<double> RelaxedUpper(const Problem& problem) {
  std::vector<double> hi(problem.upper_bounds().begin(),
                         problem.upper_bounds().end());
  for (const OneHotGroup& g : problem.groups()) {
    for (VarId v : g.members) hi[v.index] = std::min(hi[v.index], 1.0);
  }
  return hi;
}

}  // namespace

LpModel::LpModel(const Problem& problem, SimplexOptions options)
    : problem_(problem),
      simplex_(problem.num_vars(), BuildRows(problem), RelaxedLower(problem),
               RelaxedUpper(problem), options) {}

void LpModel::ApplyBounds(const DecisionSet& decisions) {
  for (int j : touched_) {
    const VarId v(j);
    double lo = problem_.lower(v);
    double hi = problem_.upper(v);
    if (problem_.group_of(v)) {
      lo = std::max(lo, 0.0);
      hi = std::min(hi, 1.0);
    }
    simplex_.SetColumnBounds(j, lo, hi);
  }
  touched_.clear();
  for (const Fixing& f : decisions.fixings) {
    const double value = f.value ? 1.0 : 0.0;
    const double lo = std::max(simplex_.column_lower(f.var.index), value);
    const double hi = std::min(simplex_.column_upper(f.var.index), value);
    simplex_.SetColumnBounds(f.var.index, lo, hi);
    touched_.push_back(f.var.index);
  }
}

void LpModel::SetDecisions(const DecisionSet& decisions) {
  decisions_ = decisions;
  ApplyBounds(decisions_);
}

void LpModel::SetObjective(const LinearObjective& objective) {
  objective_ = objective;
  std::vector<double> cost(problem_.num_vars(), 0.0);
  for (const Term& t : objective.terms) cost[t.var.index] += t.coeff;
  simplex_.SetObjective(cost);
}

bool LpModel::Feasible() {
  ++num_solves_;
  return simplex_.FindFeasible() == SimplexStatus::kOptimal;
}

LpOutcome LpModel::CheckFeasible(bool explain) {
  LpOutcome out;
  if (Feasible()) {
    out.status = LpStatus::kFeasible;
    out.assignment = Assignment(simplex_.ColumnValues());
    return out;
  }
  out.status = LpStatus::kInfeasible;
  if (explain) out.explanation = Explain();
  return out;
}

LpOutcome LpModel::Optimize() {
  ++num_solves_;
  LpOutcome out;
  switch (simplex_.Minimize()) {
    case SimplexStatus::kInfeasible:
      out.status = LpStatus::kInfeasible;
      return out;
    case SimplexStatus::kUnbounded:
      out.status = LpStatus::kUnbounded;
      return out;
    case SimplexStatus::kOptimal:
      break;
  }
  out.status = LpStatus::kFeasible;
  out.assignment = Assignment(simplex_.ColumnValues());
  out.optimal_value = objective_.constant + simplex_.ObjectiveValue();
  return out;
}

LpOutcome LpModel::Optimize(const LinearObjective& objective) {
  SetObjective(objective);
  return Optimize();
}

std::vector<Fixing> LpModel::Explain() {
  const DecisionSet original = decisions_;
  if (Feasible()) {
    throw Error(ErrorCode::kContractViolation,
                "explanation requested for a feasible model");
  }
  std::vector<Fixing> kept;
  ApplyBounds(DecisionSet{});
  if (!Feasible()) {
    ApplyBounds(original);
    return kept;
  }
  std::vector<Fixing> candidate = original.fixings;
  std::size_t i = 0;
  while (i < candidate.size()) {
    DecisionSet without;
    without.fixings.reserve(candidate.size() - 1);
    for (std::size_t k = 0; k < candidate.size(); ++k) {
      if (k != i) without.fixings.push_back(candidate[k]);
    }
    ApplyBounds(without);
    if (Feasible()) {
      ++i;  // needed
    } else {
      candidate = std::move(without.fixings);
    }
  }
  ApplyBounds(original);
  return candidate;
}

}  // namespace ohs
