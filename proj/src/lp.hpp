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

#ifndef OHS_LP_HPP_
#define OHS_LP_HPP_

#include <cstdint>
#include <vector>

#include "ir.hpp"
#include "simplex.hpp"

namespace ohs {

enum class LpStatus { kFeasible, kInfeasible, kUnbounded };

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Assignment assignment;           // kFeasible only
  double optimal_value = 0.0;      // optimize only, constant included
  std::vector<Fixing> explanation; // kInfeasible with explanation requested
};

// The convex relaxation of a Problem: every linear constraint, the relaxed
// group rows sum(b) = 1 with b in [0,1], and the current decision fixings
// applied as bound changes. Strict inequalities are treated as non-strict.
//
// The model keeps its simplex basis across calls, so changing the objective
// or the decisions and solving again is a warm start.
class LpModel {
 public:
  explicit LpModel(const Problem& problem, SimplexOptions options = {});

  const Problem& problem() const { return problem_; }

  // Replaces the current decisions. Fixings outside a variable's base bounds
  // make the model trivially infeasible.
  void SetDecisions(const DecisionSet& decisions);
  const DecisionSet& decisions() const { return decisions_; }

  void SetObjective(const LinearObjective& objective);
  const LinearObjective& objective() const { return objective_; }

  // Feasibility of the relaxation under the current decisions. On
  // infeasibility the explanation is computed when `explain` is set.
  LpOutcome CheckFeasible(bool explain = true);
  // Minimizes the current objective.
  LpOutcome Optimize();
  LpOutcome Optimize(const LinearObjective& objective);

  // Deletion filter over the current decisions: a subset L such that the
  // relaxation plus L is infeasible and dropping any single member of L
  // restores feasibility. Empty when the relaxation is infeasible on its own.
  // Throws ErrorCode::kContractViolation if the model is feasible.
  std::vector<Fixing> Explain();

  BoundedSimplex& simplex() { return simplex_; }
  std::int64_t num_solves() const { return num_solves_; }

 private:
  bool Feasible();
  void ApplyBounds(const DecisionSet& decisions);

  const Problem& problem_;
  BoundedSimplex simplex_;
  DecisionSet decisions_;
  LinearObjective objective_;
  std::vector<int> touched_;
  std::int64_t num_solves_ = 0;
};

}  // namespace ohs

#endif  // OHS_LP_HPP_
