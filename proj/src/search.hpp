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

// DPLL(T)-style feasibility search over one-hot groups.
//
// One clause database holds the group encodings and every learned lemma;
// the decisions of a node are passed to it as assumptions, which keeps the
// lemmas (all of them globally valid) shared between nodes.

#ifndef OHS_SEARCH_HPP_
#define OHS_SEARCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ir.hpp"
#include "mcmc.hpp"

namespace ohs {

enum class SolverMode { kFull, kNoCdcl, kNoSoi, kNoProp };

const char* SolverModeName(SolverMode mode);
// Accepts "full", "no-cdcl", "no-soi", "no-prop".
SolverMode ParseSolverMode(const std::string& name);

struct SolverConfig {
  SolverMode mode = SolverMode::kFull;
  McmcConfig mcmc;
  // Wall-clock seconds; non-positive means unlimited.
  double time_limit = 0.0;
  bool presolve = true;
};

enum class SearchStatus { kFeasible, kInfeasible, kTimeout };

const char* SearchStatusName(SearchStatus status);

struct SearchStats {
  std::int64_t nodes = 0;
  int max_depth = 0;
  std::int64_t lp_solves = 0;
  std::int64_t sat_queries = 0;
  std::int64_t proposals = 0;
  std::int64_t accepted = 0;
  std::int64_t lemmas = 0;
  double sat_seconds = 0.0;
  double deep_soi_seconds = 0.0;
  double deep_soi_sat_seconds = 0.0;
  double wall_seconds = 0.0;
  bool presolve_infeasible = false;
  int presolve_tightenings = 0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::kInfeasible;
  Assignment witness;  // kFeasible only
  // Fixings behind every clause added to the database, in order.
  std::vector<std::vector<Fixing>> lemmas;
  SearchStats stats;
};

// Undecided group with the largest vio under alpha, ties to the lowest id.
// Throws kContractViolation when every group is decided.
int SelectBranchGroup(const Problem& problem, const std::vector<bool>& decided,
                      const Assignment& alpha);

// The search proper on an already presolved problem.
SearchResult CheckFeas(const Problem& problem, const SolverConfig& config);

// Presolve (if enabled), then CheckFeas. A witness is re-checked against
// the original problem; a failing witness throws Error(kValidation).
SearchResult Solve(const Problem& problem, const SolverConfig& config);

}  // namespace ohs

#endif  // OHS_SEARCH_HPP_
