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

#include "search.hpp"

#include <chrono>
#include <optional>

#include "errors.hpp"
#include "lp.hpp"
#include "presolve.hpp"
#include "soi.hpp"

namespace ohs {

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

class Searcher {
 public:
  Searcher(const Problem& problem, const SolverConfig& config)
      : problem_(problem),
        config_(config),
        deadline_(config.time_limit),
        cdcl_(config.mode != SolverMode::kNoCdcl),
        db_(problem.num_props()),
        store_(problem, db_),
        lp_(problem),
        rng_(config.mcmc.seed),
        decided_(problem.num_groups(), false) {
    mcmc_ = config.mcmc;
    if (config.mode == SolverMode::kNoProp) {
      mcmc_.strategy = ProposalStrategy::kWalksat;
    }
    for (const OneHotGroup& g : problem.groups()) {
      for (Clause& c : EncodeOneHot(g, problem)) db_.AddClause(std::move(c));
      for (VarId v : g.members) {
        const Lit p = Lit::Pos(*problem.prop_of(v));
        if (problem.upper(v) < 0.5) db_.AddClause({~p});
        if (problem.lower(v) > 0.5) db_.AddClause({p});
      }
    }
    base_db_ = db_;
  }

  SearchResult Run() {
    const auto start = Clock::now();
    SearchResult result;
    try {
      std::vector<Fixing> decisions;
      std::vector<Lit> literals;
      result.status = Node(decisions, literals, 0) ? SearchStatus::kFeasible
                                                   : SearchStatus::kInfeasible;
      if (result.status == SearchStatus::kFeasible) result.witness = witness_;
    } catch (const TimeoutError&) {
      result.status = SearchStatus::kTimeout;
    }
    result.lemmas = store_.lemmas();
    stats_.lp_solves = lp_.num_solves();
    stats_.sat_queries += mcmc_stats_.sat_queries;
    stats_.sat_seconds += mcmc_stats_.sat_seconds;
    stats_.proposals = mcmc_stats_.proposals;
    stats_.accepted = mcmc_stats_.accepted;
    stats_.deep_soi_seconds = mcmc_stats_.total_seconds;
    stats_.deep_soi_sat_seconds = mcmc_stats_.sat_seconds;
    stats_.lemmas = static_cast<std::int64_t>(result.lemmas.size());
    stats_.wall_seconds = Seconds(start);
    result.stats = stats_;
    return result;
  }

 private:
  bool SatCheck(const std::vector<Lit>& literals) {
    const auto start = Clock::now();
    const bool sat = db_.Solve(literals);
    ++stats_.sat_queries;
    stats_.sat_seconds += Seconds(start);
    return sat;
  }

  void Learn(const std::vector<Fixing>& explanation) {
    if (cdcl_) store_.Add(explanation);
  }

  bool Node(std::vector<Fixing>& decisions, std::vector<Lit>& literals,
            int depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    deadline_.Check();
    if (cdcl_ && !SatCheck(literals)) return false;

    lp_.SetDecisions(DecisionSet{decisions});
    Assignment alpha;
    if (config_.mode == SolverMode::kNoSoi) {
      const LpOutcome out = lp_.CheckFeasible(cdcl_);
      if (out.status != LpStatus::kFeasible) {
        Learn(out.explanation);
        return false;
      }
      if (AssignmentSatisfies(problem_, out.assignment)) {
        witness_ = out.assignment;
        return true;
      }
      alpha = out.assignment;
    } else {
      std::optional<ClauseDatabase> scratch_db;
      std::optional<LemmaStore> scratch;
      if (!cdcl_) {
        scratch_db.emplace(base_db_);
        scratch.emplace(problem_, *scratch_db);
      }
      LemmaStore& store = cdcl_ ? store_ : *scratch;
      DeepSoiResult r =
          DeepSoi(lp_, literals, store, mcmc_, rng_, deadline_, &mcmc_stats_);
      if (r.status == DeepSoiStatus::kInfeasible) {
        if (!r.exhausted) Learn(r.explanation);
        return false;
      }
      if (r.status == DeepSoiStatus::kSolved) {
        witness_ = std::move(r.alpha);
        return true;
      }
      alpha = std::move(r.alpha);
    }

    const int g = SelectBranchGroup(problem_, decided_, alpha);
    const OneHotGroup& group = problem_.group(g);
    decided_[g] = true;
    for (VarId chosen : group.members) {
      const std::size_t mark = decisions.size();
      for (const Fixing& f : BranchFixings(group, chosen)) {
        decisions.push_back(f);
        literals.push_back(FixingLiteral(f, problem_));
      }
      const bool feasible = Node(decisions, literals, depth + 1);
      decisions.resize(mark);
      literals.resize(mark);
      if (feasible) return true;
    }
    decided_[g] = false;
    return false;
  }

  const Problem& problem_;
  const SolverConfig& config_;
  McmcConfig mcmc_;
  Deadline deadline_;
  bool cdcl_;
  ClauseDatabase db_;
  ClauseDatabase base_db_;
  LemmaStore store_;
  LpModel lp_;
  Rng rng_;
  std::vector<bool> decided_;
  Assignment witness_;
  SearchStats stats_;
  McmcStats mcmc_stats_;
};

}  // namespace

const char* SolverModeName(SolverMode mode) {
  switch (mode) {
    case SolverMode::kFull:
      return "full";
    case SolverMode::kNoCdcl:
      return "no-cdcl";
    case SolverMode::kNoSoi:
      return "no-soi";
    case SolverMode::kNoProp:
      return "no-prop";
  }
  return "?";
}

SolverMode ParseSolverMode(const std::string& name) {
  for (SolverMode m : {SolverMode::kFull, SolverMode::kNoCdcl,
                       SolverMode::kNoSoi, SolverMode::kNoProp}) {
    if (name == SolverModeName(m)) return m;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown solver mode " + name);
}

const char* SearchStatusName(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFeasible:
      return "FEASIBLE";
    case SearchStatus::kInfeasible:
      return "INFEASIBLE";
    case SearchStatus::kTimeout:
      return "TIMEOUT";
  }
  return "?";
}

int SelectBranchGroup(const Problem& problem, const std::vector<bool>& decided,
                      const Assignment& alpha) {
  int best = -1;
  double best_vio = -kInf;
  for (const OneHotGroup& g : problem.groups()) {
    if (decided[g.id]) continue;
    const double vio = Vio(g, alpha);
    if (vio > best_vio) {
      best = g.id;
      best_vio = vio;
    }
  }
  if (best < 0) {
    throw Error(ErrorCode::kContractViolation,
                "no undecided group left to branch on");
  }
  return best;
}

SearchResult CheckFeas(const Problem& problem, const SolverConfig& config) {
  return Searcher(problem, config).Run();
}

SearchResult Solve(const Problem& problem, const SolverConfig& config) {
  const auto start = Clock::now();
  Problem working = problem;
  SearchStats presolve_stats;
  if (config.presolve) {
    const PresolveResult pre = Propagate(problem);
    presolve_stats.presolve_tightenings = pre.tightenings;
    if (pre.status == PresolveStatus::kProvenInfeasible) {
      SearchResult result;
      result.status = SearchStatus::kInfeasible;
      result.stats = presolve_stats;
      result.stats.presolve_infeasible = true;
      result.stats.wall_seconds = Seconds(start);
      return result;
    }
    ApplyBounds(working, pre);
  }
  SolverConfig remaining = config;
  if (config.time_limit > 0) {
    remaining.time_limit = config.time_limit - Seconds(start);
    if (remaining.time_limit <= 0) {
      SearchResult result;
      result.status = SearchStatus::kTimeout;
      result.stats = presolve_stats;
      return result;
    }
  }
  SearchResult result = CheckFeas(working, remaining);
  result.stats.presolve_tightenings = presolve_stats.presolve_tightenings;
  result.stats.wall_seconds = Seconds(start);
  if (result.status == SearchStatus::kFeasible &&
      !AssignmentSatisfies(problem, result.witness)) {
    throw Error(ErrorCode::kValidation,
                "witness fails the original constraints");
  }
  return result;
}

}  // namespace ohs
