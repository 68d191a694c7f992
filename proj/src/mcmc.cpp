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

#include "mcmc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "errors.hpp"
#include "soi.hpp"

namespace ohs {

namespace {

// Costs below this are re-checked with the chosen modes fixed.
constexpr double kCertifyBelow = 1e-3;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

bool TimedSolve(ClauseDatabase& db, std::span<const Lit> assumptions,
                McmcStats* stats) {
  const auto start = Clock::now();
  const bool sat = db.Solve(assumptions);
  if (stats) {
    ++stats->sat_queries;
    stats->sat_seconds += Seconds(start);
  }
  return sat;
}

int UniformIndex(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<int>(0, static_cast<int>(n) - 1)(rng);
}

// Picks the group and its new member for a proposal move.
std::pair<int, VarId> Flip(const Problem& problem, const ModeSequence& f,
                           const Assignment& alpha, Rng& rng) {
  const std::vector<int> groups = ProposalGroups(problem, f, alpha);
  if (groups.empty()) {
    throw Error(ErrorCode::kContractViolation,
                "proposal requested with every group satisfied");
  }
  const int g = groups[UniformIndex(rng, groups.size())];
  std::vector<VarId> others;
  for (VarId v : problem.group(g).members) {
    if (v != f.choice[g]) others.push_back(v);
  }
  return {g, others[UniformIndex(rng, others.size())]};
}

struct Evaluation {
  double cost = 0.0;
  bool zero = false;    // cost certified 0 (chosen modes LP-feasible)
  bool solved = false;  // alpha satisfies the problem precisely
  Assignment alpha;
};

Evaluation Evaluate(LpModel& lp, const DecisionSet& base, const ModeSequence& f,
                    const Deadline& deadline) {
  const Problem& problem = lp.problem();
  deadline.Check();
  const LpOutcome out = lp.Optimize(ModeSequenceToObjective(f, problem));
  if (out.status != LpStatus::kFeasible) {
    throw Error(ErrorCode::kNumerical,
                "sequence objective infeasible on a feasible relaxation");
  }
  Evaluation e;
  e.cost = std::max(0.0, out.optimal_value);
  e.alpha = out.assignment;
  e.solved = AssignmentSatisfies(problem, e.alpha);
  if (e.solved || e.cost >= kCertifyBelow) return e;

  DecisionSet fixed = base;
  for (const Fixing& fx : SequenceFixings(f)) fixed.fixings.push_back(fx);
  deadline.Check();
  lp.SetDecisions(fixed);
  const LpOutcome polished = lp.CheckFeasible(false);
  lp.SetDecisions(base);
  if (polished.status == LpStatus::kFeasible) {
    e.cost = 0.0;
    e.zero = true;
    e.alpha = polished.assignment;
    e.solved = AssignmentSatisfies(problem, e.alpha);
  }
  return e;
}

}  // namespace

bool Accept(double c, double c_new, double beta, Rng& rng) {
  if (c_new <= c) return true;
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  return u < std::exp(-beta * (c_new - c));
}

std::vector<int> ProposalGroups(const Problem& problem, const ModeSequence& f,
                                const Assignment& alpha) {
  std::vector<int> groups = UnsatisfiedGroups(problem, alpha);
  if (!groups.empty()) return groups;
  for (const OneHotGroup& g : problem.groups()) {
    if (alpha[f.choice[g.id]] < 1.0 - kDefaultTol) groups.push_back(g.id);
  }
  return groups;
}

ModeSequence SequenceFromModel(const Problem& problem,
                               const ClauseDatabase& db) {
  ModeSequence f;
  f.choice.reserve(problem.num_groups());
  for (const OneHotGroup& g : problem.groups()) {
    VarId chosen;
    for (VarId v : g.members) {
      if (db.ModelValue(*problem.prop_of(v))) {
        chosen = v;
        break;
      }
    }
    if (!chosen.valid()) {
      throw Error(ErrorCode::kContractViolation,
                  "SAT model selects no member of a group");
    }
    f.choice.push_back(chosen);
  }
  return f;
}

ModeSequence Propose(const Problem& problem, const ModeSequence& f,
                     const Assignment& alpha, ClauseDatabase& db,
                     std::span<const Lit> fixed, Rng& rng, McmcStats* stats) {
  const auto [g, flipped] = Flip(problem, f, alpha, rng);
  std::vector<Lit> assumptions(fixed.begin(), fixed.end());
  assumptions.push_back(Lit::Pos(*problem.prop_of(flipped)));
  for (const OneHotGroup& h : problem.groups()) {
    if (h.id != g) assumptions.push_back(Lit::Pos(*problem.prop_of(f.choice[h.id])));
  }
  while (!TimedSolve(db, assumptions, stats)) {
    if (assumptions.size() == fixed.size()) {
      throw Error(ErrorCode::kContractViolation,
                  "proposal requested on an unsatisfiable clause database");
    }
    assumptions.pop_back();
  }
  return SequenceFromModel(problem, db);
}

ModeSequence ProposeWalksat(const Problem& problem, const ModeSequence& f,
                            const Assignment& alpha, Rng& rng) {
  const auto [g, flipped] = Flip(problem, f, alpha, rng);
  ModeSequence next = f;
  next.choice[g] = flipped;
  return next;
}

std::vector<Fixing> SequenceFixings(const ModeSequence& f) {
  std::vector<Fixing> out;
  out.reserve(f.choice.size());
  for (VarId v : f.choice) out.push_back(Fixing{v, true});
  return out;
}

bool LemmaStore::Add(std::vector<Fixing> fixings) {
  Clause clause = LemmaClause(fixings, problem_);
  std::sort(clause.begin(), clause.end());
  if (!seen_.insert(clause).second) return false;
  db_.AddClause(std::move(clause));
  lemmas_.push_back(std::move(fixings));
  return true;
}

bool Exhausted(ClauseDatabase& db, std::span<const Lit> fixed,
               McmcStats* stats) {
  return !TimedSolve(db, fixed, stats);
}

DeepSoiResult DeepSoi(LpModel& lp, std::span<const Lit> fixed,
                      LemmaStore& lemmas, const McmcConfig& config, Rng& rng,
                      const Deadline& deadline, McmcStats* stats) {
  const auto start = Clock::now();
  const Problem& problem = lp.problem();
  const DecisionSet base = lp.decisions();
  DeepSoiResult result;
  auto finish = [&](DeepSoiStatus status) {
    result.status = status;
    if (stats) stats->total_seconds += Seconds(start);
    return result;
  };

  deadline.Check();
  const LpOutcome phase1 = lp.CheckFeasible(true);
  if (phase1.status != LpStatus::kFeasible) {
    result.explanation = phase1.explanation;
    return finish(DeepSoiStatus::kInfeasible);
  }
  result.alpha = phase1.assignment;
  if (AssignmentSatisfies(problem, result.alpha)) {
    return finish(DeepSoiStatus::kSolved);
  }
  if (problem.num_groups() == 0) return finish(DeepSoiStatus::kInconclusive);

  ModeSequence f = InitialCost(result.alpha, problem);
  Evaluation current = Evaluate(lp, base, f, deadline);
  result.alpha = current.alpha;
  result.cost = current.cost;
  if (current.solved) return finish(DeepSoiStatus::kSolved);
  if (!current.zero) lemmas.Add(SequenceFixings(f));
  result.best_costs.push_back(current.cost);

  int rejected = 0;
  while (!current.zero && rejected < config.budget &&
         !Exhausted(lemmas.db(), fixed, stats)) {
    const ModeSequence next =
        config.strategy == ProposalStrategy::kPropagation
            ? Propose(problem, f, current.alpha, lemmas.db(), fixed, rng, stats)
            : ProposeWalksat(problem, f, current.alpha, rng);
    if (stats) ++stats->proposals;
    Evaluation candidate = Evaluate(lp, base, next, deadline);
    if (candidate.solved) {
      if (stats) ++stats->accepted;
      result.alpha = std::move(candidate.alpha);
      result.cost = candidate.cost;
      return finish(DeepSoiStatus::kSolved);
    }
    // A revisit of an already ruled-out sequence (walksat only) is charged
    // to the budget even when accepted.
    const bool revisit =
        !candidate.zero && !lemmas.Add(SequenceFixings(next));
    if (Accept(current.cost, candidate.cost, config.beta, rng)) {
      if (stats) ++stats->accepted;
      f = next;
      current = std::move(candidate);
      result.best_costs.push_back(
          std::min(result.best_costs.back(), current.cost));
      if (revisit) ++rejected;
    } else {
      ++rejected;
    }
  }
  result.alpha = current.alpha;
  result.cost = current.cost;
  if (!current.zero && Exhausted(lemmas.db(), fixed, stats)) {
    result.exhausted = true;
    return finish(DeepSoiStatus::kInfeasible);
  }
  return finish(DeepSoiStatus::kInconclusive);
}

}  // namespace ohs
