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

// Metropolis-Hastings search over mode sequences minimizing the sum of
// infeasibilities (DeepSoi), with SAT-guided or random-walk proposals.

#ifndef OHS_MCMC_HPP_
#define OHS_MCMC_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "deadline.hpp"
#include "ir.hpp"
#include "lp.hpp"
#include "sat.hpp"

namespace ohs {

using Rng = std::mt19937_64;

enum class ProposalStrategy { kPropagation, kWalksat };

struct McmcConfig {
  double beta = 1.0;
  // Rejected proposals allowed per DeepSoi call.
  int budget = 200;
  std::uint64_t seed = 0;
  ProposalStrategy strategy = ProposalStrategy::kPropagation;
};

struct McmcStats {
  std::int64_t proposals = 0;
  std::int64_t accepted = 0;
  std::int64_t sat_queries = 0;
  double sat_seconds = 0.0;
  double total_seconds = 0.0;
};

// Metropolis acceptance: true when c_new <= c without drawing, otherwise
// one uniform draw u and u < exp(-beta * (c_new - c)).
bool Accept(double c, double c_new, double beta, Rng& rng);

// Groups picked from by the proposal moves: those whose one-hot alpha
// violates, or failing that the groups whose chosen member is below 1.
std::vector<int> ProposalGroups(const Problem& problem, const ModeSequence& f,
                                const Assignment& alpha);

// SAT-guided proposal. Flips one random candidate group of f to a random
// other member, then queues that literal followed by the current choices of
// all other groups in ascending group order. Trailing literals are dropped
// until db plus `fixed` plus the queue is satisfiable, and the sequence is
// read off the model. Throws kContractViolation when db plus `fixed` is
// unsatisfiable.
ModeSequence Propose(const Problem& problem, const ModeSequence& f,
                     const Assignment& alpha, ClauseDatabase& db,
                     std::span<const Lit> fixed, Rng& rng,
                     McmcStats* stats = nullptr);

// Random-walk proposal: one random candidate group moved to a random other
// member, no consistency check.
ModeSequence ProposeWalksat(const Problem& problem, const ModeSequence& f,
                            const Assignment& alpha, Rng& rng);

// Mode sequence selected by a SAT model.
ModeSequence SequenceFromModel(const Problem& problem,
                               const ClauseDatabase& db);

// Fixings {choice = 1} for every group: the premise of a sequence lemma.
std::vector<Fixing> SequenceFixings(const ModeSequence& f);

// Clause sink with deduplication. Every lemma is recorded as its fixings so
// that callers can re-certify it.
class LemmaStore {
 public:
  LemmaStore(const Problem& problem, ClauseDatabase& db)
      : problem_(problem), db_(db) {}

  // Adds the clause ruling out `fixings`; false if it was already present.
  bool Add(std::vector<Fixing> fixings);

  ClauseDatabase& db() { return db_; }
  const std::vector<std::vector<Fixing>>& lemmas() const { return lemmas_; }

 private:
  const Problem& problem_;
  ClauseDatabase& db_;
  std::set<Clause> seen_;
  std::vector<std::vector<Fixing>> lemmas_;
};

enum class DeepSoiStatus {
  kInfeasible,  // relaxation infeasible, or all sequences ruled out
  kSolved,      // alpha satisfies the problem precisely
  kInconclusive,  // relaxation feasible, no integral point found
};

struct DeepSoiResult {
  DeepSoiStatus status = DeepSoiStatus::kInconclusive;
  Assignment alpha;
  // Relaxation infeasible: the responsible decisions (possibly empty).
  std::vector<Fixing> explanation;
  // Set when infeasibility came from exhausting the sequences.
  bool exhausted = false;
  // Cost of the final chain state.
  double cost = 0.0;
  // Lowest cost seen after each accepted move, for diagnostics.
  std::vector<double> best_costs;
};

// Runs Phase I and, if needed, the Metropolis chain on `lp` under its
// current decisions. `fixed` are the SAT literals of those decisions.
// Sequence lemmas go to `lemmas` (and thereby to its database).
DeepSoiResult DeepSoi(LpModel& lp, std::span<const Lit> fixed,
                      LemmaStore& lemmas, const McmcConfig& config, Rng& rng,
                      const Deadline& deadline, McmcStats* stats = nullptr);

// True iff db plus `fixed` admits no mode sequence.
bool Exhausted(ClauseDatabase& db, std::span<const Lit> fixed,
               McmcStats* stats = nullptr);

}  // namespace ohs

#endif  // OHS_MCMC_HPP_
