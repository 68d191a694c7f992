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

// Propositional reasoning over mode literals.
//
// ClauseDatabase is a small CDCL solver: two watched literals, first-UIP
// learning, no restarts, and a fixed decision order (lowest unassigned
// variable, positive phase) so that every query is reproducible. Problem
// clauses are never removed; learnt conflict clauses are implied by them and
// may be dropped between queries.

#ifndef OHS_SAT_HPP_
#define OHS_SAT_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ir.hpp"

namespace ohs {

class Lit {
 public:
  constexpr Lit() = default;
  constexpr Lit(PropVar v, bool negated)
      : code_(2 * v.index + (negated ? 1 : 0)) {}

  static constexpr Lit Pos(PropVar v) { return Lit(v, false); }
  static constexpr Lit Neg(PropVar v) { return Lit(v, true); }

  constexpr PropVar var() const { return PropVar(code_ >> 1); }
  constexpr bool negated() const { return code_ & 1; }
  constexpr int code() const { return code_; }
  constexpr Lit operator~() const {
    Lit l;
    l.code_ = code_ ^ 1;
    return l;
  }
  auto operator<=>(const Lit&) const = default;

 private:
  int code_ = -2;
};

using Clause = std::vector<Lit>;

struct SatStats {
  std::int64_t queries = 0;
  std::int64_t conflicts = 0;
  std::int64_t decisions = 0;
  std::int64_t propagations = 0;
};

class ClauseDatabase {
 public:
  ClauseDatabase() = default;
  explicit ClauseDatabase(int num_vars) { EnsureVars(num_vars); }

  void EnsureVars(int num_vars);
  int num_vars() const { return static_cast<int>(assigns_.size()); }

  // Adds a problem clause. Duplicate literals are merged; a tautology throws
  // ErrorCode::kInvalidArgument. Returns false once the database is known to
  // be unsatisfiable (for example after adding the empty clause).
  bool AddClause(Clause clause);

  bool IsSatisfiable() { return Solve({}); }
  // Satisfiability of the database plus every assumption as a unit. On
  // success the model assigns every variable and extends the assumptions.
  bool Solve(std::span<const Lit> assumptions);

  bool okay() const { return ok_; }
  bool ModelValue(PropVar v) const { return model_[v.index]; }
  const std::vector<bool>& model() const { return model_; }

  // Problem clauses in insertion order, as given (after literal dedup).
  const std::vector<Clause>& clauses() const { return original_; }
  // True iff every problem clause has a true literal under `values`.
  bool Satisfies(const std::vector<bool>& values) const;

  void WriteDimacs(std::ostream& out) const;

  const SatStats& stats() const { return stats_; }

 private:
  struct StoredClause {
    std::vector<Lit> lits;
    bool learnt = false;
  };

  int Value(Lit l) const {
    const int a = assigns_[l.var().index];
    return l.negated() ? -a : a;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }
  void Enqueue(Lit l, int reason);
  int Propagate();
  void Analyze(int conflict, std::vector<Lit>& learnt, int& backtrack_level);
  void CancelUntil(int level);
  int Attach(std::vector<Lit> lits, bool learnt);
  void DropLearnts();

  bool ok_ = true;
  std::vector<Clause> original_;
  std::vector<StoredClause> store_;
  std::vector<std::vector<int>> watches_;  // by literal code
  std::vector<int> assigns_;               // 0 unassigned, +1 true, -1 false
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<char> seen_;
  std::vector<bool> model_;
  int num_learnts_ = 0;
  SatStats stats_;
};

// Pairwise one-hot encoding: one at-least-one clause over all members
// and one binary at-most-one clause per member pair.
std::vector<Clause> EncodeOneHot(const OneHotGroup& group,
                                 const Problem& problem);

// Literal for a fixing: x = 1 maps to prop(x), x = 0 to its negation.
Lit FixingLiteral(const Fixing& f, const Problem& problem);

// Clause ruling out a set of fixings: the disjunction of their negations.
Clause LemmaClause(std::span<const Fixing> lemma, const Problem& problem);

}  // namespace ohs

#endif  // OHS_SAT_HPP_
