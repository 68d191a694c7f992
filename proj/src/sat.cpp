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

#include "sat.hpp"

#include <algorithm>
#include <ostream>

#include "errors.hpp"

namespace ohs {

namespace {
constexpr int kMaxLearnts = 20000;
}

void ClauseDatabase::EnsureVars(int num_vars) {
  if (num_vars <= this->num_vars()) return;
  assigns_.resize(num_vars, 0);
  level_.resize(num_vars, 0);
  reason_.resize(num_vars, -1);
  seen_.resize(num_vars, 0);
  watches_.resize(2 * static_cast<std::size_t>(num_vars));
}

void ClauseDatabase::Enqueue(Lit l, int reason) {
  const int v = l.var().index;
  assigns_[v] = l.negated() ? -1 : 1;
  level_[v] = decision_level();
  reason_[v] = reason;
  trail_.push_back(l);
}

int ClauseDatabase::Attach(std::vector<Lit> lits, bool learnt) {
  const int idx = static_cast<int>(store_.size());
  watches_[(~lits[0]).code()].push_back(idx);
  watches_[(~lits[1]).code()].push_back(idx);
  store_.push_back(StoredClause{std::move(lits), learnt});
  if (learnt) ++num_learnts_;
  return idx;
}

bool ClauseDatabase::AddClause(Clause clause) {
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  int max_var = -1;
  for (std::size_t i = 0; i < clause.size(); ++i) {
    max_var = std::max(max_var, clause[i].var().index);
    if (i + 1 < clause.size() && clause[i + 1] == ~clause[i]) {
      throw Error(ErrorCode::kInvalidArgument, "tautological clause rejected");
    }
  }
  EnsureVars(max_var + 1);
  original_.push_back(clause);
  if (!ok_) return false;
  CancelUntil(0);

  std::vector<Lit> lits;
  for (Lit l : clause) {
    const int v = Value(l);
    if (v > 0) return true;  // satisfied at the root
    if (v == 0) lits.push_back(l);
  }
  if (lits.empty()) {
    ok_ = false;
    return false;
  }
  if (lits.size() == 1) {
    Enqueue(lits[0], -1);
    if (Propagate() >= 0) ok_ = false;
    return ok_;
  }
  Attach(std::move(lits), false);
  return true;
}

// Returns the index of a conflicting clause or -1.
int ClauseDatabase::Propagate() {
  int conflict = -1;
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];  // p is true; clauses watching ~p wake up
    ++stats_.propagations;
    std::vector<int>& ws = watches_[p.code()];
    std::size_t i = 0;
    std::size_t j = 0;
    const Lit false_lit = ~p;
    while (i < ws.size()) {
      const int ci = ws[i++];
      std::vector<Lit>& c = store_[ci].lits;
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (Value(c[0]) > 0) {
        ws[j++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (Value(c[k]) >= 0) {
          std::swap(c[1], c[k]);
          watches_[(~c[1]).code()].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = ci;
      if (Value(c[0]) < 0) {
        conflict = ci;
        qhead_ = trail_.size();
        while (i < ws.size()) ws[j++] = ws[i++];
      } else {
        Enqueue(c[0], ci);
      }
    }
    ws.resize(j);
    if (conflict >= 0) break;
  }
  return conflict;
}

void ClauseDatabase::Analyze(int conflict, std::vector<Lit>& learnt,
                             int& backtrack_level) {
  learnt.clear();
  learnt.push_back(Lit());  // slot for the asserting literal
  int path = 0;
  Lit p;
  bool have_p = false;
  int index = static_cast<int>(trail_.size()) - 1;
  std::vector<int> touched;
  do {
    const std::vector<Lit>& c = store_[conflict].lits;
    for (std::size_t k = have_p ? 1 : 0; k < c.size(); ++k) {
      const Lit q = c[k];
      const int v = q.var().index;
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      touched.push_back(v);
      if (level_[v] >= decision_level()) {
        ++path;
      } else {
        learnt.push_back(q);
      }
    }
    while (!seen_[trail_[index].var().index]) --index;
    p = trail_[index];
    have_p = true;
    --index;
    conflict = reason_[p.var().index];
    seen_[p.var().index] = 0;
    --path;
  } while (path > 0);
  learnt[0] = ~p;
  for (int v : touched) seen_[v] = 0;

  backtrack_level = 0;
  if (learnt.size() > 1) {
    std::size_t best = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k) {
      if (level_[learnt[k].var().index] > level_[learnt[best].var().index]) {
        best = k;
      }
    }
    std::swap(learnt[1], learnt[best]);
    backtrack_level = level_[learnt[1].var().index];
  }
}

void ClauseDatabase::CancelUntil(int level) {
  if (decision_level() <= level) return;
  for (std::size_t c = trail_.size(); c > static_cast<std::size_t>(trail_lim_[level]); --c) {
    const int v = trail_[c - 1].var().index;
    assigns_[v] = 0;
    reason_[v] = -1;
  }
  trail_.resize(trail_lim_[level]);
  trail_lim_.resize(level);
  qhead_ = trail_.size();
}

void ClauseDatabase::DropLearnts() {
  CancelUntil(0);
  std::vector<StoredClause> kept;
  for (StoredClause& c : store_) {
    if (!c.learnt) kept.push_back(std::move(c));
  }
  store_ = std::move(kept);
  num_learnts_ = 0;
  for (auto& w : watches_) w.clear();
  for (std::size_t i = 0; i < store_.size(); ++i) {
    watches_[(~store_[i].lits[0]).code()].push_back(static_cast<int>(i));
    watches_[(~store_[i].lits[1]).code()].push_back(static_cast<int>(i));
  }
  for (Lit l : trail_) reason_[l.var().index] = -1;
}

bool ClauseDatabase::Solve(std::span<const Lit> assumptions) {
  ++stats_.queries;
  model_.clear();
  if (!ok_) return false;
  for (Lit a : assumptions) EnsureVars(a.var().index + 1);
  CancelUntil(0);
  if (num_learnts_ > kMaxLearnts) DropLearnts();

  std::vector<Lit> learnt;
  for (;;) {
    const int conflict = Propagate();
    if (conflict >= 0) {
      ++stats_.conflicts;
      if (decision_level() == 0) {
        ok_ = false;
        return false;
      }
      int backtrack = 0;
      Analyze(conflict, learnt, backtrack);
      CancelUntil(backtrack);
      if (learnt.size() == 1) {
        Enqueue(learnt[0], -1);
      } else {
        const int ci = Attach(learnt, true);
        Enqueue(store_[ci].lits[0], ci);
      }
      continue;
    }
    if (decision_level() < static_cast<int>(assumptions.size())) {
      const Lit a = assumptions[decision_level()];
      const int v = Value(a);
      if (v < 0) {
        CancelUntil(0);
        return false;
      }
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      if (v == 0) Enqueue(a, -1);
      continue;
    }
    int next = -1;
    for (int v = 0; v < num_vars(); ++v) {
      if (assigns_[v] == 0) {
        next = v;
        break;
      }
    }
    if (next < 0) {
      model_.resize(num_vars());
      for (int v = 0; v < num_vars(); ++v) model_[v] = assigns_[v] > 0;
      CancelUntil(0);
      return true;
    }
    ++stats_.decisions;
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    Enqueue(Lit::Pos(PropVar(next)), -1);
  }
}

bool ClauseDatabase::Satisfies(const std::vector<bool>& values) const {
  for (const Clause& c : original_) {
    bool sat = false;
    for (Lit l : c) {
      const int v = l.var().index;
      if (v < static_cast<int>(values.size()) && values[v] != l.negated()) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

void ClauseDatabase::WriteDimacs(std::ostream& out) const {
  out << "p cnf " << num_vars() << ' ' << original_.size() << '\n';
  for (const Clause& c : original_) {
    for (Lit l : c) {
      out << (l.negated() ? -(l.var().index + 1) : l.var().index + 1) << ' ';
    }
    out << "0\n";
  }
}

std::vector<Clause> EncodeOneHot(const OneHotGroup& group,
                                 const Problem& problem) {
  std::vector<Lit> props;
  for (VarId v : group.members) props.push_back(Lit::Pos(*problem.prop_of(v)));
  std::vector<Clause> out;
  out.push_back(props);
  for (std::size_t i = 0; i < props.size(); ++i) {
    for (std::size_t j = i + 1; j < props.size(); ++j) {
      out.push_back(Clause{~props[i], ~props[j]});
    }
  }
  return out;
}

Lit FixingLiteral(const Fixing& f, const Problem& problem) {
  const std::optional<PropVar> p = problem.prop_of(f.var);
  if (!p) {
    throw Error(ErrorCode::kInvalidArgument,
                "fixing on a variable without a propositional counterpart");
  }
  return Lit(*p, !f.value);
}

Clause LemmaClause(std::span<const Fixing> lemma, const Problem& problem) {
  Clause c;
  c.reserve(lemma.size());
  for (const Fixing& f : lemma) c.push_back(~FixingLiteral(f, problem));
  return c;
}

}  // namespace ohs
