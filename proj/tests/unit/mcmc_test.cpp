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

#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "mcmc.hpp"
#include "random_problems.hpp"

namespace ohs {
namespace {

Problem Groups(std::vector<int> sizes) {
  Problem p;
  int k = 0;
  for (int s : sizes) {
    std::vector<VarId> members;
    for (int i = 0; i < s; ++i) {
      members.push_back(p.AddVariable("b" + std::to_string(++k), 0, 1, true));
    }
    p.AddGroup(members);
  }
  return p;
}

ClauseDatabase Fresh(const Problem& p) {
  ClauseDatabase db(p.num_props());
  for (const OneHotGroup& g : p.groups()) {
    for (Clause& c : EncodeOneHot(g, p)) db.AddClause(std::move(c));
  }
  return db;
}

Lit P(int one_based) { return Lit::Pos(PropVar(one_based - 1)); }

ModeSequence Seq(std::vector<int> zero_based) {
  ModeSequence f;
  for (int v : zero_based) f.choice.push_back(VarId(v));
  return f;
}

// alpha with every group spread evenly, so every group is unsatisfied.
Assignment Spread(const Problem& p) {
  Assignment a(std::vector<double>(p.num_vars(), 0.0));
  for (const OneHotGroup& g : p.groups()) {
    for (VarId v : g.members) a[v] = 1.0 / g.members.size();
  }
  return a;
}

TEST_CASE("accept") {
  Rng rng(1);
  const Rng before = rng;
  CHECK(Accept(3, 1, 1.0, rng));
  CHECK(Accept(1, 1, 1.0, rng));
  const bool untouched = rng == before;
  CHECK(untouched);  // no variate drawn

  int hits = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) hits += Accept(1, 2, 0.5, rng);
  CHECK(std::abs(static_cast<double>(hits) / trials - std::exp(-0.5)) <= 0.01);
}

TEST_CASE("propose reads the sequence off the SAT model") {
  Problem p = Groups({2, 2});
  const Assignment alpha = Spread(p);
  SUBCASE("no conflicts") {
    ClauseDatabase db = Fresh(p);
    for (int seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      const ModeSequence f = Seq({0, 2});
      const ModeSequence next = Propose(p, f, alpha, db, {}, rng);
      // Exactly one group moved, to its other member.
      CHECK(((next == Seq({1, 2})) || (next == Seq({0, 3}))));
    }
  }
  SUBCASE("conflict pops the trailing literal") {
    ClauseDatabase db = Fresh(p);
    db.AddClause({~P(2), ~P(3)});
    // Only group 0 is unsatisfied, so the flip is to b2.
    Assignment a = alpha;
    a.values = {0.5, 0.5, 1.0, 0.0};
    Rng rng(3);
    CHECK(Propose(p, Seq({0, 2}), a, db, {}, rng) == Seq({1, 3}));
  }
  SUBCASE("single group") {
    Problem one = Groups({2});
    ClauseDatabase db = Fresh(one);
    Rng rng(5);
    CHECK(Propose(one, Seq({0}), Spread(one), db, {}, rng) == Seq({1}));
  }
}

TEST_CASE("propose rejects an unsatisfiable database") {
  Problem p = Groups({2});
  ClauseDatabase db = Fresh(p);
  db.AddClause({~P(1)});
  db.AddClause({~P(2)});
  Rng rng(0);
  CHECK_THROWS_AS(Propose(p, Seq({0}), Spread(p), db, {}, rng), Error);
}

TEST_CASE("walksat proposals") {
  Problem p = Groups({2, 2});
  Assignment a(std::vector<double>{1.0, 0.0, 0.5, 0.5});
  Rng rng(7);
  CHECK(ProposeWalksat(p, Seq({0, 2}), a, rng) == Seq({0, 3}));

  Problem three = Groups({3});
  int second = 0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    const ModeSequence next = ProposeWalksat(three, Seq({0}), Spread(three), rng);
    REQUIRE(next.choice[0] != VarId(0));
    second += next.choice[0] == VarId(1);
  }
  CHECK(std::abs(static_cast<double>(second) / draws - 0.5) <= 0.02);

  Assignment integral(std::vector<double>{1.0, 0.0, 0.0});
  CHECK_THROWS_AS(ProposeWalksat(three, Seq({0}), integral, rng), Error);
}

// Literal assignment of a full mode sequence.
std::vector<bool> SequenceModel(const Problem& p, const ModeSequence& f) {
  std::vector<bool> v(p.num_props(), false);
  for (VarId c : f.choice) v[p.prop_of(c)->index] = true;
  return v;
}

TEST_CASE("proposals are consistent with the clause database") {
  Rng rng(11);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> sizes(testing::UniformInt(rng, 1, 4));
    for (int& s : sizes) s = testing::UniformInt(rng, 2, 4);
    Problem p = Groups(sizes);
    ClauseDatabase db = Fresh(p);
    // Random blocking clauses over chosen literals.
    for (int c = testing::UniformInt(rng, 0, 6); c > 0; --c) {
      Clause clause;
      for (const OneHotGroup& g : p.groups()) {
        if (testing::UniformInt(rng, 0, 1)) {
          const VarId v = g.members[testing::UniformInt(
              rng, 0, static_cast<int>(g.members.size()) - 1)];
          clause.push_back(~Lit::Pos(*p.prop_of(v)));
        }
      }
      if (!clause.empty()) db.AddClause(clause);
    }
    if (!db.IsSatisfiable()) continue;
    ModeSequence f;
    Assignment alpha(std::vector<double>(p.num_vars()));
    for (const OneHotGroup& g : p.groups()) {
      f.choice.push_back(g.members[testing::UniformInt(
          rng, 0, static_cast<int>(g.members.size()) - 1)]);
      double left = 1.0;
      for (VarId v : g.members) {
        const double x = left * testing::UniformInt(rng, 0, 4) / 4.0;
        alpha[v] = x;
        left -= x;
      }
      alpha[g.members.back()] += left;
    }
    if (ProposalGroups(p, f, alpha).empty()) continue;
    const ModeSequence next = Propose(p, f, alpha, db, {}, rng);
    REQUIRE(db.Satisfies(SequenceModel(p, next)));
    ++checked;
  }
  CHECK(checked > 1000);
}

LinearConstraint Row(std::vector<Term> terms, Relation rel, double rhs) {
  LinearConstraint c;
  c.terms = std::move(terms);
  c.relation = rel;
  c.rhs = rhs;
  return c;
}

TEST_CASE("exhausted") {
  Problem one = Groups({2});
  {
    ClauseDatabase db = Fresh(one);
    CHECK_FALSE(Exhausted(db, {}));
    LemmaStore store(one, db);
    store.Add(SequenceFixings(Seq({0})));
    store.Add(SequenceFixings(Seq({1})));
    CHECK(Exhausted(db, {}));
  }
  Problem two = Groups({2, 2});
  ClauseDatabase db = Fresh(two);
  LemmaStore store(two, db);
  store.Add(SequenceFixings(Seq({0, 2})));
  store.Add(SequenceFixings(Seq({0, 3})));
  store.Add(SequenceFixings(Seq({1, 2})));
  CHECK_FALSE(store.Add(SequenceFixings(Seq({1, 2}))));
  CHECK_FALSE(Exhausted(db, {}));
  REQUIRE(db.IsSatisfiable());
  CHECK(SequenceFromModel(two, db) == Seq({1, 3}));
}

struct Harness {
  explicit Harness(const Problem& p) : problem(p), db(Fresh(p)), store(p, db), lp(p) {}
  DeepSoiResult Run(McmcConfig config = {}) {
    Rng rng(config.seed);
    return DeepSoi(lp, {}, store, config, rng, Deadline(), &stats);
  }
  const Problem& problem;
  ClauseDatabase db;
  LemmaStore store;
  LpModel lp;
  McmcStats stats;
};

TEST_CASE("deep_soi returns an integral relaxation point immediately") {
  Problem p = Groups({2});
  p.SetBounds(VarId(1), 0, 0);
  Harness h(p);
  const DeepSoiResult r = h.Run();
  CHECK(r.status == DeepSoiStatus::kSolved);
  CHECK(h.stats.proposals == 0);
  CHECK(AssignmentSatisfies(p, r.alpha));
}

TEST_CASE("deep_soi reports relaxation infeasibility from phase one") {
  Problem p = Groups({2});
  p.AddConstraint(Row({{VarId(0), 1}, {VarId(1), 1}}, Relation::kLe, 0.5));
  Harness h(p);
  const DeepSoiResult r = h.Run();
  CHECK(r.status == DeepSoiStatus::kInfeasible);
  CHECK_FALSE(r.exhausted);
  CHECK(r.explanation.empty());
  CHECK(h.stats.proposals == 0);
  CHECK(h.store.lemmas().empty());
}

TEST_CASE("deep_soi on one infeasible and one feasible mode") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Problem p = Groups({2});
    const VarId x = p.AddVariable("x", -kInf, kInf);
    // b1 = 1 would force x >= 1 and x <= 0.5.
    p.AddConstraint(Row({{x, 1}, {VarId(0), -1}}, Relation::kEq, 0));
    p.AddConstraint(Row({{x, 1}}, Relation::kLe, 0.5));
    Harness h(p);
    McmcConfig config;
    config.seed = seed;
    const DeepSoiResult r = h.Run(config);
    REQUIRE(r.status == DeepSoiStatus::kSolved);
    CHECK(r.alpha[VarId(1)] == doctest::Approx(1.0));
    CHECK(h.stats.proposals <= 1);
    CHECK(h.store.lemmas().size() == static_cast<std::size_t>(h.stats.proposals));
    if (!h.store.lemmas().empty()) {
      CHECK(h.store.lemmas()[0] == std::vector<Fixing>{{VarId(0), true}});
    }
  }
}

TEST_CASE("deep_soi exhausts an infeasible problem with a feasible relaxation") {
  // Two groups; every full sequence is LP-infeasible but the relaxation is
  // feasible: b1 + b3 = 1 and b2 + b4 = 1 and b1 + b4 = 0.5.
  Problem p = Groups({2, 2});
  p.AddConstraint(Row({{VarId(0), 1}, {VarId(3), 1}}, Relation::kEq, 0.5));
  Harness h(p);
  McmcConfig config;
  config.budget = 1000;
  const DeepSoiResult r = h.Run(config);
  CHECK(r.status == DeepSoiStatus::kInfeasible);
  CHECK(r.exhausted);
  CHECK(h.store.lemmas().size() == 4);
  for (std::size_t i = 1; i < r.best_costs.size(); ++i) {
    CHECK(r.best_costs[i] <= r.best_costs[i - 1]);
  }
}

TEST_CASE("deep_soi gives up after the budget of rejected proposals") {
  Problem p = Groups({2, 2});
  p.AddConstraint(Row({{VarId(0), 1}, {VarId(3), 1}}, Relation::kEq, 0.5));
  Harness h(p);
  McmcConfig config;
  config.budget = 0;
  const DeepSoiResult r = h.Run(config);
  CHECK(r.status == DeepSoiStatus::kInconclusive);
  CHECK(h.stats.proposals == 0);
}

TEST_CASE("deep_soi honors decisions passed as literals") {
  Problem p = Groups({2, 2});
  // Only (b1, b4) and (b2, b3) are feasible.
  p.AddConstraint(Row({{VarId(0), 1}, {VarId(2), 1}}, Relation::kEq, 1));
  Harness h(p);
  h.lp.SetDecisions(DecisionSet{BranchFixings(p.group(0), VarId(1))});
  const Lit fixed[] = {P(2), ~P(1)};
  Rng rng(0);
  const DeepSoiResult r = DeepSoi(h.lp, fixed, h.store, {}, rng, Deadline(), nullptr);
  REQUIRE(r.status == DeepSoiStatus::kSolved);
  CHECK(r.alpha[VarId(1)] == 1.0);
  CHECK(r.alpha[VarId(2)] == doctest::Approx(1.0));
}

}  // namespace
}  // namespace ohs
