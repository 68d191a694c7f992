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

#include <sstream>

#include "benchgen.hpp"
#include "errors.hpp"
#include "mps.hpp"
#include "oracle.hpp"
#include "search.hpp"
#include "trajectory_oracle.hpp"

namespace ohs {
namespace {

constexpr double kTol = 1e-6;

PwaMode Interval1d(double lo, double hi, double shift) {
  PwaMode m;
  m.H = {{1.0}, {-1.0}};
  m.h = {hi, -lo};
  m.A = {{1.0}};
  m.B = {{}};
  m.c = {shift};
  m.input = Box{{}, {}};
  return m;
}

PwaInstance Line(std::vector<PwaMode> modes, int horizon, double x0, Box goal) {
  PwaInstance inst;
  inst.family = "test";
  inst.system.n = 1;
  inst.system.m = 0;
  inst.system.horizon = horizon;
  inst.system.modes = std::move(modes);
  inst.init = Box{{x0}, {x0}};
  inst.goal = std::move(goal);
  return inst;
}

// Mode 0 on [0,1] moves by +1, mode 1 on [1,2] by +2; from 0 only (0, 1)
// reaches 3 in two steps.
PwaInstance TwoModeLine(Box goal = Box{{3.0}, {3.0}}) {
  return Line({Interval1d(0, 1, 1), Interval1d(1, 2, 2)}, 2, 0.0, goal);
}

SolverConfig Seeded(std::uint64_t seed, SolverMode mode = SolverMode::kFull) {
  SolverConfig c;
  c.mode = mode;
  c.mcmc.seed = seed;
  return c;
}

TEST_CASE("single mode with init equal to goal") {
  PwaInstance inst = Line({Interval1d(-1, 1, 0)}, 1, 0.5, Box{{0.5}, {0.5}});
  const PwaEncoding enc = EncodePwa(inst);
  const SearchResult r = Solve(enc.problem, Seeded(0));
  REQUIRE(r.status == SearchStatus::kFeasible);
  CHECK(ValidateTrajectory(inst, enc.problem, r.witness, kTol));
}

TEST_CASE("two modes with exactly one reachable sequence") {
  const PwaInstance inst = TwoModeLine();
  CHECK(testing::CountReachable(inst) == 1);
  const PwaEncoding enc = EncodePwa(inst);
  CHECK(enc.problem.num_groups() == 2);
  const OracleResult oracle = BruteForce(enc.problem);
  CHECK(oracle.feasible_sequences == 1);
  CHECK(oracle.total_sequences == 4);
  for (SolverMode mode : {SolverMode::kFull, SolverMode::kNoCdcl,
                          SolverMode::kNoSoi, SolverMode::kNoProp}) {
    const SearchResult r = Solve(enc.problem, Seeded(1, mode));
    REQUIRE(r.status == SearchStatus::kFeasible);
    CHECK(ValidateTrajectory(inst, enc.problem, r.witness, kTol));
    CHECK(BigMRowsSlack(enc, r.witness, kTol));
  }
}

TEST_CASE("goal out of reach") {
  const PwaInstance inst = TwoModeLine(Box{{10.0}, {11.0}});
  CHECK(testing::CountReachable(inst) == 0);
  const PwaEncoding enc = EncodePwa(inst);
  CHECK(BruteForce(enc.problem).feasible_sequences == 0);
  CHECK(Solve(enc.problem, Seeded(0)).status == SearchStatus::kInfeasible);
}

TEST_CASE("perturbed witnesses are rejected") {
  const PwaInstance inst = TwoModeLine();
  const PwaEncoding enc = EncodePwa(inst);
  const SearchResult r = Solve(enc.problem, Seeded(3));
  REQUIRE(r.status == SearchStatus::kFeasible);
  REQUIRE(ValidateTrajectory(inst, enc.problem, r.witness, kTol));

  for (int t = 0; t < 2; ++t) {
    for (int i = 0; i < 2; ++i) {
      Assignment flipped = r.witness;
      const VarId b = *enc.problem.FindVariable("b" + std::to_string(t) + "_" + std::to_string(i));
      flipped[b] = 1.0 - flipped[b];
      CHECK_FALSE(ValidateTrajectory(inst, enc.problem, flipped, kTol));
    }
  }
  Assignment nudged = r.witness;
  nudged[*enc.problem.FindVariable("x2_0")] += 10 * kTol * 3.0;
  CHECK_FALSE(ValidateTrajectory(inst, enc.problem, nudged, kTol));
}

TEST_CASE("generation errors") {
  PwaInstance open = TwoModeLine();
  open.system.modes[0].H = {{1.0}};
  open.system.modes[0].h = {1.0};
  CHECK_THROWS_AS(EncodePwa(open), Error);
  PwaInstance flat = TwoModeLine();
  flat.system.horizon = 0;
  CHECK_THROWS_AS(EncodePwa(flat), Error);
  PwaInstance shape = TwoModeLine();
  shape.system.modes[1].A = {{1.0, 0.0}};
  CHECK_THROWS_AS(EncodePwa(shape), Error);
  CHECK_THROWS_AS(GenericPwa(GenericPwaParams{2, 1, 3, 0}, 1), Error);
}

SteppingStoneMap OneStone(int horizon) {
  SteppingStoneMap map;
  map.regions = {Region{0, 4, 0, 4, 1.0}};
  map.start = Region{0.5, 1.0, 0.5, 1.0, 0};
  map.goal = Region{2.5, 3.5, 2.5, 3.5, 0};
  map.horizon = horizon;
  return map;
}

TEST_CASE("stepping stones: one stone with a generous horizon") {
  const PwaInstance inst = SteppingStones(OneStone(6), 7);
  const PwaEncoding enc = EncodePwa(inst);
  CHECK(enc.problem.num_groups() == 0);
  const SearchResult r = Solve(enc.problem, Seeded(7));
  REQUIRE(r.status == SearchStatus::kFeasible);
  CHECK(ValidateTrajectory(inst, enc.problem, r.witness, kTol));
}

TEST_CASE("stepping stones: goal beyond the kinematic reach") {
  // Coming to rest after T steps at acceleration u covers at most u T^2 / 4.
  SteppingStoneMap map = OneStone(2);
  map.regions[0] = Region{0, 20, 0, 20, 1.0};
  map.goal = Region{5, 6, 5, 6, 0};
  const PwaInstance inst = SteppingStones(map, 3);
  CHECK(testing::CountReachable(inst) == 0);
  CHECK(Solve(EncodePwa(inst).problem, Seeded(3)).status == SearchStatus::kInfeasible);
}

TEST_CASE("stepping stones: a gap too wide to cross") {
  SteppingStoneMap map;
  map.regions = {Region{0, 1, 0, 1, 0.5}, Region{3, 4, 0, 1, 0.5}};
  map.start = Region{0.25, 0.5, 0.25, 0.5, 0};
  map.goal = Region{3.25, 3.75, 0.25, 0.75, 0};
  map.v_max = 1.0;
  map.horizon = 3;
  const PwaInstance inst = SteppingStones(map, 11);
  const PwaEncoding enc = EncodePwa(inst);
  CHECK(testing::CountReachable(inst) == 0);
  CHECK(BruteForce(enc.problem).feasible_sequences == 0);
  CHECK(Solve(enc.problem, Seeded(11)).status == SearchStatus::kInfeasible);
}

TEST_CASE("start outside every region is rejected") {
  SteppingStoneMap map = OneStone(3);
  map.start = Region{10, 11, 10, 11, 0};
  CHECK_THROWS_AS(SteppingStones(map, 0), Error);
}

std::vector<PwaInstance> SmallFamilies() {
  std::vector<PwaInstance> out;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    out.push_back(GenericPwa(GenericPwaParams{1 + static_cast<int>(seed % 2), 1,
                                              2 + static_cast<int>(seed % 2),
                                              1 + static_cast<int>(seed % 3)},
                             seed));
    out.push_back(ToyContact(1 + static_cast<int>(seed % 3), seed));
    out.push_back(SteppingStones(ChainMap(2, 2 + static_cast<int>(seed % 3)), seed));
  }
  return out;
}

TEST_CASE("encoding agrees with trajectory enumeration") {
  int feasible = 0;
  int infeasible = 0;
  int trial = 0;
  for (const PwaInstance& inst : SmallFamilies()) {
    INFO(inst.family << " instance " << trial++);
    const bool reachable = testing::CountReachable(inst) > 0;
    const PwaEncoding enc = EncodePwa(inst);
    (reachable ? feasible : infeasible)++;
    for (SolverMode mode : {SolverMode::kFull, SolverMode::kNoCdcl,
                            SolverMode::kNoSoi, SolverMode::kNoProp}) {
      const SearchResult r = Solve(enc.problem, Seeded(trial, mode));
      REQUIRE(r.status != SearchStatus::kTimeout);
      CHECK((r.status == SearchStatus::kFeasible) == reachable);
      if (r.status == SearchStatus::kFeasible) {
        CHECK(ValidateTrajectory(inst, enc.problem, r.witness, kTol));
        CHECK(BigMRowsSlack(enc, r.witness, kTol));
      }
    }
  }
  CHECK(feasible >= 5);
  CHECK(infeasible >= 5);
}

TEST_CASE("generated MPS re-parses with one group per step") {
  for (const PwaInstance& inst : SmallFamilies()) {
    const PwaEncoding enc = EncodePwa(inst);
    std::ostringstream out;
    WriteMps(enc.problem, out);
    const Problem back = ExtractOneHots(ParseMps(out.str()).problem);
    if (inst.system.modes.size() >= 2) {
      CHECK(back.num_groups() == inst.system.horizon);
    }
    CHECK(back.num_vars() == enc.problem.num_vars());
  }
}

TEST_CASE("seeded generation is deterministic") {
  auto text = [](const PwaInstance& inst) {
    std::ostringstream out;
    WriteMps(EncodePwa(inst).problem, out);
    return out.str();
  };
  const SteppingStoneMap map = ChainMap(2, 5);
  CHECK(text(SteppingStones(map, 42)) == text(SteppingStones(map, 42)));
  CHECK(text(SteppingStones(map, 42)) != text(SteppingStones(map, 43)));
  CHECK(text(ToyContact(3, 9)) == text(ToyContact(3, 9)));
  CHECK(GenericPwa({}, 5) == GenericPwa({}, 5));
  CHECK_FALSE(GenericPwa({}, 5) == GenericPwa({}, 6));
}

TEST_CASE("map text format") {
  std::istringstream in(
      "# two stones\n"
      "horizon 7\n"
      "vmax 1.25\n"
      "start 0 0.5 0 0.5\n"
      "goal 3 3.5 0 0.5   # on the second stone\n"
      "0 1 0 1 0.5\n"
      "\n"
      "2 4 0 1 1\n");
  const SteppingStoneMap map = ParseSteppingStoneMap(in);
  CHECK(map.horizon == 7);
  CHECK(map.v_max == 1.25);
  REQUIRE(map.regions.size() == 2);
  CHECK(map.regions[1].xmin == 2);
  CHECK(map.regions[1].u_max == 1);
  CHECK(map.goal.xmax == 3.5);

  std::ostringstream out;
  WriteSteppingStoneMap(map, out);
  std::istringstream again(out.str());
  const SteppingStoneMap back = ParseSteppingStoneMap(again);
  CHECK(back.regions.size() == 2);
  CHECK(back.regions[0].u_max == 0.5);
  CHECK(back.start.xmax == 0.5);

  auto line_of = [](const std::string& text) {
    std::istringstream s(text);
    try {
      ParseSteppingStoneMap(s);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("start 0 1 0 1\ngoal 0 1 0 1\n0 1 0\n") == 3);
  CHECK(line_of("start 0 1 0 1\n0 1 0 1 1\nhorizon -2\n") == 3);
  CHECK(line_of("start 0 1 0 1\n0 1 0 1 1\n") == 2);  // no goal
  CHECK(line_of("start 1 0 0 1\n") == 1);
}

TEST_CASE("sidecar JSON round trip") {
  for (const PwaInstance& inst : SmallFamilies()) {
    std::stringstream io;
    WritePwaJson(inst, io);
    CHECK(ReadPwaJson(io) == inst);
  }
  std::istringstream bad("{\"n\": 1}");
  CHECK_THROWS_AS(ReadPwaJson(bad), Error);
}

}  // namespace
}  // namespace ohs
