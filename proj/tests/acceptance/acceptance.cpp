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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "benchgen.hpp"
#include "brute_force.hpp"
#include "exact_lp.hpp"
#include "lp.hpp"
#include "mcmc.hpp"
#include "mps.hpp"
#include "oracle.hpp"
#include "process.hpp"
#include "random_problems.hpp"
#include "sat.hpp"
#include "search.hpp"
#include "soi.hpp"

namespace ohs {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using testing::Run;
using testing::RunResult;
using testing::UniformInt;

const char* const kModes[] = {"full", "no-cdcl", "no-soi", "no-prop"};

int g_failures = 0;

void Report(const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double Since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string Fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string Cli() { return OHS_CLI_PATH; }

fs::path WorkDir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "ohs_acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string FirstLine(const std::string& s) { return s.substr(0, s.find('\n')); }

// Name of file i of a `gen --count count` batch written to dir/stem.mps.
fs::path BatchFile(const fs::path& dir, const std::string& stem, int i, int count) {
  const std::size_t width = std::to_string(count - 1).size();
  std::string index = std::to_string(i);
  index.insert(0, width - index.size(), '0');
  return dir / (stem + "_" + index + ".mps");
}

// Same reading pipeline as the CLI.
Problem LoadProblem(const fs::path& mps) {
  Problem p = ExtractOneHots(ReadMpsFile(mps.string()).problem);
  CompleteBinaries(p);
  return p;
}

// Reads a .sol file back into an assignment of `p`. Synthetic complements
// are absent from the file and are rebuilt from their partner.
bool LoadSolution(const Problem& p, const fs::path& sol, Assignment& out) {
  std::ifstream in(sol);
  std::string header;
  if (!std::getline(in, header) || header != "FEASIBLE") return false;
  std::vector<double> values(p.num_vars(), std::nan(""));
  std::string name;
  double v;
  while (in >> name >> v) {
    const auto id = p.FindVariable(name);
    if (!id) return false;
    values[id->index] = v;
  }
  for (int j = 0; j < p.num_vars(); ++j) {
    const VarId var(j);
    if (!p.is_synthetic(var)) continue;
    for (VarId m : p.group(*p.group_of(var)).members) {
      if (m != var) values[j] = 1.0 - values[m.index];
    }
  }
  for (double x : values) {
    if (std::isnan(x)) return false;
  }
  out = Assignment(std::move(values));
  return true;
}

nlohmann::json Stats(const fs::path& p) {
  return nlohmann::json::parse(Slurp(p));
}

// Random oracle-sized instances on disk, with their exact feasibility. Every
// fifth one is a parity instance, infeasible with a feasible relaxation.
struct Instance {
  fs::path mps;
  Problem problem;
  bool feasible = false;
};

std::vector<Instance> MakeRandomInstances(int count) {
  std::mt19937_64 rng(20260101);
  const fs::path dir = WorkDir() / "random";
  fs::create_directories(dir);
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    Instance inst;
    inst.problem = i % 5 == 4 ? testing::RandomParityMilp(rng, 4, 4)
                              : testing::RandomMilp(rng, 4, 4, 12);
    inst.feasible = testing::BruteForceFeasible(inst.problem);
    inst.mps = dir / ("r" + std::to_string(i) + ".mps");
    std::ofstream f(inst.mps);
    WriteMps(inst.problem, f);
    out.push_back(std::move(inst));
  }
  return out;
}

void OracleEquivalenceAndWitnesses(const std::vector<Instance>& instances) {
  const auto start = Clock::now();
  int runs = 0;
  int agree = 0;
  int oracle_exact = 0;
  int feasible_answers = 0;
  int valid_witnesses = 0;
  int feasible_instances = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Instance& inst = instances[i];
    feasible_instances += inst.feasible;
    const RunResult oracle = Run(Cli() + " oracle " + inst.mps.string());
    const std::string expected = inst.feasible ? "FEASIBLE" : "INFEASIBLE";
    const std::string oracle_status = oracle.out.substr(0, oracle.out.find(' '));
    if (oracle_status == expected) ++oracle_exact;
    const Problem loaded = LoadProblem(inst.mps);
    for (const char* mode : kModes) {
      const fs::path sol =
          inst.mps.parent_path() / (inst.mps.stem().string() + "_" + mode + ".sol");
      const RunResult r = Run(Cli() + " solve " + inst.mps.string() +
                              " --mode " + mode + " --solution " + sol.string());
      const std::string status = FirstLine(r.out);
      ++runs;
      if (status == oracle_status) ++agree;
      if (status == "FEASIBLE") {
        ++feasible_answers;
        Assignment a;
        if (LoadSolution(loaded, sol, a) && AssignmentSatisfies(loaded, a, 1e-6)) {
          ++valid_witnesses;
        }
      }
    }
  }
  const double seconds = Since(start);
  const int n = static_cast<int>(instances.size());
  Report("oracle equivalence",
         n >= 200 && agree == runs && oracle_exact == n && seconds < 300.0,
         std::to_string(agree) + "/" + std::to_string(runs) + " solve runs match the oracle over " +
             std::to_string(n) + " instances (" + std::to_string(feasible_instances) +
             " feasible) x 4 modes; oracle matches exact enumeration on " +
             std::to_string(oracle_exact) + "/" + std::to_string(n) + "; " +
             Fixed(seconds, 1) + " s");
  Report("witness validity (assignment)",
         feasible_answers > 0 && valid_witnesses == feasible_answers,
         std::to_string(valid_witnesses) + "/" + std::to_string(feasible_answers) +
             " FEASIBLE answers satisfy every row, bound and group at tol 1e-6");
}

void PwaWitnesses() {
  const fs::path dir = WorkDir() / "pwa";
  fs::create_directories(dir);
  struct Family {
    std::string name;
    std::string flags;
    int count;
  };
  const std::vector<Family> families = {
      {"stepping-stones", "--regions 3 -T 6", 4},
      {"toy-contact", "-T 4", 6},
      {"generic-pwa", "--state-dim 2 --input-dim 1 --modes 3 -T 4", 6},
  };
  int feasible = 0;
  int valid = 0;
  int sat_valid = 0;
  for (const Family& fam : families) {
    const fs::path out = dir / (fam.name + ".mps");
    const RunResult g = Run(Cli() + " gen " + fam.name + " " + fam.flags + " --seed 3 --count " +
                            std::to_string(fam.count) + " -o " + out.string());
    if (g.exit_code != 0) {
      Report("witness validity (trajectory)", false, "gen " + fam.name + " failed: " + g.err);
      return;
    }
    for (int i = 0; i < fam.count; ++i) {
      const fs::path mps = BatchFile(dir, fam.name, i, fam.count);
      std::ifstream side(mps.string() + ".pwa.json");
      const PwaInstance pwa = ReadPwaJson(side);
      const Problem loaded = LoadProblem(mps);
      for (const char* mode : kModes) {
        const fs::path sol = dir / (mps.stem().string() + "_" + mode + ".sol");
        const RunResult r = Run(Cli() + " solve " + mps.string() + " --mode " + mode +
                                " --solution " + sol.string());
        if (FirstLine(r.out) != "FEASIBLE") continue;
        ++feasible;
        Assignment a;
        if (!LoadSolution(loaded, sol, a)) continue;
        valid += ValidateTrajectory(pwa, loaded, a, 1e-6);
        sat_valid += AssignmentSatisfies(loaded, a, 1e-6);
      }
    }
  }
  Report("witness validity (trajectory)", feasible > 0 && valid == feasible && sat_valid == feasible,
         std::to_string(valid) + "/" + std::to_string(feasible) +
             " FEASIBLE answers on generated PWA instances re-validate as trajectories (" +
             std::to_string(sat_valid) + " pass the assignment check)");
}

Problem Groups(const std::vector<int>& sizes) {
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

std::vector<bool> SequenceModel(const Problem& p, const ModeSequence& f) {
  std::vector<bool> model(p.num_props(), false);
  for (VarId v : f.choice) model[p.prop_of(v)->index] = true;
  return model;
}

void ProposalConsistency() {
  const auto start = Clock::now();
  Rng rng(77);
  int calls = 0;
  int inconsistent = 0;
  int over_popped = 0;
  while (calls < 10000) {
    std::vector<int> sizes(UniformInt(rng, 1, 5));
    for (int& s : sizes) s = UniformInt(rng, 2, 4);
    const Problem p = Groups(sizes);
    ClauseDatabase db(p.num_props());
    for (const OneHotGroup& g : p.groups()) {
      for (Clause& c : EncodeOneHot(g, p)) db.AddClause(std::move(c));
    }
    for (int c = UniformInt(rng, 0, 10); c > 0; --c) {
      Clause clause;
      for (const OneHotGroup& g : p.groups()) {
        if (UniformInt(rng, 0, 2) == 0) continue;
        const VarId v = g.members[UniformInt(rng, 0, static_cast<int>(g.members.size()) - 1)];
        clause.push_back(~Lit::Pos(*p.prop_of(v)));
      }
      if (!clause.empty()) db.AddClause(clause);
    }
    if (!db.IsSatisfiable()) continue;
    ModeSequence f;
    Assignment alpha(std::vector<double>(p.num_vars(), 0.0));
    for (const OneHotGroup& g : p.groups()) {
      f.choice.push_back(g.members[UniformInt(rng, 0, static_cast<int>(g.members.size()) - 1)]);
      double left = 1.0;
      for (VarId v : g.members) {
        const double x = left * UniformInt(rng, 0, 4) / 4.0;
        alpha[v] = x;
        left -= x;
      }
      alpha[g.members.back()] += left;
    }
    if (ProposalGroups(p, f, alpha).empty()) continue;
    McmcStats stats;
    const ModeSequence next = Propose(p, f, alpha, db, {}, rng, &stats);
    ++calls;
    bool ok = next.choice.size() == f.choice.size();
    for (std::size_t g = 0; ok && g < next.choice.size(); ++g) {
      ok = p.group_of(next.choice[g]) == static_cast<int>(g);
    }
    if (!ok || !db.Satisfies(SequenceModel(p, next))) ++inconsistent;
    // |Q| is the number of groups; at most |Q| pops means |Q| + 1 queries.
    if (stats.sat_queries > p.num_groups() + 1) ++over_popped;
  }
  const double seconds = Since(start);
  Report("proposal consistency", inconsistent == 0 && over_popped == 0 && seconds < 60.0,
         std::to_string(calls) + " propose calls, " + std::to_string(inconsistent) +
             " inconsistent with the clause database, " + std::to_string(over_popped) +
             " popping more than |Q| literals; " + Fixed(seconds, 1) + " s");
}

void LemmaSoundness() {
  std::mt19937_64 rng(4242);
  int total = 0;
  int unsound = 0;
  int wrong_status = 0;
  int searched = 0;
  int instances = 0;
  while (instances < 50) {
    const Problem p = testing::RandomParityMilp(rng);
    if (testing::BruteForceFeasible(p)) continue;
    ++instances;
    const SearchResult r = Solve(p, SolverConfig{});
    if (r.status != SearchStatus::kInfeasible) ++wrong_status;
    searched += !r.lemmas.empty();
    for (const std::vector<Fixing>& lemma : r.lemmas) {
      ++total;
      if (testing::ExactSolve(p, DecisionSet{lemma}, nullptr).feasible) ++unsound;
    }
  }
  Report("lemma soundness", unsound == 0 && wrong_status == 0 && total > 0,
         std::to_string(total) + " lemmas from 50 infeasible full-mode solves (" +
             std::to_string(searched) + " learned at least one), " + std::to_string(unsound) +
             " LP-feasible under their fixings; " + std::to_string(wrong_status) +
             " solves not INFEASIBLE");
}

void SoiDecomposition() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  double worst_objective = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> sizes(UniformInt(rng, 1, 3));
    for (int& s : sizes) s = UniformInt(rng, 2, 3);
    const Problem p = Groups(sizes);
    Assignment a(std::vector<double>(p.num_vars()));
    for (int j = 0; j < p.num_vars(); ++j) a.values[j] = unit(rng);
    // Odometer over all sequences.
    std::vector<std::size_t> pick(p.num_groups(), 0);
    double best = kInf;
    for (;;) {
      ModeSequence f;
      double direct = 0.0;
      for (const OneHotGroup& g : p.groups()) {
        f.choice.push_back(g.members[pick[g.id]]);
        direct += 1.0 - a[g.members[pick[g.id]]];
      }
      const double via = ModeSequenceToObjective(f, p).Evaluate(a);
      worst_objective = std::max(worst_objective, std::abs(via - direct));
      best = std::min(best, via);
      int g = 0;
      while (g < p.num_groups() && ++pick[g] == p.group(g).members.size()) pick[g++] = 0;
      if (g == p.num_groups()) break;
    }
    worst = std::max(worst, std::abs(Soi(p, a) - best));
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "1000 random assignments, max |SoI - min over sequences| = %.3g, "
                "max objective mismatch = %.3g",
                worst, worst_objective);
  Report("soi decomposition", worst <= 1e-9 && worst_objective <= 1e-9, detail);
}

void MetropolisCalibration() {
  Rng rng(123);
  const int trials = 100000;
  int hits = 0;
  for (int i = 0; i < trials; ++i) hits += Accept(1.0, 2.0, 0.5, rng);
  const double freq = static_cast<double>(hits) / trials;
  int downhill = 0;
  for (int i = 0; i < trials; ++i) {
    downhill += Accept(2.0, 1.0, 0.5, rng);
    downhill += Accept(1.0, 1.0, 0.5, rng);
  }
  const double target = std::exp(-0.5);
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "uphill acceptance %.4f vs exp(-0.5) = %.4f; downhill/equal %d/%d accepted",
                freq, target, downhill, 2 * trials);
  Report("metropolis calibration", std::abs(freq - target) <= 0.01 && downhill == 2 * trials,
         detail);
}

struct Batch {
  int solved = 0;
  double seconds = 0.0;
};

Batch SolveBatch(const std::vector<fs::path>& files, const std::string& flags) {
  Batch b;
  for (const fs::path& f : files) {
    const auto start = Clock::now();
    const RunResult r = Run(Cli() + " solve " + f.string() + " " + flags +
                            " --time-limit 60 --solution " +
                            (f.parent_path() / "last.sol").string());
    b.seconds += Since(start);
    b.solved += FirstLine(r.out) == "FEASIBLE";
  }
  return b;
}

void DeepSoiEffectiveness() {
  const fs::path dir = WorkDir() / "stones";
  fs::create_directories(dir);
  const RunResult g = Run(Cli() + " gen stepping-stones --regions 5 -T 10 --seed 100 --count 20 -o " +
                          (dir / "s.mps").string());
  std::vector<fs::path> files;
  for (int i = 0; i < 20; ++i) {
    files.push_back(BatchFile(dir, "s", i, 20));
  }
  if (g.exit_code != 0) {
    Report("deepsoi effectiveness", false, "generation failed: " + g.err);
    return;
  }
  const Batch full = SolveBatch(files, "--mode full --beta 20");
  const Batch no_soi = SolveBatch(files, "--mode no-soi");
  const bool pass = full.solved >= 19 &&
                    (no_soi.solved < full.solved || no_soi.seconds > full.seconds);
  Report("deepsoi effectiveness", pass,
         "5-region map, horizon 10, 20 instances: full (beta 20) solved " + std::to_string(full.solved) +
             " in " + Fixed(full.seconds) + " s, no-soi solved " + std::to_string(no_soi.solved) +
             " in " + Fixed(no_soi.seconds) + " s");
}

void Determinism(const std::vector<Instance>& pool) {
  const fs::path dir = WorkDir() / "det";
  fs::create_directories(dir);
  std::vector<fs::path> files;
  const RunResult g = Run(Cli() + " gen generic-pwa --state-dim 2 --input-dim 1 --modes 3 -T 5 "
                          "--seed 9 --count 10 -o " + (dir / "g.mps").string());
  if (g.exit_code != 0) {
    Report("determinism", false, "generation failed: " + g.err);
    return;
  }
  for (int i = 0; i < 10; ++i) files.push_back(BatchFile(dir, "g", i, 10));
  for (const Instance& inst : pool) {
    if (files.size() == 20) break;
    if (inst.feasible) files.push_back(inst.mps);
  }
  int identical = 0;
  int feasible = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::string sol[2];
    nlohmann::json stats[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path s = dir / ("d" + std::to_string(i) + "_" + std::to_string(rep) + ".sol");
      const fs::path j = dir / ("d" + std::to_string(i) + "_" + std::to_string(rep) + ".json");
      Run(Cli() + " solve " + files[i].string() + " --mode full --seed 31 --solution " +
          s.string() + " --stats-json " + j.string());
      sol[rep] = fs::exists(s) ? Slurp(s) : "";
      stats[rep] = Stats(j);
    }
    feasible += !sol[0].empty();
    if (sol[0] == sol[1] && stats[0]["nodes"] == stats[1]["nodes"] &&
        stats[0]["proposals"] == stats[1]["proposals"] &&
        stats[0]["status"] == stats[1]["status"]) {
      ++identical;
    }
  }
  Report("determinism", identical == static_cast<int>(files.size()) && feasible > 0,
         std::to_string(identical) + "/" + std::to_string(files.size()) +
             " instances give byte-identical .sol files and equal node/proposal counts");
}

void LpCorrectness() {
  std::mt19937_64 rng(99);
  int feasible = 0;
  int infeasible = 0;
  int mismatched = 0;
  int bad_explanations = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Problem p = testing::RandomLpProblem(rng);
    const LinearObjective f = testing::RandomObjective(rng, p);
    const DecisionSet d = testing::RandomDecisions(rng, p);
    LpModel lp(p);
    lp.SetDecisions(d);
    const LpOutcome out = lp.Optimize(f);
    const testing::ExactLpResult exact = testing::ExactSolve(p, d, &f);
    if ((out.status == LpStatus::kFeasible) != exact.feasible) {
      ++mismatched;
      continue;
    }
    if (exact.feasible) {
      ++feasible;
      const double gap = std::abs(out.optimal_value - exact.value.get_d());
      worst = std::max(worst, gap);
      if (gap > 1e-7) ++mismatched;
    } else {
      ++infeasible;
      const std::vector<Fixing> why = lp.Explain();
      if (testing::ExactSolve(p, DecisionSet{why}, nullptr).feasible) ++bad_explanations;
    }
  }
  char detail[200];
  std::snprintf(detail, sizeof detail,
                "1000 LPs (%d optimal, %d infeasible): %d disagreements, max gap %.3g, "
                "%d explanations not infeasible",
                feasible, infeasible, mismatched, worst, bad_explanations);
  Report("lp correctness", mismatched == 0 && bad_explanations == 0 && infeasible > 0, detail);
}

}  // namespace
}  // namespace ohs

int main() {
  using namespace ohs;
  const auto start = Clock::now();
  const std::vector<Instance> pool = MakeRandomInstances(250);
  OracleEquivalenceAndWitnesses(pool);
  PwaWitnesses();
  ProposalConsistency();
  LemmaSoundness();
  SoiDecomposition();
  MetropolisCalibration();
  DeepSoiEffectiveness();
  Determinism(pool);
  LpCorrectness();
  std::printf("%d criteria failed; %.1f s\n", g_failures, Since(start));
  return g_failures == 0 ? 0 : 1;
}
