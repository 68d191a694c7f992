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

// ohs: solve, oracle and gen subcommands over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "ohs/ohs.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitError = 1;
constexpr int kExitCapExceeded = 2;
constexpr double kValidateTol = 1e-6;

struct ProblemDeleter {
  void operator()(ohs_problem* p) const { ohs_problem_free(p); }
};
struct ResultDeleter {
  void operator()(ohs_result* r) const { ohs_result_free(r); }
};
struct InstanceDeleter {
  void operator()(ohs_instance* i) const { ohs_instance_free(i); }
};
using ProblemPtr = std::unique_ptr<ohs_problem, ProblemDeleter>;
using ResultPtr = std::unique_ptr<ohs_result, ResultDeleter>;
using InstancePtr = std::unique_ptr<ohs_instance, InstanceDeleter>;

struct Failure {
  std::string message;
};

void Check(ohs_error err, const std::string& context) {
  if (err != OHS_OK) throw Failure{context + ": " + ohs_last_error()};
}

ProblemPtr Load(const std::string& path) {
  ohs_problem* raw = nullptr;
  Check(ohs_problem_read_mps(path.c_str(), &raw), path);
  ProblemPtr p(raw);
  for (std::size_t i = 0; i < ohs_problem_num_warnings(p.get()); ++i) {
    std::cerr << "warning: " << ohs_problem_warning(p.get(), i) << '\n';
  }
  return p;
}

std::string SidecarFor(const std::string& mps) { return mps + ".pwa.json"; }

struct SolveOptions {
  std::string input;
  std::string mode = "full";
  double beta = 1.0;
  int64_t budget = 200;
  uint64_t seed = 0;
  double time_limit = 0.0;
  bool no_presolve = false;
  std::string stats_json;
  bool validate = true;
  std::string solution;
  std::string sidecar;
};

void WriteReport(const std::string& path, const nlohmann::json& report) {
  if (path == "-") {
    std::cout << report.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{"cannot write " + path};
  out << report.dump(2) << '\n';
}

int RunSolve(const SolveOptions& o) {
  const std::clock_t cpu_start = std::clock();
  nlohmann::json report{{"input", o.input}, {"mode", o.mode}, {"seed", o.seed}};
  auto fail = [&](const std::string& message) {
    std::cout << "ERROR\n";
    std::cerr << "error: " << message << '\n';
    if (!o.stats_json.empty()) {
      report["status"] = "ERROR";
      report["error"] = message;
      try {
        WriteReport(o.stats_json, report);
      } catch (const Failure&) {
      }
    }
    return kExitError;
  };
  try {
    ProblemPtr problem = Load(o.input);
    ohs_config config;
    ohs_config_init(&config);
    Check(ohs_mode_parse(o.mode.c_str(), &config.mode), "--mode");
    config.beta = o.beta;
    config.mcmc_budget = o.budget;
    config.seed = o.seed;
    config.time_limit = o.time_limit;
    config.presolve = o.no_presolve ? 0 : 1;
    ohs_result* raw = nullptr;
    Check(ohs_solve(problem.get(), &config, &raw), "solve");
    ResultPtr result(raw);
    const ohs_status status = ohs_result_status(result.get());

    std::optional<bool> trajectory_ok;
    std::string solution_path;
    if (status == OHS_FEASIBLE) {
      if (o.validate) {
        int ok = 0;
        Check(ohs_result_check(result.get(), problem.get(), kValidateTol, &ok), "validate");
        if (!ok) return fail("witness fails assignment check");
        const std::string side = o.sidecar.empty() ? SidecarFor(o.input) : o.sidecar;
        if (fs::exists(side)) {
          ohs_instance* inst_raw = nullptr;
          Check(ohs_instance_read_sidecar(side.c_str(), &inst_raw), side);
          InstancePtr inst(inst_raw);
          Check(ohs_validate_trajectory(inst.get(), problem.get(), result.get(),
                                        kValidateTol, &ok),
                "validate trajectory");
          if (!ok) return fail("witness fails trajectory validation");
          trajectory_ok = true;
        }
      }
      solution_path = o.solution.empty()
                          ? fs::path(o.input).replace_extension(".sol").string()
                          : o.solution;
      Check(ohs_result_write_solution(result.get(), problem.get(), solution_path.c_str()),
            "write solution");
    }

    std::cout << ohs_status_name(status) << '\n';
    if (!solution_path.empty()) std::cerr << "solution: " << solution_path << '\n';
    if (!o.stats_json.empty()) {
      ohs_stats s;
      ohs_result_stats(result.get(), &s);
      report["status"] = ohs_status_name(status);
      report["wall_seconds"] = s.wall_seconds;
      report["cpu_seconds"] =
          static_cast<double>(std::clock() - cpu_start) / CLOCKS_PER_SEC;
      report["nodes"] = s.nodes;
      report["max_depth"] = s.max_depth;
      report["lp_solves"] = s.lp_solves;
      report["sat_queries"] = s.sat_queries;
      report["proposals"] = s.proposals;
      report["accepted"] = s.accepted;
      report["lemmas"] = s.lemmas;
      report["presolve_tightenings"] = s.presolve_tightenings;
      report["presolve_infeasible"] = s.presolve_infeasible != 0;
      report["sat_seconds"] = s.sat_seconds;
      report["deep_soi_seconds"] = s.deep_soi_seconds;
      report["deep_soi_sat_fraction"] =
          s.deep_soi_seconds > 0 ? s.deep_soi_sat_seconds / s.deep_soi_seconds : 0.0;
      report["groups"] = ohs_problem_num_groups(problem.get());
      report["variables"] = ohs_problem_num_vars(problem.get());
      report["solution"] = solution_path.empty() ? nlohmann::json(nullptr)
                                                 : nlohmann::json(solution_path);
      if (trajectory_ok) report["trajectory_valid"] = *trajectory_ok;
      WriteReport(o.stats_json, report);
    }
    return static_cast<int>(status);
  } catch (const Failure& f) {
    return fail(f.message);
  }
}

int RunOracle(const std::string& input, int64_t cap) {
  try {
    ProblemPtr problem = Load(input);
    ohs_oracle_result r;
    const ohs_error err = ohs_oracle(problem.get(), cap, &r);
    if (err == OHS_ERR_CAP_EXCEEDED) {
      std::cerr << "refused: " << ohs_last_error() << '\n';
      return kExitCapExceeded;
    }
    Check(err, "oracle");
    std::cout << (r.feasible ? "FEASIBLE " : "INFEASIBLE ") << r.feasible_sequences
              << '/' << r.total_sequences << '\n';
    return r.feasible ? OHS_FEASIBLE : OHS_INFEASIBLE;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kExitError;
  }
}

struct GenOptions {
  std::string family;
  int horizon = 10;
  uint64_t seed = 0;
  std::string out;
  int count = 1;
  std::string map;
  int regions = 5;
  int state_dim = 2;
  int input_dim = 1;
  int modes = 3;
  bool sidecar = true;
};

// Variant i of a batch: "<stem>_<i><ext>" next to the requested path.
std::string VariantPath(const std::string& out, int i, int count) {
  if (count == 1) return out;
  const fs::path p(out);
  const int width = static_cast<int>(std::to_string(count - 1).size());
  std::string index = std::to_string(i);
  index.insert(0, static_cast<std::size_t>(width) - index.size(), '0');
  const std::string ext = p.has_extension() ? p.extension().string() : ".mps";
  return (p.parent_path() / (p.stem().string() + "_" + index + ext)).string();
}

int RunGen(const GenOptions& o) {
  try {
    for (int i = 0; i < o.count; ++i) {
      const uint64_t seed = o.seed + static_cast<uint64_t>(i);
      ohs_instance* raw = nullptr;
      if (o.family == "stepping-stones") {
        Check(ohs_gen_stepping_stones(o.map.empty() ? nullptr : o.map.c_str(), o.regions,
                                      o.horizon, seed, &raw),
              "stepping-stones");
      } else if (o.family == "toy-contact") {
        Check(ohs_gen_toy_contact(o.horizon, seed, &raw), "toy-contact");
      } else {
        Check(ohs_gen_generic_pwa(o.state_dim, o.input_dim, o.modes, o.horizon, seed, &raw),
              "generic-pwa");
      }
      InstancePtr inst(raw);
      const std::string path = VariantPath(o.out, i, o.count);
      const std::string side = SidecarFor(path);
      std::error_code ec;
      if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path(), ec);
      Check(ohs_instance_write(inst.get(), path.c_str(), o.sidecar ? side.c_str() : nullptr),
            path);
      std::cout << path << '\n';
    }
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kExitError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-hot constrained MILP feasibility solver"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ohs_version());

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Decide feasibility of an MPS file");
  solve_cmd->add_option("file", solve.input, "MPS file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--mode", solve.mode, "Solver configuration")
      ->check(CLI::IsMember({"full", "no-cdcl", "no-soi", "no-prop"}))
      ->capture_default_str();
  solve_cmd->add_option("--beta", solve.beta, "Metropolis temperature")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve_cmd->add_option("--mcmc-budget", solve.budget, "Rejected proposals per local search")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  solve_cmd->add_option("--seed", solve.seed, "Random seed")->capture_default_str();
  solve_cmd->add_option("--time-limit", solve.time_limit, "Wall-clock seconds, 0 for none")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_flag("--no-presolve", solve.no_presolve, "Skip bound propagation");
  solve_cmd->add_option("--stats-json", solve.stats_json, "Write a JSON report ('-' for stdout)");
  solve_cmd->add_flag("--validate,!--no-validate", solve.validate,
                      "Re-check the witness before reporting FEASIBLE (default on)");
  solve_cmd->add_option("--solution", solve.solution, "Solution path (default <file>.sol)");
  solve_cmd->add_option("--sidecar", solve.sidecar,
                        "PWA description for trajectory validation (default <file>.pwa.json)");

  std::string oracle_input;
  int64_t cap = 1'000'000;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Enumerate every mode sequence with an LP each");
  oracle_cmd->add_option("file", oracle_input, "MPS file")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--cap", cap, "Refuse above this many sequences")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate PWA benchmark instances");
  gen_cmd->add_option("family", gen.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"stepping-stones", "toy-contact", "generic-pwa"}));
  gen_cmd->add_option("--out,-o", gen.out, "Output MPS path")->required();
  gen_cmd->add_option("--horizon,-T", gen.horizon, "Number of steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Base seed")->capture_default_str();
  gen_cmd->add_option("--count", gen.count, "Number of seeded variants")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("--map", gen.map, "Stepping-stones map file")->check(CLI::ExistingFile);
  gen_cmd->add_option("--regions", gen.regions, "Stones in the built-in chain map")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("--state-dim", gen.state_dim, "generic-pwa state dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("--input-dim", gen.input_dim, "generic-pwa input dimension")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen_cmd->add_option("--modes", gen.modes, "generic-pwa mode count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_flag("!--no-sidecar", gen.sidecar, "Skip the <out>.pwa.json description");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    std::cerr << sub->help();
    return kExitError;
  }

  if (*solve_cmd) return RunSolve(solve);
  if (*oracle_cmd) return RunOracle(oracle_input, cap);
  return RunGen(gen);
}
