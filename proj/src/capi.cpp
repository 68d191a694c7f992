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

#include "ohs/ohs.h"

#include <cmath>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "benchgen.hpp"
#include "errors.hpp"
#include "mps.hpp"
#include "oracle.hpp"
#include "search.hpp"

struct ohs_problem {
  ohs::Problem problem;
  std::vector<std::string> warnings;
};

struct ohs_result {
  ohs::SearchResult result;
};

struct ohs_instance {
  ohs::PwaInstance instance;
};

namespace {

thread_local std::string g_last_error;

ohs_error Fail(ohs_error code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename F>
ohs_error Guard(F&& body) {
  try {
    body();
    return OHS_OK;
  } catch (const ohs::Error& e) {
    return Fail(static_cast<ohs_error>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(OHS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(OHS_ERR_INTERNAL, e.what());
  }
}

void Require(bool condition, const char* what) {
  if (!condition) throw ohs::Error(ohs::ErrorCode::kInvalidArgument, what);
}

ohs::SolverMode ToMode(ohs_mode mode) {
  switch (mode) {
    case OHS_MODE_FULL:
      return ohs::SolverMode::kFull;
    case OHS_MODE_NO_CDCL:
      return ohs::SolverMode::kNoCdcl;
    case OHS_MODE_NO_SOI:
      return ohs::SolverMode::kNoSoi;
    case OHS_MODE_NO_PROP:
      return ohs::SolverMode::kNoProp;
  }
  throw ohs::Error(ohs::ErrorCode::kInvalidArgument, "unknown mode");
}

ohs_problem* Wrap(ohs::MpsReadResult read) {
  auto handle = std::make_unique<ohs_problem>();
  handle->problem = ohs::ExtractOneHots(std::move(read.problem));
  ohs::CompleteBinaries(handle->problem);
  handle->warnings = std::move(read.warnings);
  return handle.release();
}

std::ofstream OpenOut(const char* path) {
  Require(path != nullptr, "null path");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ohs::Error(ohs::ErrorCode::kIo, std::string("cannot write ") + path);
  return out;
}

void Close(std::ofstream& out, const char* path) {
  out.close();
  if (!out) throw ohs::Error(ohs::ErrorCode::kIo, std::string("write failed: ") + path);
}

}  // namespace

extern "C" {

const char* ohs_version(void) { return "0.1.0"; }

const char* ohs_last_error(void) { return g_last_error.c_str(); }

const char* ohs_mode_name(ohs_mode mode) {
  try {
    return ohs::SolverModeName(ToMode(mode));
  } catch (const ohs::Error&) {
    return "?";
  }
}

ohs_error ohs_mode_parse(const char* name, ohs_mode* out) {
  return Guard([&] {
    Require(name != nullptr && out != nullptr, "null argument");
    switch (ohs::ParseSolverMode(name)) {
      case ohs::SolverMode::kFull:
        *out = OHS_MODE_FULL;
        break;
      case ohs::SolverMode::kNoCdcl:
        *out = OHS_MODE_NO_CDCL;
        break;
      case ohs::SolverMode::kNoSoi:
        *out = OHS_MODE_NO_SOI;
        break;
      case ohs::SolverMode::kNoProp:
        *out = OHS_MODE_NO_PROP;
        break;
    }
  });
}

const char* ohs_status_name(ohs_status status) {
  switch (status) {
    case OHS_FEASIBLE:
      return "FEASIBLE";
    case OHS_INFEASIBLE:
      return "INFEASIBLE";
    case OHS_TIMEOUT:
      return "TIMEOUT";
  }
  return "?";
}

ohs_error ohs_problem_read_mps(const char* path, ohs_problem** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = Wrap(ohs::ReadMpsFile(path));
  });
}

ohs_error ohs_problem_parse_mps(const char* text, size_t length,
                                ohs_problem** out) {
  return Guard([&] {
    Require((text != nullptr || length == 0) && out != nullptr, "null argument");
    *out = Wrap(ohs::ParseMps(std::string_view(text ? text : "", length)));
  });
}

void ohs_problem_free(ohs_problem* problem) { delete problem; }

int64_t ohs_problem_num_vars(const ohs_problem* problem) {
  return problem ? problem->problem.num_vars() : 0;
}

int64_t ohs_problem_num_constraints(const ohs_problem* problem) {
  return problem ? static_cast<int64_t>(problem->problem.constraints().size()) : 0;
}

int64_t ohs_problem_num_groups(const ohs_problem* problem) {
  return problem ? problem->problem.num_groups() : 0;
}

int64_t ohs_problem_num_sequences(const ohs_problem* problem) {
  return problem ? ohs::CountSequences(problem->problem) : 0;
}

size_t ohs_problem_num_warnings(const ohs_problem* problem) {
  return problem ? problem->warnings.size() : 0;
}

const char* ohs_problem_warning(const ohs_problem* problem, size_t i) {
  if (!problem || i >= problem->warnings.size()) return nullptr;
  return problem->warnings[i].c_str();
}

ohs_error ohs_problem_write_mps(const ohs_problem* problem, const char* path) {
  return Guard([&] {
    Require(problem != nullptr, "null problem");
    std::ofstream out = OpenOut(path);
    ohs::WriteMps(problem->problem, out);
    Close(out, path);
  });
}

void ohs_config_init(ohs_config* config) {
  if (!config) return;
  const ohs::SolverConfig defaults;
  config->mode = OHS_MODE_FULL;
  config->beta = defaults.mcmc.beta;
  config->mcmc_budget = defaults.mcmc.budget;
  config->seed = defaults.mcmc.seed;
  config->time_limit = defaults.time_limit;
  config->presolve = defaults.presolve ? 1 : 0;
}

ohs_error ohs_solve(const ohs_problem* problem, const ohs_config* config,
                    ohs_result** out) {
  return Guard([&] {
    Require(problem != nullptr && out != nullptr, "null argument");
    ohs_config c;
    ohs_config_init(&c);
    if (config) c = *config;
    Require(std::isfinite(c.beta) && c.beta > 0, "beta must be finite and positive");
    Require(c.mcmc_budget >= 0 && c.mcmc_budget <= INT32_MAX,
            "mcmc budget out of range");
    Require(!std::isnan(c.time_limit), "time limit is NaN");
    ohs::SolverConfig sc;
    sc.mode = ToMode(c.mode);
    sc.mcmc.beta = c.beta;
    sc.mcmc.budget = static_cast<int>(c.mcmc_budget);
    sc.mcmc.seed = c.seed;
    sc.time_limit = c.time_limit;
    sc.presolve = c.presolve != 0;
    auto handle = std::make_unique<ohs_result>();
    handle->result = ohs::Solve(problem->problem, sc);
    *out = handle.release();
  });
}

void ohs_result_free(ohs_result* result) { delete result; }

ohs_status ohs_result_status(const ohs_result* result) {
  switch (result->result.status) {
    case ohs::SearchStatus::kFeasible:
      return OHS_FEASIBLE;
    case ohs::SearchStatus::kInfeasible:
      return OHS_INFEASIBLE;
    case ohs::SearchStatus::kTimeout:
      return OHS_TIMEOUT;
  }
  return OHS_TIMEOUT;
}

void ohs_result_stats(const ohs_result* result, ohs_stats* out) {
  if (!result || !out) return;
  const ohs::SearchStats& s = result->result.stats;
  out->nodes = s.nodes;
  out->max_depth = s.max_depth;
  out->lp_solves = s.lp_solves;
  out->sat_queries = s.sat_queries;
  out->proposals = s.proposals;
  out->accepted = s.accepted;
  out->lemmas = s.lemmas;
  out->presolve_tightenings = s.presolve_tightenings;
  out->presolve_infeasible = s.presolve_infeasible ? 1 : 0;
  out->sat_seconds = s.sat_seconds;
  out->deep_soi_seconds = s.deep_soi_seconds;
  out->deep_soi_sat_seconds = s.deep_soi_sat_seconds;
  out->wall_seconds = s.wall_seconds;
}

size_t ohs_result_num_values(const ohs_result* result) {
  if (!result || result->result.status != ohs::SearchStatus::kFeasible) return 0;
  return result->result.witness.size();
}

const double* ohs_result_values(const ohs_result* result) {
  if (ohs_result_num_values(result) == 0) return nullptr;
  return result->result.witness.values.data();
}

ohs_error ohs_result_write_solution(const ohs_result* result,
                                    const ohs_problem* problem,
                                    const char* path) {
  return Guard([&] {
    Require(result != nullptr && problem != nullptr, "null argument");
    if (result->result.status != ohs::SearchStatus::kFeasible) {
      throw ohs::Error(ohs::ErrorCode::kContractViolation,
                       "no solution to write: result is not FEASIBLE");
    }
    std::ofstream out = OpenOut(path);
    ohs::WriteSolution(problem->problem, result->result.witness, out);
    Close(out, path);
  });
}

ohs_error ohs_result_check(const ohs_result* result, const ohs_problem* problem,
                           double tol, int* ok) {
  return Guard([&] {
    Require(result != nullptr && problem != nullptr && ok != nullptr, "null argument");
    Require(tol >= 0, "negative tolerance");
    const ohs::Assignment& w = result->result.witness;
    *ok = result->result.status == ohs::SearchStatus::kFeasible &&
                  static_cast<int>(w.size()) == problem->problem.num_vars() &&
                  ohs::AssignmentSatisfies(problem->problem, w, tol)
              ? 1
              : 0;
  });
}

ohs_error ohs_oracle(const ohs_problem* problem, int64_t cap,
                     ohs_oracle_result* out) {
  return Guard([&] {
    Require(problem != nullptr && out != nullptr, "null argument");
    Require(cap >= 0, "negative cap");
    const ohs::OracleResult r = ohs::BruteForce(problem->problem, cap);
    out->feasible = r.feasible ? 1 : 0;
    out->feasible_sequences = r.feasible_sequences;
    out->total_sequences = r.total_sequences;
  });
}

ohs_error ohs_gen_stepping_stones(const char* map_path, int regions,
                                  int horizon, uint64_t seed,
                                  ohs_instance** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    Require(horizon >= 1, "horizon must be at least 1");
    ohs::SteppingStoneMap map;
    if (map_path) {
      map = ohs::ReadSteppingStoneMap(map_path);
      map.horizon = horizon;
    } else {
      Require(regions >= 1, "need at least one region");
      map = ohs::ChainMap(regions, horizon);
    }
    auto handle = std::make_unique<ohs_instance>();
    handle->instance = ohs::SteppingStones(map, seed);
    *out = handle.release();
  });
}

ohs_error ohs_gen_toy_contact(int horizon, uint64_t seed, ohs_instance** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    Require(horizon >= 1, "horizon must be at least 1");
    auto handle = std::make_unique<ohs_instance>();
    handle->instance = ohs::ToyContact(horizon, seed);
    *out = handle.release();
  });
}

ohs_error ohs_gen_generic_pwa(int state_dim, int input_dim, int modes,
                              int horizon, uint64_t seed, ohs_instance** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    Require(horizon >= 1, "horizon must be at least 1");
    auto handle = std::make_unique<ohs_instance>();
    handle->instance = ohs::GenericPwa(
        ohs::GenericPwaParams{state_dim, input_dim, modes, horizon}, seed);
    *out = handle.release();
  });
}

void ohs_instance_free(ohs_instance* instance) { delete instance; }

ohs_error ohs_instance_write(const ohs_instance* instance, const char* mps_path,
                             const char* sidecar_path) {
  return Guard([&] {
    Require(instance != nullptr, "null instance");
    const ohs::PwaEncoding enc = ohs::EncodePwa(instance->instance);
    std::ofstream out = OpenOut(mps_path);
    ohs::WriteMps(enc.problem, out);
    Close(out, mps_path);
    if (sidecar_path) {
      std::ofstream side = OpenOut(sidecar_path);
      ohs::WritePwaJson(instance->instance, side);
      Close(side, sidecar_path);
    }
  });
}

ohs_error ohs_instance_read_sidecar(const char* path, ohs_instance** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    std::ifstream in(path);
    if (!in) throw ohs::Error(ohs::ErrorCode::kIo, std::string("cannot open ") + path);
    auto handle = std::make_unique<ohs_instance>();
    handle->instance = ohs::ReadPwaJson(in);
    *out = handle.release();
  });
}

ohs_error ohs_validate_trajectory(const ohs_instance* instance,
                                  const ohs_problem* problem,
                                  const ohs_result* result, double tol,
                                  int* ok) {
  return Guard([&] {
    Require(instance && problem && result && ok, "null argument");
    Require(tol >= 0, "negative tolerance");
    *ok = result->result.status == ohs::SearchStatus::kFeasible &&
                  ohs::ValidateTrajectory(instance->instance, problem->problem,
                                          result->result.witness, tol)
              ? 1
              : 0;
  });
}

}  // extern "C"
