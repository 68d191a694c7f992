/* Copyright 2026 The ohsolve Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* ohsolve C API.
 *
 * Every fallible call returns an ohs_error; OHS_OK is zero. The message of
 * the most recent failure on the calling thread is available from
 * ohs_last_error(). Handles are opaque and owned by the caller, who releases
 * them with the matching *_free function (NULL is accepted). */

#ifndef OHS_OHS_H_
#define OHS_OHS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OHS_API __declspec(dllexport)
#else
#define OHS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ohs_error {
  OHS_OK = 0,
  OHS_ERR_INVALID_ARGUMENT = 1,
  OHS_ERR_PARSE = 2,
  OHS_ERR_MALFORMED_SEQUENCE = 3,
  OHS_ERR_OVERLAPPING_GROUPS = 4,
  OHS_ERR_UNSUPPORTED = 5,
  OHS_ERR_NUMERICAL = 6,
  OHS_ERR_CONTRACT = 7,
  OHS_ERR_IO = 8,
  OHS_ERR_CAP_EXCEEDED = 9,
  OHS_ERR_GENERATION = 10,
  OHS_ERR_VALIDATION = 11,
  OHS_ERR_INTERNAL = 99
} ohs_error;

typedef enum ohs_status {
  OHS_FEASIBLE = 10,
  OHS_INFEASIBLE = 20,
  OHS_TIMEOUT = 30
} ohs_status;

typedef enum ohs_mode {
  OHS_MODE_FULL = 0,
  OHS_MODE_NO_CDCL = 1,
  OHS_MODE_NO_SOI = 2,
  OHS_MODE_NO_PROP = 3
} ohs_mode;

typedef struct ohs_problem ohs_problem;
typedef struct ohs_result ohs_result;
typedef struct ohs_instance ohs_instance;

typedef struct ohs_config {
  ohs_mode mode;
  double beta;          /* Metropolis temperature, > 0 */
  int64_t mcmc_budget;  /* rejected proposals per local search, >= 0 */
  uint64_t seed;
  double time_limit;    /* wall-clock seconds; <= 0 means none */
  int presolve;         /* nonzero to run bound propagation first */
} ohs_config;

typedef struct ohs_stats {
  int64_t nodes;
  int64_t max_depth;
  int64_t lp_solves;
  int64_t sat_queries;
  int64_t proposals;
  int64_t accepted;
  int64_t lemmas;
  int64_t presolve_tightenings;
  int presolve_infeasible;
  double sat_seconds;
  double deep_soi_seconds;
  double deep_soi_sat_seconds;
  double wall_seconds;
} ohs_stats;

typedef struct ohs_oracle_result {
  int feasible;
  int64_t feasible_sequences;
  int64_t total_sequences;
} ohs_oracle_result;

OHS_API const char* ohs_version(void);
OHS_API const char* ohs_last_error(void);
/* "full", "no-cdcl", "no-soi" or "no-prop". */
OHS_API const char* ohs_mode_name(ohs_mode mode);
OHS_API ohs_error ohs_mode_parse(const char* name, ohs_mode* out);
/* "FEASIBLE", "INFEASIBLE" or "TIMEOUT". */
OHS_API const char* ohs_status_name(ohs_status status);

/* Problems. Reading extracts one-hot rows into groups and gives every other
 * binary a synthetic two-member group. */
OHS_API ohs_error ohs_problem_read_mps(const char* path, ohs_problem** out);
OHS_API ohs_error ohs_problem_parse_mps(const char* text, size_t length,
                                        ohs_problem** out);
OHS_API void ohs_problem_free(ohs_problem* problem);
OHS_API int64_t ohs_problem_num_vars(const ohs_problem* problem);
OHS_API int64_t ohs_problem_num_constraints(const ohs_problem* problem);
OHS_API int64_t ohs_problem_num_groups(const ohs_problem* problem);
OHS_API int64_t ohs_problem_num_sequences(const ohs_problem* problem);
OHS_API size_t ohs_problem_num_warnings(const ohs_problem* problem);
OHS_API const char* ohs_problem_warning(const ohs_problem* problem, size_t i);
OHS_API ohs_error ohs_problem_write_mps(const ohs_problem* problem,
                                        const char* path);

/* Solving. */
OHS_API void ohs_config_init(ohs_config* config);
OHS_API ohs_error ohs_solve(const ohs_problem* problem,
                            const ohs_config* config, ohs_result** out);
OHS_API void ohs_result_free(ohs_result* result);
OHS_API ohs_status ohs_result_status(const ohs_result* result);
OHS_API void ohs_result_stats(const ohs_result* result, ohs_stats* out);
/* Witness values in variable order; zero length unless FEASIBLE. */
OHS_API size_t ohs_result_num_values(const ohs_result* result);
OHS_API const double* ohs_result_values(const ohs_result* result);
OHS_API ohs_error ohs_result_write_solution(const ohs_result* result,
                                            const ohs_problem* problem,
                                            const char* path);
/* Sets *ok to 1 iff the witness satisfies every bound, row and group of the
 * problem within tol. */
OHS_API ohs_error ohs_result_check(const ohs_result* result,
                                   const ohs_problem* problem, double tol,
                                   int* ok);

/* Exhaustive enumeration of mode sequences; OHS_ERR_CAP_EXCEEDED when the
 * count exceeds cap. */
OHS_API ohs_error ohs_oracle(const ohs_problem* problem, int64_t cap,
                             ohs_oracle_result* out);

/* Benchmark generation. A NULL map_path uses a chain of `regions` stones. */
OHS_API ohs_error ohs_gen_stepping_stones(const char* map_path, int regions,
                                          int horizon, uint64_t seed,
                                          ohs_instance** out);
OHS_API ohs_error ohs_gen_toy_contact(int horizon, uint64_t seed,
                                      ohs_instance** out);
OHS_API ohs_error ohs_gen_generic_pwa(int state_dim, int input_dim, int modes,
                                      int horizon, uint64_t seed,
                                      ohs_instance** out);
OHS_API void ohs_instance_free(ohs_instance* instance);
/* Writes the encoded MPS file and, when sidecar_path is not NULL, the JSON
 * description used by ohs_validate_trajectory. */
OHS_API ohs_error ohs_instance_write(const ohs_instance* instance,
                                     const char* mps_path,
                                     const char* sidecar_path);
OHS_API ohs_error ohs_instance_read_sidecar(const char* path,
                                            ohs_instance** out);
OHS_API ohs_error ohs_validate_trajectory(const ohs_instance* instance,
                                          const ohs_problem* problem,
                                          const ohs_result* result,
                                          double tol, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* OHS_OHS_H_ */
