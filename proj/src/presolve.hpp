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

// Bound tightening by interval propagation over linear rows and one-hot
// groups.

#ifndef OHS_PRESOLVE_HPP_
#define OHS_PRESOLVE_HPP_

#include <cstdint>
#include <vector>

#include "ir.hpp"

namespace ohs {

enum class PresolveStatus { kTightened, kProvenInfeasible };

struct PresolveOptions {
  // Relative size below which a bound change is ignored.
  double min_change = 1e-9;
  // An interval with lower > upper + this is empty.
  double feasibility_tol = 1e-7;
  // Derived bounds beyond this magnitude are discarded.
  double max_bound = 1e15;
  // Row/group visits before giving up on a fixed point (0 = automatic).
  std::int64_t max_work = 0;
};

struct PresolveResult {
  PresolveStatus status = PresolveStatus::kTightened;
  std::vector<double> lower;
  std::vector<double> upper;
  int tightenings = 0;
  // False if the work cap stopped propagation early.
  bool fixed_point = true;
};

PresolveResult Propagate(const Problem& problem,
                         const PresolveOptions& options = {});

// Writes tightened bounds back. Requires status kTightened.
void ApplyBounds(Problem& problem, const PresolveResult& result);

}  // namespace ohs

#endif  // OHS_PRESOLVE_HPP_
