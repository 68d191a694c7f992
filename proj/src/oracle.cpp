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

#include "oracle.hpp"

#include <limits>

#include "errors.hpp"
#include "lp.hpp"

namespace ohs {

std::int64_t CountSequences(const Problem& problem) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t n = 1;
  for (const OneHotGroup& g : problem.groups()) {
    const std::int64_t m = static_cast<std::int64_t>(g.members.size());
    if (n > kMax / m) return kMax;
    n *= m;
  }
  return n;
}

OracleResult BruteForce(const Problem& problem, std::int64_t cap) {
  OracleResult result;
  result.total_sequences = CountSequences(problem);
  if (result.total_sequences > cap) {
    throw Error(ErrorCode::kCapExceeded,
                std::to_string(result.total_sequences) +
                    " mode sequences exceed the cap of " + std::to_string(cap));
  }
  LpModel lp(problem);
  std::vector<std::size_t> pick(problem.num_groups(), 0);
  for (;;) {
    DecisionSet d;
    for (const OneHotGroup& g : problem.groups()) {
      for (const Fixing& f : BranchFixings(g, g.members[pick[g.id]])) {
        d.fixings.push_back(f);
      }
    }
    lp.SetDecisions(d);
    const LpOutcome out = lp.CheckFeasible(false);
    if (out.status == LpStatus::kFeasible) {
      if (!result.feasible) result.witness = out.assignment;
      result.feasible = true;
      ++result.feasible_sequences;
    }
    int g = 0;
    while (g < problem.num_groups() &&
           ++pick[g] == problem.group(g).members.size()) {
      pick[g++] = 0;
    }
    if (g == problem.num_groups()) break;
  }
  return result;
}

}  // namespace ohs
