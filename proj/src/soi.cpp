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

#include "soi.hpp"

#include <algorithm>

namespace ohs {

double Vio(const OneHotGroup& group, const Assignment& alpha) {
  double best = -kInf;
  for (VarId v : group.members) best = std::max(best, alpha[v]);
  return 1.0 - best;
}

double Soi(const Problem& problem, const Assignment& alpha) {
  double sum = 0.0;
  for (const OneHotGroup& g : problem.groups()) sum += Vio(g, alpha);
  return sum;
}

ModeSequence InitialCost(const Assignment& alpha0, const Problem& problem) {
  ModeSequence seq;
  seq.choice.reserve(problem.num_groups());
  for (const OneHotGroup& g : problem.groups()) {
    VarId best = g.members.front();
    for (VarId v : g.members) {
      const double a = alpha0[v];
      const double b = alpha0[best];
      if (a > b || (a == b && v < best)) best = v;
    }
    seq.choice.push_back(best);
  }
  return seq;
}

std::vector<int> UnsatisfiedGroups(const Problem& problem,
                                   const Assignment& alpha, double tol) {
  std::vector<int> out;
  for (const OneHotGroup& g : problem.groups()) {
    if (!GroupSatisfied(g, alpha, tol)) out.push_back(g.id);
  }
  return out;
}

}  // namespace ohs
