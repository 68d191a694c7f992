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

// Sum of infeasibilities of the one-hot constraints.
//
// vio(B) = 1 - max(B) and SoI = sum of vio over all groups. Over the
// relaxation SoI is the minimum of the linear functions sum(1 - b_choice),
// one per mode sequence, so minimizing it is a search over mode sequences.

#ifndef OHS_SOI_HPP_
#define OHS_SOI_HPP_

#include <vector>

#include "ir.hpp"

namespace ohs {

double Vio(const OneHotGroup& group, const Assignment& alpha);
double Soi(const Problem& problem, const Assignment& alpha);

// Per-group argmax of the relaxed values, ties to the lowest VarId.
ModeSequence InitialCost(const Assignment& alpha0, const Problem& problem);

// Ids of groups whose one-hot constraint alpha violates (at tol).
std::vector<int> UnsatisfiedGroups(const Problem& problem,
                                   const Assignment& alpha,
                                   double tol = kDefaultTol);

}  // namespace ohs

#endif  // OHS_SOI_HPP_
