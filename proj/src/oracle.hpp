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

// Brute-force reference: one LP per full mode sequence.

#ifndef OHS_ORACLE_HPP_
#define OHS_ORACLE_HPP_

#include <cstdint>

#include "ir.hpp"

namespace ohs {

struct OracleResult {
  bool feasible = false;
  std::int64_t feasible_sequences = 0;
  std::int64_t total_sequences = 0;
  Assignment witness;  // first feasible sequence's LP point
};

// Product of group sizes, saturating at INT64_MAX.
std::int64_t CountSequences(const Problem& problem);

// Enumerates every sequence (first group varying fastest). Throws
// Error(kCapExceeded) when there are more than `cap` sequences.
OracleResult BruteForce(const Problem& problem,
                        std::int64_t cap = 1'000'000);

}  // namespace ohs

#endif  // OHS_ORACLE_HPP_
