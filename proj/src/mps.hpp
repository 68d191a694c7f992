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

// MPS reader and writers.
//
// Both free (whitespace separated) and fixed-column records are accepted;
// a record whose token count does not fit its section is re-read by the
// fixed field positions. Objective (N) rows are dropped with a warning.
// GE rows become LE rows with negated coefficients; RANGES split a row into
// two inequalities. Integer columns must end up with bounds inside [0, 1]
// and become binaries; integer columns without bounds default to [0, 1].

#ifndef OHS_MPS_HPP_
#define OHS_MPS_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ir.hpp"

namespace ohs {

struct MpsReadResult {
  Problem problem;
  std::vector<std::string> warnings;
};

// Throws ParseError (with a line number) on malformed input and
// Error(kUnsupported) for general integers or semicontinuous bounds.
MpsReadResult ParseMps(std::istream& in);
MpsReadResult ParseMps(std::string_view text);
MpsReadResult ReadMpsFile(const std::string& path);

// Moves every row sum(x_i) = 1 over binaries, and every pair of rows
// sum(x_i) <= 1, sum(x_i) >= 1 over one support, into a OneHotGroup.
// Throws Error(kOverlappingGroups) if two candidate supports intersect.
Problem ExtractOneHots(Problem problem);

// Gives every binary outside a group a synthetic complement "<name>__neg"
// and the two-member group {b, complement}, so that integrality of every
// binary is decided by branching. Returns the number of groups added.
int CompleteBinaries(Problem& problem);

// Free-format MPS; groups are written as equality rows.
void WriteMps(const Problem& problem, std::ostream& out);

// "FEASIBLE" header, then "<name> <value>" per non-synthetic variable in
// declaration order, values in shortest round-trip form.
void WriteSolution(const Problem& problem, const Assignment& alpha,
                   std::ostream& out);

// Shortest decimal string that parses back to exactly v.
std::string FormatDouble(double v);

}  // namespace ohs

#endif  // OHS_MPS_HPP_
