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

// Piecewise-affine control benchmarks.
//
// A PwaSystem is a list of modes, each a bounded polytope over the state with
// its own affine update x' = A x + B u + c and input box. EncodePwa unrolls it
// over a horizon with big-M rows; variables are named x<t>_<k>, u<t>_<j> and
// b<t>_<i>, and the mode binaries of step t form group t.

#ifndef OHS_BENCHGEN_HPP_
#define OHS_BENCHGEN_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ir.hpp"

namespace ohs {

using Matrix = std::vector<std::vector<double>>;

struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  bool Contains(const std::vector<double>& x, double tol) const;
  bool operator==(const Box&) const = default;
};

struct PwaMode {
  Matrix H;  // H x <= h
  std::vector<double> h;
  Matrix A;
  Matrix B;
  std::vector<double> c;
  Box input;

  bool operator==(const PwaMode&) const = default;
};

struct PwaSystem {
  int n = 0;  // state dimension
  int m = 0;  // input dimension
  std::vector<PwaMode> modes;
  int horizon = 1;

  // Throws Error(kGeneration) on inconsistent dimensions or horizon < 1.
  void Validate() const;
  bool operator==(const PwaSystem&) const = default;
};

struct PwaInstance {
  std::string family;
  PwaSystem system;
  Box init;  // over the state; lo == hi pins a coordinate
  Box goal;

  bool operator==(const PwaInstance&) const = default;
};

struct BigMRow {
  int row = 0;  // index into Problem::constraints()
  VarId binary;
  double big_m = 0.0;
};

struct PwaEncoding {
  Problem problem;
  std::vector<BigMRow> big_m_rows;
};

// Unrolls the system. Big-M constants are interval bounds of each row over
// the global state and input box; an unbounded or empty mode polytope throws
// Error(kGeneration).
PwaEncoding EncodePwa(const PwaInstance& instance);

// Decodes the trajectory from alpha by variable name and re-checks it against
// the dynamics: init and goal membership, one selected mode per step, polytope
// and input-box membership and the affine update, all within tol.
bool ValidateTrajectory(const PwaInstance& instance, const Problem& problem,
                        const Assignment& alpha, double tol);

// True iff every big-M row whose binary is off at alpha stays within its
// relaxed right-hand side by tol.
bool BigMRowsSlack(const PwaEncoding& encoding, const Assignment& alpha,
                   double tol);

struct Region {
  double xmin = 0.0;
  double xmax = 0.0;
  double ymin = 0.0;
  double ymax = 0.0;
  double u_max = 0.0;
};

struct SteppingStoneMap {
  std::vector<Region> regions;
  Region start;  // u_max unused
  Region goal;   // u_max unused
  double v_max = 2.0;
  int horizon = 10;
};

// Text map: one region per line as "xmin xmax ymin ymax u_max"; keyword lines
// "start x0 x1 y0 y1", "goal x0 x1 y0 y1", "horizon T" and "vmax v"; '#'
// starts a comment. Throws ParseError with the line number.
SteppingStoneMap ParseSteppingStoneMap(std::istream& in);
SteppingStoneMap ReadSteppingStoneMap(const std::string& path);
void WriteSteppingStoneMap(const SteppingStoneMap& map, std::ostream& out);

// A chain of `num_regions` stones along x separated by short gaps, with the
// start on the first stone and the goal on the last.
SteppingStoneMap ChainMap(int num_regions, int horizon);

// Double integrator on the plane: state (px, py, vx, vy), input (ax, ay),
// exact zero-order hold with unit step. The start position is drawn
// uniformly from the start box; start and goal velocities are zero.
PwaInstance SteppingStones(const SteppingStoneMap& map, std::uint64_t seed);

// One-dimensional block against a compliant wall with free, sticking and
// sliding modes. The seed draws the start state.
PwaInstance ToyContact(int horizon, std::uint64_t seed);

struct GenericPwaParams {
  int n = 2;
  int m = 1;
  int modes = 3;
  int horizon = 4;
};

// Random modes slicing [-5, 5]^n along the first axis.
PwaInstance GenericPwa(const GenericPwaParams& params, std::uint64_t seed);

// Sidecar JSON for validating solutions of a generated file.
void WritePwaJson(const PwaInstance& instance, std::ostream& out);
PwaInstance ReadPwaJson(std::istream& in);

}  // namespace ohs

#endif  // OHS_BENCHGEN_HPP_
