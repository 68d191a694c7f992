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

// In-memory representation of a feasibility problem made of continuous
// variables, linear constraints and one-hot groups over binary variables.

#ifndef OHS_IR_HPP_
#define OHS_IR_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ohs {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Feasibility tolerance used when checking a candidate against the precise
// (non-relaxed) problem.
inline constexpr double kDefaultTol = 1e-6;

struct VarId {
  int index = -1;

  constexpr VarId() = default;
  constexpr explicit VarId(int i) : index(i) {}
  constexpr bool valid() const { return index >= 0; }
  auto operator<=>(const VarId&) const = default;
};

struct PropVar {
  int index = -1;

  constexpr PropVar() = default;
  constexpr explicit PropVar(int i) : index(i) {}
  auto operator<=>(const PropVar&) const = default;
};

enum class Relation { kLe, kLt, kEq };

struct Term {
  VarId var;
  double coeff = 0.0;

  bool operator==(const Term&) const = default;
};

struct LinearConstraint {
  std::vector<Term> terms;
  Relation relation = Relation::kLe;
  double rhs = 0.0;
  std::string name;

  // Merges duplicate variables, drops zero coefficients and sorts by VarId.
  void Normalize();
  double Activity(std::span<const double> values) const;
};

struct OneHotGroup {
  int id = 0;
  std::vector<VarId> members;
  std::optional<int> time_tag;
};

struct Assignment {
  std::vector<double> values;

  Assignment() = default;
  explicit Assignment(std::vector<double> v) : values(std::move(v)) {}

  double operator[](VarId v) const { return values[v.index]; }
  double& operator[](VarId v) { return values[v.index]; }
  std::size_t size() const { return values.size(); }
};

// One chosen member per group, indexed by group id.
struct ModeSequence {
  std::vector<VarId> choice;

  bool operator==(const ModeSequence&) const = default;
};

struct Fixing {
  VarId var;
  bool value = false;

  bool operator==(const Fixing&) const = default;
};

struct DecisionSet {
  std::vector<Fixing> fixings;

  bool empty() const { return fixings.empty(); }
  std::optional<bool> ValueOf(VarId v) const;
};

// constant + sum(coeff * var)
struct LinearObjective {
  double constant = 0.0;
  std::vector<Term> terms;

  double Evaluate(const Assignment& alpha) const;
};

class Problem {
 public:
  Problem() = default;

  VarId AddVariable(std::string name, double lower = 0.0, double upper = kInf,
                    bool binary = false);
  void AddConstraint(LinearConstraint constraint);
  // Registers a one-hot group over existing binary variables. Members get
  // [0,1] bounds and fresh propositional variables. Throws on overlap with an
  // existing group or fewer than two members.
  const OneHotGroup& AddGroup(std::vector<VarId> members,
                              std::optional<int> time_tag = std::nullopt);

  int num_vars() const { return static_cast<int>(lower_.size()); }
  int num_groups() const { return static_cast<int>(groups_.size()); }
  int num_props() const { return static_cast<int>(prop_to_var_.size()); }

  double lower(VarId v) const { return lower_[v.index]; }
  double upper(VarId v) const { return upper_[v.index]; }
  void SetBounds(VarId v, double lower, double upper);
  std::span<const double> lower_bounds() const { return lower_; }
  std::span<const double> upper_bounds() const { return upper_; }

  const std::string& name(VarId v) const { return names_[v.index]; }
  std::optional<VarId> FindVariable(std::string_view name) const;

  bool is_binary(VarId v) const { return binary_[v.index]; }
  void SetBinary(VarId v, bool binary);
  // Variables introduced by the front end that have no counterpart in the
  // input file (for instance the complement of a free-standing binary).
  bool is_synthetic(VarId v) const { return synthetic_[v.index]; }
  void SetSynthetic(VarId v, bool synthetic);

  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }
  std::vector<LinearConstraint>& mutable_constraints() { return constraints_; }
  const std::vector<OneHotGroup>& groups() const { return groups_; }
  const OneHotGroup& group(int id) const { return groups_[id]; }

  std::optional<PropVar> prop_of(VarId v) const;
  VarId var_of(PropVar p) const { return prop_to_var_[p.index]; }
  std::optional<int> group_of(VarId v) const;

  // Checks every structural invariant; throws ohs::Error on violation.
  void Validate() const;

  std::string problem_name;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<std::string> names_;
  std::vector<bool> binary_;
  std::vector<bool> synthetic_;
  std::unordered_map<std::string, int> name_index_;
  std::vector<LinearConstraint> constraints_;
  std::vector<OneHotGroup> groups_;
  std::vector<int> var_group_;
  std::vector<int> var_prop_;
  std::vector<VarId> prop_to_var_;
};

// f = sum over groups of (1 - b_choice): constant #groups, -1 on each choice.
LinearObjective ModeSequenceToObjective(const ModeSequence& seq,
                                        const Problem& problem);

// Precise feasibility: constraints, bounds and exact one-hot membership, all
// within `tol`.
bool AssignmentSatisfies(const Problem& problem, const Assignment& alpha,
                         double tol = kDefaultTol);

// True iff exactly one member is within tol of 1 and the rest within tol of 0.
bool GroupSatisfied(const OneHotGroup& group, const Assignment& alpha,
                    double tol = kDefaultTol);

// Fixings {chosen = 1, other members = 0} for one group.
std::vector<Fixing> BranchFixings(const OneHotGroup& group, VarId chosen);

}  // namespace ohs

#endif  // OHS_IR_HPP_
