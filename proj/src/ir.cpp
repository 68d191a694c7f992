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

#include "ir.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace ohs {

void LinearConstraint::Normalize() {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const Term& t : terms) {
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0.0; });
  terms = std::move(merged);
}

double LinearConstraint::Activity(std::span<const double> values) const {
  double sum = 0.0;
  for (const Term& t : terms) sum += t.coeff * values[t.var.index];
  return sum;
}

std::optional<bool> DecisionSet::ValueOf(VarId v) const {
  for (const Fixing& f : fixings) {
    if (f.var == v) return f.value;
  }
  return std::nullopt;
}

double LinearObjective::Evaluate(const Assignment& alpha) const {
  double sum = constant;
  for (const Term& t : terms) sum += t.coeff * alpha[t.var];
  return sum;
}

VarId Problem::AddVariable(std::string name, double lower, double upper,
                           bool binary) {
  const int index = num_vars();
  if (name.empty()) name = "v" + std::to_string(index);
  if (!name_index_.emplace(name, index).second) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate variable name " + name);
  }
  lower_.push_back(lower);
  upper_.push_back(upper);
  names_.push_back(std::move(name));
  binary_.push_back(binary);
  synthetic_.push_back(false);
  var_group_.push_back(-1);
  var_prop_.push_back(-1);
  return VarId(index);
}

void Problem::AddConstraint(LinearConstraint constraint) {
  constraint.Normalize();
  for (const Term& t : constraint.terms) {
    if (t.var.index < 0 || t.var.index >= num_vars()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "constraint references unknown variable");
    }
  }
  constraints_.push_back(std::move(constraint));
}

const OneHotGroup& Problem::AddGroup(std::vector<VarId> members,
                                     std::optional<int> time_tag) {
  if (members.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "one-hot group needs at least two members");
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const VarId v = members[i];
    if (v.index < 0 || v.index >= num_vars()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "one-hot group references unknown variable");
    }
    if (var_group_[v.index] >= 0 ||
        std::find(members.begin(), members.begin() + i, v) !=
            members.begin() + i) {
      throw Error(ErrorCode::kOverlappingGroups,
                  "variable " + names_[v.index] +
                      " belongs to more than one one-hot group");
    }
  }
  const int id = num_groups();
  for (VarId v : members) {
    var_group_[v.index] = id;
    var_prop_[v.index] = num_props();
    prop_to_var_.push_back(v);
    binary_[v.index] = true;
    lower_[v.index] = std::max(lower_[v.index], 0.0);
    upper_[v.index] = std::min(upper_[v.index], 1.0);
  }
  groups_.push_back(OneHotGroup{id, std::move(members), time_tag});
  return groups_.back();
}

void Problem::SetBounds(VarId v, double lower, double upper) {
  lower_[v.index] = lower;
  upper_[v.index] = upper;
}

std::optional<VarId> Problem::FindVariable(std::string_view name) const {
  auto it = name_index_.find(std::string(name));
  if (it == name_index_.end()) return std::nullopt;
  return VarId(it->second);
}

void Problem::SetBinary(VarId v, bool binary) { binary_[v.index] = binary; }

void Problem::SetSynthetic(VarId v, bool synthetic) {
  synthetic_[v.index] = synthetic;
}

std::optional<PropVar> Problem::prop_of(VarId v) const {
  const int p = var_prop_[v.index];
  if (p < 0) return std::nullopt;
  return PropVar(p);
}

std::optional<int> Problem::group_of(VarId v) const {
  const int g = var_group_[v.index];
  if (g < 0) return std::nullopt;
  return g;
}

void Problem::Validate() const {
  for (const LinearConstraint& c : constraints_) {
    for (const Term& t : c.terms) {
      if (t.var.index < 0 || t.var.index >= num_vars()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "constraint references unknown variable");
      }
    }
  }
  int covered = 0;
  for (const OneHotGroup& g : groups_) {
    if (g.members.size() < 2) {
      throw Error(ErrorCode::kInvalidArgument, "one-hot group too small");
    }
    for (VarId v : g.members) {
      if (var_group_[v.index] != g.id) {
        throw Error(ErrorCode::kOverlappingGroups, "inconsistent group map");
      }
      if (lower_[v.index] < 0.0 || upper_[v.index] > 1.0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "one-hot member with bounds outside [0,1]");
      }
      ++covered;
    }
  }
  if (covered != num_props()) {
    throw Error(ErrorCode::kInvalidArgument,
                "propositional map does not cover group members exactly");
  }
  for (int p = 0; p < num_props(); ++p) {
    if (var_prop_[prop_to_var_[p].index] != p) {
      throw Error(ErrorCode::kInvalidArgument, "propositional map not bijective");
    }
  }
}

LinearObjective ModeSequenceToObjective(const ModeSequence& seq,
                                        const Problem& problem) {
  if (seq.choice.size() != static_cast<std::size_t>(problem.num_groups())) {
    throw Error(ErrorCode::kMalformedSequence,
                "mode sequence does not cover every group");
  }
  LinearObjective objective;
  objective.constant = static_cast<double>(problem.num_groups());
  for (int g = 0; g < problem.num_groups(); ++g) {
    const VarId chosen = seq.choice[g];
    if (!chosen.valid() || problem.group_of(chosen) != g) {
      throw Error(ErrorCode::kMalformedSequence,
                  "mode sequence choice is not a member of group " +
                      std::to_string(g));
    }
    objective.terms.push_back(Term{chosen, -1.0});
  }
  return objective;
}

bool GroupSatisfied(const OneHotGroup& group, const Assignment& alpha,
                    double tol) {
  int ones = 0;
  for (VarId v : group.members) {
    const double x = alpha[v];
    if (std::abs(x - 1.0) <= tol) {
      ++ones;
    } else if (std::abs(x) > tol) {
      return false;
    }
  }
  return ones == 1;
}

bool AssignmentSatisfies(const Problem& problem, const Assignment& alpha,
                         double tol) {
  if (alpha.size() != static_cast<std::size_t>(problem.num_vars())) return false;
  for (int j = 0; j < problem.num_vars(); ++j) {
    const double x = alpha.values[j];
    if (!std::isfinite(x)) return false;
    if (x < problem.lower(VarId(j)) - tol || x > problem.upper(VarId(j)) + tol) {
      return false;
    }
  }
  for (const LinearConstraint& c : problem.constraints()) {
    const double lhs = c.Activity(alpha.values);
    switch (c.relation) {
      case Relation::kLe:
      case Relation::kLt:
        if (lhs > c.rhs + tol) return false;
        break;
      case Relation::kEq:
        if (std::abs(lhs - c.rhs) > tol) return false;
        break;
    }
  }
  for (const OneHotGroup& g : problem.groups()) {
    if (!GroupSatisfied(g, alpha, tol)) return false;
  }
  return true;
}

std::vector<Fixing> BranchFixings(const OneHotGroup& group, VarId chosen) {
  std::vector<Fixing> out;
  out.reserve(group.members.size());
  for (VarId v : group.members) out.push_back(Fixing{v, v == chosen});
  return out;
}

}  // namespace ohs
