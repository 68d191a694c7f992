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

#include "benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "lp.hpp"
#include "mps.hpp"

namespace ohs {

namespace {

std::string VarName(char kind, int t, int k) {
  return std::string(1, kind) + std::to_string(t) + "_" + std::to_string(k);
}

void CheckShape(const Matrix& M, std::size_t rows, std::size_t cols,
                const char* what) {
  if (M.size() != rows) {
    throw Error(ErrorCode::kGeneration, std::string(what) + " has wrong row count");
  }
  for (const auto& r : M) {
    if (r.size() != cols) {
      throw Error(ErrorCode::kGeneration,
                  std::string(what) + " has wrong column count");
    }
  }
}

void CheckBox(const Box& b, std::size_t dim, const char* what) {
  if (b.lo.size() != dim || b.hi.size() != dim) {
    throw Error(ErrorCode::kGeneration, std::string(what) + " has wrong dimension");
  }
  for (std::size_t k = 0; k < dim; ++k) {
    if (std::isnan(b.lo[k]) || std::isnan(b.hi[k]) || b.lo[k] > b.hi[k]) {
      throw Error(ErrorCode::kGeneration, std::string(what) + " is empty");
    }
  }
}

// Max of sum(coeff * var) over the current variable bounds.
double IntervalMax(const std::vector<Term>& terms, const Problem& p) {
  double m = 0.0;
  for (const Term& t : terms) {
    m += t.coeff > 0 ? t.coeff * p.upper(t.var) : t.coeff * p.lower(t.var);
  }
  return m;
}

// Bounding box of {x : H x <= h} by one LP per coordinate and direction.
Box PolytopeBox(const PwaMode& mode, int n) {
  Problem p;
  std::vector<VarId> x;
  for (int k = 0; k < n; ++k) x.push_back(p.AddVariable(VarName('x', 0, k), -kInf, kInf));
  for (std::size_t r = 0; r < mode.H.size(); ++r) {
    LinearConstraint c;
    for (int k = 0; k < n; ++k) {
      if (mode.H[r][k] != 0.0) c.terms.push_back(Term{x[k], mode.H[r][k]});
    }
    c.rhs = mode.h[r];
    if (c.terms.empty()) {
      if (c.rhs < 0) throw Error(ErrorCode::kGeneration, "empty mode polytope");
      continue;
    }
    p.AddConstraint(std::move(c));
  }
  LpModel lp(p);
  Box box;
  for (int k = 0; k < n; ++k) {
    for (double sign : {1.0, -1.0}) {
      const LpOutcome out = lp.Optimize(LinearObjective{0.0, {{x[k], sign}}});
      if (out.status == LpStatus::kInfeasible) {
        throw Error(ErrorCode::kGeneration, "empty mode polytope");
      }
      if (out.status == LpStatus::kUnbounded) {
        throw Error(ErrorCode::kGeneration,
                    "unbounded mode polytope; no big-M can be derived");
      }
      (sign > 0 ? box.lo : box.hi).push_back(sign * out.optimal_value);
    }
  }
  return box;
}

Box Hull(const Box& a, const Box& b) {
  if (a.lo.empty()) return b;
  Box out = a;
  for (std::size_t k = 0; k < a.lo.size(); ++k) {
    out.lo[k] = std::min(a.lo[k], b.lo[k]);
    out.hi[k] = std::max(a.hi[k], b.hi[k]);
  }
  return out;
}

class Encoder {
 public:
  explicit Encoder(const PwaInstance& inst)
      : inst_(inst), sys_(inst.system), n_(sys_.n), m_(sys_.m) {}

  PwaEncoding Run() {
    sys_.Validate();
    CheckBox(inst_.init, n_, "init box");
    CheckBox(inst_.goal, n_, "goal box");
    Box state;
    Box input;
    for (const PwaMode& mode : sys_.modes) {
      state = Hull(state, PolytopeBox(mode, n_));
      input = Hull(input, mode.input);
    }
    Box last;  // image of the state box under every mode
    for (const PwaMode& mode : sys_.modes) {
      Box img;
      for (int k = 0; k < n_; ++k) {
        double lo = mode.c[k];
        double hi = mode.c[k];
        for (int j = 0; j < n_; ++j) {
          const double a = mode.A[k][j];
          lo += std::min(a * state.lo[j], a * state.hi[j]);
          hi += std::max(a * state.lo[j], a * state.hi[j]);
        }
        for (int j = 0; j < m_; ++j) {
          const double b = mode.B[k][j];
          lo += std::min(b * input.lo[j], b * input.hi[j]);
          hi += std::max(b * input.lo[j], b * input.hi[j]);
        }
        img.lo.push_back(lo);
        img.hi.push_back(hi);
      }
      last = Hull(last, img);
    }

    const int T = sys_.horizon;
    for (int t = 0; t <= T; ++t) {
      const Box& box = t < T ? state : last;
      std::vector<VarId> xs;
      for (int k = 0; k < n_; ++k) {
        xs.push_back(enc_.problem.AddVariable(VarName('x', t, k), box.lo[k], box.hi[k]));
      }
      x_.push_back(xs);
      if (t == T) break;
      std::vector<VarId> us;
      for (int j = 0; j < m_; ++j) {
        us.push_back(enc_.problem.AddVariable(VarName('u', t, j), input.lo[j], input.hi[j]));
      }
      u_.push_back(us);
      std::vector<VarId> bs;
      for (std::size_t i = 0; i < sys_.modes.size(); ++i) {
        bs.push_back(enc_.problem.AddVariable(VarName('b', t, static_cast<int>(i)), 0, 1, true));
      }
      b_.push_back(bs);
    }
    if (sys_.modes.size() >= 2) {
      for (int t = 0; t < T; ++t) enc_.problem.AddGroup(b_[t], t);
    } else {
      for (int t = 0; t < T; ++t) {
        enc_.problem.SetBounds(b_[t][0], 1, 1);
      }
    }

    for (int k = 0; k < n_; ++k) Pin("init", x_[0][k], inst_.init.lo[k], inst_.init.hi[k], k);
    for (int t = 0; t < T; ++t) {
      for (std::size_t i = 0; i < sys_.modes.size(); ++i) EncodeMode(t, static_cast<int>(i));
    }
    for (int k = 0; k < n_; ++k) Pin("goal", x_[T][k], inst_.goal.lo[k], inst_.goal.hi[k], k);
    enc_.problem.Validate();
    return std::move(enc_);
  }

 private:
  void Pin(const std::string& what, VarId v, double lo, double hi, int k) {
    const std::string base = what + "_" + std::to_string(k);
    if (lo == hi) {
      AddRow({{v, 1.0}}, Relation::kEq, lo, base);
      return;
    }
    if (std::isfinite(hi)) AddRow({{v, 1.0}}, Relation::kLe, hi, base + "u");
    if (std::isfinite(lo)) AddRow({{v, -1.0}}, Relation::kLe, -lo, base + "l");
  }

  void AddRow(std::vector<Term> terms, Relation rel, double rhs, std::string name) {
    LinearConstraint c;
    c.terms = std::move(terms);
    c.relation = rel;
    c.rhs = rhs;
    c.name = std::move(name);
    enc_.problem.AddConstraint(std::move(c));
  }

  // body <= rhs whenever b = 1, as body + M b <= rhs + M.
  void AddBigM(std::vector<Term> body, double rhs, VarId b, std::string name) {
    std::erase_if(body, [](const Term& t) { return t.coeff == 0.0; });
    const double big_m = IntervalMax(body, enc_.problem) - rhs;
    if (big_m <= 0.0) return;  // implied by the variable bounds
    if (sys_.modes.size() < 2) {
      AddRow(std::move(body), Relation::kLe, rhs, std::move(name));
      return;
    }
    body.push_back(Term{b, big_m});
    enc_.big_m_rows.push_back(
        BigMRow{static_cast<int>(enc_.problem.constraints().size()), b, big_m});
    AddRow(std::move(body), Relation::kLe, rhs + big_m, std::move(name));
  }

  void EncodeMode(int t, int i) {
    const PwaMode& mode = sys_.modes[i];
    const VarId b = b_[t][i];
    const std::string tag = std::to_string(t) + "_" + std::to_string(i) + "_";
    for (std::size_t r = 0; r < mode.H.size(); ++r) {
      std::vector<Term> body;
      for (int k = 0; k < n_; ++k) body.push_back(Term{x_[t][k], mode.H[r][k]});
      AddBigM(std::move(body), mode.h[r], b, "poly" + tag + std::to_string(r));
    }
    for (int j = 0; j < m_; ++j) {
      AddBigM({{u_[t][j], 1.0}}, mode.input.hi[j], b, "in" + tag + std::to_string(j) + "u");
      AddBigM({{u_[t][j], -1.0}}, -mode.input.lo[j], b, "in" + tag + std::to_string(j) + "l");
    }
    for (int k = 0; k < n_; ++k) {
      std::vector<Term> e{{x_[t + 1][k], 1.0}};
      for (int j = 0; j < n_; ++j) e.push_back(Term{x_[t][j], -mode.A[k][j]});
      for (int j = 0; j < m_; ++j) e.push_back(Term{u_[t][j], -mode.B[k][j]});
      std::vector<Term> neg = e;
      for (Term& term : neg) term.coeff = -term.coeff;
      AddBigM(std::move(e), mode.c[k], b, "dyn" + tag + std::to_string(k) + "p");
      AddBigM(std::move(neg), -mode.c[k], b, "dyn" + tag + std::to_string(k) + "n");
    }
  }

  const PwaInstance& inst_;
  const PwaSystem& sys_;
  const int n_;
  const int m_;
  PwaEncoding enc_;
  std::vector<std::vector<VarId>> x_;
  std::vector<std::vector<VarId>> u_;
  std::vector<std::vector<VarId>> b_;
};

bool Close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

Region ParseRect(std::istringstream& in, int line, bool with_u) {
  Region r;
  if (!(in >> r.xmin >> r.xmax >> r.ymin >> r.ymax)) {
    throw ParseError(line, "expected xmin xmax ymin ymax");
  }
  if (with_u && !(in >> r.u_max)) throw ParseError(line, "expected u_max");
  std::string extra;
  if (in >> extra) throw ParseError(line, "trailing token '" + extra + "'");
  if (!(r.xmin <= r.xmax && r.ymin <= r.ymax)) {
    throw ParseError(line, "empty box");
  }
  if (with_u && !(r.u_max >= 0)) throw ParseError(line, "negative u_max");
  return r;
}

bool InRegion(const Region& r, double x, double y) {
  return r.xmin <= x && x <= r.xmax && r.ymin <= y && y <= r.ymax;
}

double Draw(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Snaps to a multiple of 1/1024 so generated data is exact in binary.
double Snap(double v) { return std::round(v * 1024.0) / 1024.0; }

Matrix Identity(int n) {
  Matrix I(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) I[k][k] = 1.0;
  return I;
}

// H rows for lo <= x <= hi.
void BoxRows(const Box& box, PwaMode& mode) {
  const int n = static_cast<int>(box.lo.size());
  for (int k = 0; k < n; ++k) {
    std::vector<double> up(n, 0.0);
    up[k] = 1.0;
    mode.H.push_back(up);
    mode.h.push_back(box.hi[k]);
    std::vector<double> down(n, 0.0);
    down[k] = -1.0;
    mode.H.push_back(down);
    mode.h.push_back(-box.lo[k]);
  }
}

}  // namespace

bool Box::Contains(const std::vector<double>& x, double tol) const {
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (x[k] < lo[k] - tol || x[k] > hi[k] + tol) return false;
  }
  return true;
}

void PwaSystem::Validate() const {
  if (horizon < 1) throw Error(ErrorCode::kGeneration, "horizon must be at least 1");
  if (n < 1 || m < 0) throw Error(ErrorCode::kGeneration, "bad dimensions");
  if (modes.empty()) throw Error(ErrorCode::kGeneration, "no modes");
  for (const PwaMode& mode : modes) {
    if (mode.H.size() != mode.h.size()) {
      throw Error(ErrorCode::kGeneration, "polytope rows and rhs differ in length");
    }
    CheckShape(mode.H, mode.h.size(), n, "H");
    CheckShape(mode.A, n, n, "A");
    CheckShape(mode.B, n, m, "B");
    if (mode.c.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::kGeneration, "offset has wrong dimension");
    }
    CheckBox(mode.input, m, "input box");
  }
}

PwaEncoding EncodePwa(const PwaInstance& instance) {
  return Encoder(instance).Run();
}

bool ValidateTrajectory(const PwaInstance& instance, const Problem& problem,
                        const Assignment& alpha, double tol) {
  const PwaSystem& sys = instance.system;
  auto value = [&](char kind, int t, int k, double& out) {
    const std::optional<VarId> v = problem.FindVariable(VarName(kind, t, k));
    if (!v || static_cast<std::size_t>(v->index) >= alpha.size()) return false;
    out = alpha[*v];
    return true;
  };
  auto state = [&](int t, std::vector<double>& x) {
    x.assign(sys.n, 0.0);
    for (int k = 0; k < sys.n; ++k) {
      if (!value('x', t, k, x[k])) return false;
    }
    return true;
  };
  std::vector<double> x;
  std::vector<double> next;
  if (!state(0, x) || !instance.init.Contains(x, tol)) return false;
  for (int t = 0; t < sys.horizon; ++t) {
    int chosen = -1;
    for (int i = 0; i < static_cast<int>(sys.modes.size()); ++i) {
      double b = 0.0;
      if (!value('b', t, i, b)) return false;
      if (std::abs(b - 1.0) <= tol) {
        if (chosen >= 0) return false;
        chosen = i;
      } else if (std::abs(b) > tol) {
        return false;
      }
    }
    if (chosen < 0) return false;
    const PwaMode& mode = sys.modes[chosen];
    std::vector<double> u(sys.m);
    for (int j = 0; j < sys.m; ++j) {
      if (!value('u', t, j, u[j])) return false;
    }
    if (!mode.input.Contains(u, tol)) return false;
    for (std::size_t r = 0; r < mode.H.size(); ++r) {
      double lhs = 0.0;
      for (int k = 0; k < sys.n; ++k) lhs += mode.H[r][k] * x[k];
      if (lhs > mode.h[r] + tol * std::max(1.0, std::abs(mode.h[r]))) return false;
    }
    if (!state(t + 1, next)) return false;
    for (int k = 0; k < sys.n; ++k) {
      double expected = mode.c[k];
      for (int j = 0; j < sys.n; ++j) expected += mode.A[k][j] * x[j];
      for (int j = 0; j < sys.m; ++j) expected += mode.B[k][j] * u[j];
      if (!Close(next[k], expected, tol)) return false;
    }
    x.swap(next);
  }
  return instance.goal.Contains(x, tol);
}

bool BigMRowsSlack(const PwaEncoding& encoding, const Assignment& alpha,
                   double tol) {
  for (const BigMRow& r : encoding.big_m_rows) {
    if (alpha[r.binary] > 0.5) continue;
    const LinearConstraint& c = encoding.problem.constraints()[r.row];
    double body = 0.0;
    for (const Term& t : c.terms) {
      if (t.var != r.binary) body += t.coeff * alpha[t.var];
    }
    if (body > c.rhs + tol * std::max(1.0, std::abs(c.rhs))) return false;
  }
  return true;
}

SteppingStoneMap ParseSteppingStoneMap(std::istream& in) {
  SteppingStoneMap map;
  bool have_start = false;
  bool have_goal = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    std::string head;
    if (!(ss >> head)) continue;
    if (head == "start") {
      map.start = ParseRect(ss, line, false);
      have_start = true;
    } else if (head == "goal") {
      map.goal = ParseRect(ss, line, false);
      have_goal = true;
    } else if (head == "horizon") {
      if (!(ss >> map.horizon) || map.horizon < 1) {
        throw ParseError(line, "horizon must be a positive integer");
      }
    } else if (head == "vmax") {
      if (!(ss >> map.v_max) || !(map.v_max >= 0)) {
        throw ParseError(line, "vmax must be non-negative");
      }
    } else {
      std::istringstream all(raw);
      map.regions.push_back(ParseRect(all, line, true));
    }
  }
  if (map.regions.empty()) throw ParseError(line, "map has no regions");
  if (!have_start) throw ParseError(line, "map has no start box");
  if (!have_goal) throw ParseError(line, "map has no goal box");
  return map;
}

SteppingStoneMap ReadSteppingStoneMap(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return ParseSteppingStoneMap(in);
}

void WriteSteppingStoneMap(const SteppingStoneMap& map, std::ostream& out) {
  auto rect = [&](const Region& r) {
    out << FormatDouble(r.xmin) << ' ' << FormatDouble(r.xmax) << ' '
        << FormatDouble(r.ymin) << ' ' << FormatDouble(r.ymax);
  };
  out << "horizon " << map.horizon << "\nvmax " << FormatDouble(map.v_max)
      << "\nstart ";
  rect(map.start);
  out << "\ngoal ";
  rect(map.goal);
  out << '\n';
  for (const Region& r : map.regions) {
    rect(r);
    out << ' ' << FormatDouble(r.u_max) << '\n';
  }
}

SteppingStoneMap ChainMap(int num_regions, int horizon) {
  if (num_regions < 1) throw Error(ErrorCode::kGeneration, "need at least one region");
  SteppingStoneMap map;
  map.horizon = horizon;
  map.v_max = 1.5;
  for (int i = 0; i < num_regions; ++i) {
    const double x0 = 2.0 * i;
    const double y0 = (i % 2 == 0) ? 0.0 : 0.5;
    map.regions.push_back(Region{x0, x0 + 1.5, y0, y0 + 1.5, i % 2 == 0 ? 1.0 : 0.5});
  }
  map.start = Region{0.0, 0.5, 0.5, 1.0, 0.0};
  const Region& last = map.regions.back();
  map.goal = Region{last.xmax - 0.5, last.xmax, last.ymin + 0.5, last.ymin + 1.0, 0.0};
  return map;
}

PwaInstance SteppingStones(const SteppingStoneMap& map, std::uint64_t seed) {
  if (map.regions.empty()) throw Error(ErrorCode::kGeneration, "map has no regions");
  std::mt19937_64 rng(seed);
  const double sx = Snap(Draw(rng, map.start.xmin, map.start.xmax));
  const double sy = Snap(Draw(rng, map.start.ymin, map.start.ymax));
  if (std::none_of(map.regions.begin(), map.regions.end(),
                   [&](const Region& r) { return InRegion(r, sx, sy); })) {
    throw Error(ErrorCode::kGeneration, "start point lies in no region");
  }
  PwaInstance inst;
  inst.family = "stepping-stones";
  PwaSystem& sys = inst.system;
  sys.n = 4;
  sys.m = 2;
  sys.horizon = map.horizon;
  for (const Region& r : map.regions) {
    PwaMode mode;
    BoxRows(Box{{r.xmin, r.ymin, -map.v_max, -map.v_max},
                {r.xmax, r.ymax, map.v_max, map.v_max}},
            mode);
    mode.A = Identity(4);
    mode.A[0][2] = 1.0;
    mode.A[1][3] = 1.0;
    mode.B = {{0.5, 0.0}, {0.0, 0.5}, {1.0, 0.0}, {0.0, 1.0}};
    mode.c = {0.0, 0.0, 0.0, 0.0};
    mode.input = Box{{-r.u_max, -r.u_max}, {r.u_max, r.u_max}};
    sys.modes.push_back(std::move(mode));
  }
  inst.init = Box{{sx, sy, 0.0, 0.0}, {sx, sy, 0.0, 0.0}};
  inst.goal = Box{{map.goal.xmin, map.goal.ymin, 0.0, 0.0},
                  {map.goal.xmax, map.goal.ymax, 0.0, 0.0}};
  return inst;
}

PwaInstance ToyContact(int horizon, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PwaInstance inst;
  inst.family = "toy-contact";
  PwaSystem& sys = inst.system;
  sys.n = 2;
  sys.m = 1;
  sys.horizon = horizon;
  const Box input{{-0.5}, {0.5}};
  PwaMode free_mode;
  BoxRows(Box{{0.0, -1.0}, {4.0, 1.0}}, free_mode);
  free_mode.A = {{1.0, 1.0}, {0.0, 1.0}};
  free_mode.B = {{0.5}, {1.0}};
  free_mode.c = {0.0, 0.0};
  free_mode.input = input;
  PwaMode stick;
  BoxRows(Box{{-0.5, -0.25}, {0.0, 0.25}}, stick);
  stick.A = {{0.5, 0.0}, {0.0, 0.0}};
  stick.B = {{0.25}, {0.0}};
  stick.c = {0.0, 0.0};
  stick.input = input;
  PwaMode slide;
  BoxRows(Box{{-0.5, -1.0}, {0.0, 1.0}}, slide);
  slide.A = {{1.0, 0.5}, {-1.0, -0.5}};
  slide.B = {{0.25}, {0.5}};
  slide.c = {0.0, 0.0};
  slide.input = input;
  sys.modes = {free_mode, stick, slide};
  const double p0 = Snap(Draw(rng, 0.5, 3.5));
  const double v0 = Snap(Draw(rng, -0.5, 0.5));
  inst.init = Box{{p0, v0}, {p0, v0}};
  inst.goal = Box{{-0.25, 0.0}, {0.0, 0.0}};
  return inst;
}

PwaInstance GenericPwa(const GenericPwaParams& params, std::uint64_t seed) {
  if (params.n < 1 || params.m < 0 || params.modes < 1 || params.horizon < 1) {
    throw Error(ErrorCode::kGeneration, "invalid generic-pwa parameters");
  }
  std::mt19937_64 rng(seed);
  PwaInstance inst;
  inst.family = "generic-pwa";
  PwaSystem& sys = inst.system;
  sys.n = params.n;
  sys.m = params.m;
  sys.horizon = params.horizon;
  const double width = 10.0 / params.modes;
  for (int i = 0; i < params.modes; ++i) {
    PwaMode mode;
    Box region{std::vector<double>(params.n, -5.0), std::vector<double>(params.n, 5.0)};
    region.lo[0] = -5.0 + width * i;
    region.hi[0] = -5.0 + width * (i + 1);
    BoxRows(region, mode);
    mode.A = Identity(params.n);
    for (auto& row : mode.A) {
      for (double& a : row) a = Snap(a + Draw(rng, -0.3, 0.3));
    }
    mode.B.assign(params.n, std::vector<double>(params.m));
    for (auto& row : mode.B) {
      for (double& b : row) b = Snap(Draw(rng, -1.0, 1.0));
    }
    for (int k = 0; k < params.n; ++k) mode.c.push_back(Snap(Draw(rng, -1.0, 1.0)));
    mode.input = Box{std::vector<double>(params.m, -1.0), std::vector<double>(params.m, 1.0)};
    sys.modes.push_back(std::move(mode));
  }
  Box init;
  Box goal;
  for (int k = 0; k < params.n; ++k) {
    const double x0 = Snap(Draw(rng, -4.5, 4.5));
    init.lo.push_back(x0);
    init.hi.push_back(x0);
    const double g = Snap(Draw(rng, -4.0, 2.0));
    goal.lo.push_back(g);
    goal.hi.push_back(g + 2.0);
  }
  inst.init = init;
  inst.goal = goal;
  return inst;
}

void WritePwaJson(const PwaInstance& instance, std::ostream& out) {
  using nlohmann::json;
  auto box = [](const Box& b) { return json{{"lo", b.lo}, {"hi", b.hi}}; };
  json modes = json::array();
  for (const PwaMode& m : instance.system.modes) {
    modes.push_back(json{{"H", m.H}, {"h", m.h}, {"A", m.A}, {"B", m.B},
                         {"c", m.c}, {"input", box(m.input)}});
  }
  json j{{"family", instance.family},
         {"n", instance.system.n},
         {"m", instance.system.m},
         {"horizon", instance.system.horizon},
         {"modes", modes},
         {"init", box(instance.init)},
         {"goal", box(instance.goal)}};
  out << j.dump(1) << '\n';
}

PwaInstance ReadPwaJson(std::istream& in) {
  using nlohmann::json;
  try {
    const json j = json::parse(in);
    auto box = [](const json& b) {
      return Box{b.at("lo").get<std::vector<double>>(),
                 b.at("hi").get<std::vector<double>>()};
    };
    PwaInstance inst;
    inst.family = j.value("family", "");
    inst.system.n = j.at("n").get<int>();
    inst.system.m = j.at("m").get<int>();
    inst.system.horizon = j.at("horizon").get<int>();
    for (const json& m : j.at("modes")) {
      PwaMode mode;
      mode.H = m.at("H").get<Matrix>();
      mode.h = m.at("h").get<std::vector<double>>();
      mode.A = m.at("A").get<Matrix>();
      mode.B = m.at("B").get<Matrix>();
      mode.c = m.at("c").get<std::vector<double>>();
      mode.input = box(m.at("input"));
      inst.system.modes.push_back(std::move(mode));
    }
    inst.init = box(j.at("init"));
    inst.goal = box(j.at("goal"));
    inst.system.Validate();
    return inst;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad PWA sidecar: ") + e.what());
  }
}

}  // namespace ohs
