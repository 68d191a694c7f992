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

#include "mps.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "errors.hpp"

namespace ohs {

namespace {

constexpr double kMpsInfinity = 1e30;

enum class Section {
  kNone,
  kName,
  kObjSense,
  kRows,
  kColumns,
  kRhs,
  kRanges,
  kBounds,
  kEndata
};

std::optional<Section> SectionFromName(std::string_view name) {
  static const std::pair<std::string_view, Section> kTable[] = {
      {"NAME", Section::kName},       {"OBJSENSE", Section::kObjSense},
      {"ROWS", Section::kRows},       {"COLUMNS", Section::kColumns},
      {"RHS", Section::kRhs},         {"RANGES", Section::kRanges},
      {"BOUNDS", Section::kBounds},   {"ENDATA", Section::kEndata}};
  for (const auto& [n, s] : kTable) {
    if (n == name) return s;
  }
  return std::nullopt;
}

bool IsUnsupportedSection(std::string_view name) {
  return name == "SOS" || name == "QUADOBJ" || name == "QMATRIX" ||
         name == "QSECTION" || name == "QCMATRIX" || name == "INDICATORS" ||
         name == "OBJSENSE_MAX" || name == "CSECTION";
}

std::vector<std::string> SplitWhitespace(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

std::string Field(std::string_view line, std::size_t begin, std::size_t end) {
  if (begin >= line.size()) return "";
  std::string_view f = line.substr(begin, std::min(end, line.size()) - begin);
  while (!f.empty() && std::isspace(static_cast<unsigned char>(f.front()))) f.remove_prefix(1);
  while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back()))) f.remove_suffix(1);
  return std::string(f);
}

// Fixed-format fields 1..6 (columns 2-3, 5-12, 15-22, 25-36, 40-47, 50-61).
std::vector<std::string> FixedFields(std::string_view line) {
  return {Field(line, 1, 3),   Field(line, 4, 12),  Field(line, 14, 22),
          Field(line, 24, 36), Field(line, 39, 47), Field(line, 49, 61)};
}

std::optional<double> ParseNumber(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool IsNumber(std::string_view s) { return ParseNumber(s).has_value(); }

struct RowRecord {
  std::string name;
  char type = 'L';
  std::vector<Term> terms;
  double rhs = 0.0;
  std::optional<double> range;
};

struct ColumnRecord {
  std::string name;
  bool integer = false;
  double lo = 0.0;
  double hi = kInf;
  bool lo_set = false;
  bool hi_set = false;
};

class MpsReader {
 public:
  MpsReadResult Read(std::istream& in) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (raw.empty() || raw[0] == '*') continue;
      if (SplitWhitespace(raw).empty()) continue;
      if (!std::isspace(static_cast<unsigned char>(raw[0]))) {
        Header(raw);
        if (section_ == Section::kEndata) break;
        continue;
      }
      Data(raw);
    }
    if (section_ != Section::kEndata) {
      throw ParseError(line_no_, "missing ENDATA");
    }
    return Build();
  }

 private:
  [[noreturn]] void Fail(const std::string& msg) const {
    throw ParseError(line_no_, msg);
  }

  double Number(std::string_view s) const {
    const std::optional<double> v = ParseNumber(s);
    if (!v) Fail("bad number '" + std::string(s) + "'");
    return *v;
  }

  void Header(const std::string& raw) {
    const std::vector<std::string> tokens = SplitWhitespace(raw);
    const std::string& name = tokens[0];
    if (IsUnsupportedSection(name)) {
      throw Error(ErrorCode::kUnsupported,
                  "line " + std::to_string(line_no_) + ": section " + name +
                      " is not supported");
    }
    const std::optional<Section> s = SectionFromName(name);
    if (!s) Fail("malformed section header '" + name + "'");
    if (*s <= section_) Fail("section " + name + " out of order");
    section_ = *s;
    if (section_ == Section::kName && tokens.size() > 1) {
      problem_name_ = tokens[1];
    }
    // Free-format variants put RHS/RANGES/BOUNDS set names on data lines
    // only; anything after these headers is ignored.
  }

  void Data(const std::string& raw) {
    switch (section_) {
      case Section::kNone:
        Fail("data record before any section header");
      case Section::kName:
        Fail("unexpected record in NAME section");
      case Section::kObjSense:
        return;  // feasibility only
      case Section::kRows:
        return RowLine(raw);
      case Section::kColumns:
        return ColumnLine(raw);
      case Section::kRhs:
      case Section::kRanges:
        return RhsLine(raw, section_ == Section::kRanges);
      case Section::kBounds:
        return BoundLine(raw);
      case Section::kEndata:
        return;
    }
  }

  void RowLine(const std::string& raw) {
    std::vector<std::string> t = SplitWhitespace(raw);
    if (t.size() != 2) {
      const std::vector<std::string> f = FixedFields(raw);
      t = {f[0], f[1]};
      if (t[0].empty() || t[1].empty()) Fail("malformed ROWS record");
    }
    if (t[0].size() != 1) Fail("unknown row type '" + t[0] + "'");
    const char type = static_cast<char>(std::toupper(t[0][0]));
    if (type != 'N' && type != 'L' && type != 'G' && type != 'E') {
      Fail("unknown row type '" + t[0] + "'");
    }
    if (row_index_.count(t[1])) Fail("duplicate row " + t[1]);
    row_index_[t[1]] = static_cast<int>(rows_.size());
    rows_.push_back(RowRecord{t[1], type, {}, 0.0, std::nullopt});
    if (type == 'N') warnings_.push_back("objective row " + t[1] + " ignored");
  }

  int RowRef(const std::string& name) const {
    auto it = row_index_.find(name);
    if (it == row_index_.end()) Fail("unknown row " + name);
    return it->second;
  }

  bool KnownRow(const std::string& name) const {
    return row_index_.count(name) > 0;
  }

  bool ValidColumnTokens(const std::vector<std::string>& t) const {
    if (t.size() == 3) return KnownRow(t[1]) && IsNumber(t[2]);
    if (t.size() == 5) {
      return KnownRow(t[1]) && IsNumber(t[2]) && KnownRow(t[3]) &&
             IsNumber(t[4]);
    }
    return false;
  }

  void ColumnLine(const std::string& raw) {
    std::vector<std::string> t = SplitWhitespace(raw);
    if (t.size() >= 3 && t[1] == "'MARKER'") {
      if (t[2] == "'INTORG'") {
        in_integer_block_ = true;
      } else if (t[2] == "'INTEND'") {
        in_integer_block_ = false;
      } else {
        Fail("unknown marker " + t[2]);
      }
      return;
    }
    if (!ValidColumnTokens(t)) {
      const std::vector<std::string> f = FixedFields(raw);
      t = {f[1], f[2], f[3]};
      if (!f[4].empty()) {
        t.push_back(f[4]);
        t.push_back(f[5]);
      }
      if (t[0].empty() || !ValidColumnTokens(t)) {
        t = SplitWhitespace(raw);  // report against the free reading
        if (t.size() != 3 && t.size() != 5) Fail("malformed COLUMNS record");
      }
    }
    auto [it, inserted] =
        column_index_.emplace(t[0], static_cast<int>(columns_.size()));
    if (inserted) {
      ColumnRecord c;
      c.name = t[0];
      c.integer = in_integer_block_;
      columns_.push_back(c);
    }
    const int col = it->second;
    for (std::size_t k = 1; k + 1 < t.size(); k += 2) {
      const int row = RowRef(t[k]);
      const double value = Number(t[k + 1]);
      const std::uint64_t key =
          (static_cast<std::uint64_t>(col) << 32) | static_cast<std::uint32_t>(row);
      if (!entries_.insert(key).second) {
        Fail("duplicate entry for column " + t[0] + " in row " + t[k]);
      }
      if (rows_[row].type == 'N') continue;
      rows_[row].terms.push_back(Term{VarId(col), value});
    }
  }

  void RhsLine(const std::string& raw, bool ranges) {
    std::vector<std::string> t = SplitWhitespace(raw);
    auto valid = [this](const std::vector<std::string>& v) {
      // Odd counts carry a leading set name.
      const std::size_t off = v.size() % 2;
      if (v.size() < 2 || v.size() > 5) return false;
      for (std::size_t k = off; k + 1 < v.size(); k += 2) {
        if (!KnownRow(v[k]) || !IsNumber(v[k + 1])) return false;
      }
      return true;
    };
    if (!valid(t)) {
      const std::vector<std::string> f = FixedFields(raw);
      t = {f[1].empty() ? std::string("_") : f[1], f[2], f[3]};
      if (!f[4].empty()) {
        t.push_back(f[4]);
        t.push_back(f[5]);
      }
      if (!valid(t)) {
        t = SplitWhitespace(raw);
        if (t.size() < 2 || t.size() > 5) {
          Fail(ranges ? "malformed RANGES record" : "malformed RHS record");
        }
      }
    }
    for (std::size_t k = t.size() % 2; k + 1 < t.size(); k += 2) {
      const int row = RowRef(t[k]);
      const double value = Number(t[k + 1]);
      if (rows_[row].type == 'N') {
        if (ranges) warnings_.push_back("range on objective row ignored");
        continue;
      }
      if (ranges) {
        rows_[row].range = value;
      } else {
        rows_[row].rhs = value;
      }
    }
  }

  ColumnRecord& ColumnRef(const std::string& name) {
    auto it = column_index_.find(name);
    if (it == column_index_.end()) Fail("unknown column " + name);
    return columns_[it->second];
  }

  void BoundLine(const std::string& raw) {
    std::vector<std::string> t = SplitWhitespace(raw);
    if (t.empty()) return;
    std::string type = t[0];
    for (char& ch : type) ch = static_cast<char>(std::toupper(ch));
    if (type == "SC") {
      throw Error(ErrorCode::kUnsupported,
                  "line " + std::to_string(line_no_) +
                      ": semicontinuous bounds are not supported");
    }
    const bool needs_value =
        type == "UP" || type == "LO" || type == "FX" || type == "LI" ||
        type == "UI";
    const bool no_value =
        type == "FR" || type == "MI" || type == "PL" || type == "BV";
    if (!needs_value && !no_value) Fail("unknown bound type '" + t[0] + "'");

    std::string column;
    std::optional<double> value;
    auto known = [&](const std::string& s) { return column_index_.count(s) > 0; };
    if (needs_value && t.size() == 4 && IsNumber(t[3])) {
      column = t[2];
      value = ParseNumber(t[3]);
    } else if (needs_value && t.size() == 3 && IsNumber(t[2])) {
      column = t[1];
      value = ParseNumber(t[2]);
    } else if (no_value && t.size() == 2) {
      column = t[1];
    } else if (no_value && t.size() == 3) {
      if (known(t[1]) && IsNumber(t[2]) && !known(t[2])) {
        column = t[1];
        value = ParseNumber(t[2]);
      } else {
        column = t[2];
      }
    } else if (no_value && t.size() == 4 && IsNumber(t[3])) {
      column = t[2];
      value = ParseNumber(t[3]);
    }
    if (!known(column)) {
      const std::vector<std::string> f = FixedFields(raw);
      if (known(f[2])) {
        column = f[2];
        value = ParseNumber(f[3]);
        if (needs_value && !value) Fail("malformed BOUNDS record");
      } else if (column.empty()) {
        Fail("malformed BOUNDS record");
      }
    }
    ColumnRecord& c = ColumnRef(column);
    const double v = value.value_or(0.0);
    if (type == "UP" || type == "UI") {
      c.hi = v >= kMpsInfinity ? kInf : v;
      c.hi_set = true;
      if (v < 0 && !c.lo_set && c.lo == 0.0) {
        c.lo = -kInf;
        warnings_.push_back("negative upper bound on " + c.name +
                            " without lower bound: lower set to -inf");
      }
      if (type == "UI") c.integer = true;
    } else if (type == "LO" || type == "LI") {
      c.lo = v <= -kMpsInfinity ? -kInf : v;
      c.lo_set = true;
      if (type == "LI") c.integer = true;
    } else if (type == "FX") {
      c.lo = c.hi = v;
      c.lo_set = c.hi_set = true;
    } else if (type == "FR") {
      c.lo = -kInf;
      c.hi = kInf;
      c.lo_set = c.hi_set = true;
    } else if (type == "MI") {
      c.lo = -kInf;
      c.lo_set = true;
    } else if (type == "PL") {
      c.hi = kInf;
      c.hi_set = true;
    } else if (type == "BV") {
      c.lo = 0.0;
      c.hi = 1.0;
      c.lo_set = c.hi_set = true;
      c.integer = true;
    }
  }

  MpsReadResult Build() {
    MpsReadResult result;
    Problem& p = result.problem;
    p.problem_name = problem_name_;
    for (ColumnRecord& c : columns_) {
      if (c.integer) {
        if (!c.hi_set) c.hi = 1.0;
        const bool ok = (c.lo == 0.0 || c.lo == 1.0) &&
                        (c.hi == 0.0 || c.hi == 1.0) && c.lo <= c.hi;
        if (!ok) {
          throw Error(ErrorCode::kUnsupported,
                      "integer column " + c.name +
                          " is not binary; general integers are not supported");
        }
      }
      p.AddVariable(c.name, c.lo, c.hi, c.integer);
    }
    for (const RowRecord& r : rows_) {
      if (r.type == 'N') continue;
      auto add = [&](const std::string& name, bool negate, Relation rel,
                     double rhs) {
        LinearConstraint lc;
        lc.name = name;
        lc.relation = rel;
        lc.rhs = (negate ? -rhs : rhs) + 0.0;
        lc.terms = r.terms;
        if (negate) {
          for (Term& t : lc.terms) t.coeff = -t.coeff;
        }
        p.AddConstraint(std::move(lc));
      };
      double lo = -kInf;
      double hi = kInf;
      switch (r.type) {
        case 'L':
          hi = r.rhs;
          if (r.range) lo = r.rhs - std::abs(*r.range);
          break;
        case 'G':
          lo = r.rhs;
          if (r.range) hi = r.rhs + std::abs(*r.range);
          break;
        default:  // 'E'
          lo = hi = r.rhs;
          if (r.range && *r.range > 0) hi = r.rhs + *r.range;
          if (r.range && *r.range < 0) lo = r.rhs + *r.range;
          break;
      }
      if (lo == hi) {
        add(r.name, false, Relation::kEq, lo);
        continue;
      }
      const bool both = std::isfinite(lo) && std::isfinite(hi);
      if (std::isfinite(hi)) add(r.name, false, Relation::kLe, hi);
      if (std::isfinite(lo)) add(both ? r.name + "__rng" : r.name, true, Relation::kLe, lo);
    }
    result.warnings = std::move(warnings_);
    return result;
  }

  int line_no_ = 0;
  Section section_ = Section::kNone;
  std::string problem_name_;
  bool in_integer_block_ = false;
  std::vector<RowRecord> rows_;
  std::unordered_map<std::string, int> row_index_;
  std::vector<ColumnRecord> columns_;
  std::unordered_map<std::string, int> column_index_;
  std::unordered_set<std::uint64_t> entries_;
  std::vector<std::string> warnings_;
};

bool AllCoefficients(const LinearConstraint& c, double value) {
  for (const Term& t : c.terms) {
    if (t.coeff != value) return false;
  }
  return true;
}

bool AllBinary(const Problem& p, const LinearConstraint& c) {
  for (const Term& t : c.terms) {
    if (!p.is_binary(t.var)) return false;
  }
  return true;
}

std::vector<int> Support(const LinearConstraint& c) {
  std::vector<int> s;
  for (const Term& t : c.terms) s.push_back(t.var.index);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

MpsReadResult ParseMps(std::istream& in) { return MpsReader().Read(in); }

MpsReadResult ParseMps(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseMps(in);
}

MpsReadResult ReadMpsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return ParseMps(in);
}

Problem ExtractOneHots(Problem problem) {
  const std::vector<LinearConstraint>& rows = problem.constraints();
  struct Candidate {
    std::vector<int> support;
    std::vector<int> rows;
  };
  std::vector<Candidate> candidates;
  std::map<std::vector<int>, int> by_support;
  std::map<std::vector<int>, std::vector<int>> at_most;
  std::map<std::vector<int>, std::vector<int>> at_least;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    const LinearConstraint& c = rows[r];
    if (c.terms.size() < 2 || !AllBinary(problem, c)) continue;
    if (c.relation == Relation::kEq && c.rhs == 1.0 && AllCoefficients(c, 1.0)) {
      std::vector<int> s = Support(c);
      auto [it, inserted] =
          by_support.emplace(s, static_cast<int>(candidates.size()));
      if (inserted) candidates.push_back(Candidate{std::move(s), {}});
      candidates[it->second].rows.push_back(r);
    } else if (c.relation == Relation::kLe && c.rhs == 1.0 &&
               AllCoefficients(c, 1.0)) {
      at_most[Support(c)].push_back(r);
    } else if (c.relation == Relation::kLe && c.rhs == -1.0 &&
               AllCoefficients(c, -1.0)) {
      at_least[Support(c)].push_back(r);
    }
  }
  for (auto& [support, lows] : at_least) {
    auto it = at_most.find(support);
    if (it == at_most.end()) continue;
    const int first = std::min(lows.front(), it->second.front());
    const int second = std::max(lows.front(), it->second.front());
    auto [pos, inserted] =
        by_support.emplace(support, static_cast<int>(candidates.size()));
    if (inserted) candidates.push_back(Candidate{support, {}});
    candidates[pos->second].rows.push_back(first);
    candidates[pos->second].rows.push_back(second);
  }
  for (Candidate& c : candidates) std::sort(c.rows.begin(), c.rows.end());
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return a.rows.front() < b.rows.front();
            });

  std::vector<int> owner(problem.num_vars(), -1);
  for (int k = 0; k < static_cast<int>(candidates.size()); ++k) {
    for (int v : candidates[k].support) {
      if (owner[v] >= 0) {
        throw Error(ErrorCode::kOverlappingGroups,
                    "variable " + problem.name(VarId(v)) +
                        " appears in two candidate one-hot rows");
      }
      owner[v] = k;
    }
  }

  std::vector<char> drop(rows.size(), 0);
  for (const Candidate& c : candidates) {
    for (int r : c.rows) drop[r] = 1;
  }
  std::vector<LinearConstraint> kept;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!drop[r]) kept.push_back(rows[r]);
  }
  problem.mutable_constraints() = std::move(kept);
  for (const Candidate& c : candidates) {
    std::vector<VarId> members;
    for (int v : c.support) members.push_back(VarId(v));
    problem.AddGroup(std::move(members));
  }
  return problem;
}

int CompleteBinaries(Problem& problem) {
  int added = 0;
  const int n = problem.num_vars();
  for (int j = 0; j < n; ++j) {
    const VarId b(j);
    if (!problem.is_binary(b) || problem.group_of(b)) continue;
    std::string name = problem.name(b) + "__neg";
    while (problem.FindVariable(name)) name += "_";
    const VarId neg = problem.AddVariable(
        name, 1.0 - std::min(problem.upper(b), 1.0),
        1.0 - std::max(problem.lower(b), 0.0), true);
    problem.SetSynthetic(neg, true);
    problem.AddGroup({b, neg});
    ++added;
  }
  return added;
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw Error(ErrorCode::kIo, "number formatting failed");
  return std::string(buf, ptr);
}

void WriteMps(const Problem& problem, std::ostream& out) {
  for (int j = 0; j < problem.num_vars(); ++j) {
    const std::string& name = problem.name(VarId(j));
    if (name.find_first_of(" \t") != std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable name with whitespace cannot be written: " + name);
    }
  }
  struct OutRow {
    std::string name;
    char type;
    double rhs;
  };
  std::vector<OutRow> out_rows;
  std::vector<std::vector<std::pair<int, double>>> columns(problem.num_vars());
  std::unordered_set<std::string> used;
  auto unique_name = [&](std::string base, const std::string& fallback) {
    if (base.empty() || base.find_first_of(" \t") != std::string::npos) {
      base = fallback;
    }
    std::string name = base;
    for (int k = 1; !used.insert(name).second; ++k) {
      name = base + "_" + std::to_string(k);
    }
    return name;
  };
  used.insert("OBJ");
  const auto& cons = problem.constraints();
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const LinearConstraint& c = cons[i];
    const int row = static_cast<int>(out_rows.size());
    out_rows.push_back(OutRow{unique_name(c.name, "c" + std::to_string(i)),
                              c.relation == Relation::kEq ? 'E' : 'L', c.rhs});
    for (const Term& t : c.terms) columns[t.var.index].push_back({row, t.coeff});
  }
  for (const OneHotGroup& g : problem.groups()) {
    const int row = static_cast<int>(out_rows.size());
    out_rows.push_back(
        OutRow{unique_name("onehot" + std::to_string(g.id), "g"), 'E', 1.0});
    for (VarId v : g.members) columns[v.index].push_back({row, 1.0});
  }
  bool need_objective = false;
  for (const auto& col : columns) need_objective = need_objective || col.empty();

  out << "NAME " << (problem.problem_name.empty() ? "ohs" : problem.problem_name)
      << "\nROWS\n";
  if (need_objective) out << " N OBJ\n";
  for (const OutRow& r : out_rows) out << ' ' << r.type << ' ' << r.name << '\n';

  out << "COLUMNS\n";
  bool in_marker = false;
  int marker = 0;
  for (int j = 0; j < problem.num_vars(); ++j) {
    const VarId v(j);
    if (problem.is_binary(v) != in_marker) {
      in_marker = !in_marker;
      out << " MARKER" << marker++ << " 'MARKER' "
          << (in_marker ? "'INTORG'" : "'INTEND'") << '\n';
    }
    if (columns[j].empty()) out << ' ' << problem.name(v) << " OBJ 0\n";
    for (const auto& [row, coeff] : columns[j]) {
      out << ' ' << problem.name(v) << ' ' << out_rows[row].name << ' '
          << FormatDouble(coeff) << '\n';
    }
  }
  if (in_marker) out << " MARKER" << marker << " 'MARKER' 'INTEND'\n";

  out << "RHS\n";
  for (const OutRow& r : out_rows) {
    if (r.rhs != 0.0) out << " RHS " << r.name << ' ' << FormatDouble(r.rhs) << '\n';
  }

  out << "BOUNDS\n";
  for (int j = 0; j < problem.num_vars(); ++j) {
    const VarId v(j);
    const std::string& name = problem.name(v);
    const double lo = problem.lower(v);
    const double hi = problem.upper(v);
    if (problem.is_binary(v)) {
      if (lo == 0.0 && hi == 1.0) {
        out << " BV BND " << name << '\n';
      } else {
        out << " LO BND " << name << ' ' << FormatDouble(lo) << '\n';
        out << " UP BND " << name << ' ' << FormatDouble(hi) << '\n';
      }
      continue;
    }
    if (lo == hi) {
      out << " FX BND " << name << ' ' << FormatDouble(lo) << '\n';
      continue;
    }
    if (std::isinf(lo) && std::isinf(hi)) {
      out << " FR BND " << name << '\n';
      continue;
    }
    if (std::isinf(lo)) {
      out << " MI BND " << name << '\n';
    } else if (lo != 0.0 || hi < 0.0) {
      out << " LO BND " << name << ' ' << FormatDouble(lo) << '\n';
    }
    if (!std::isinf(hi)) out << " UP BND " << name << ' ' << FormatDouble(hi) << '\n';
  }
  out << "ENDATA\n";
  if (!out) throw Error(ErrorCode::kIo, "failed writing MPS");
}

void WriteSolution(const Problem& problem, const Assignment& alpha,
                   std::ostream& out) {
  out << "FEASIBLE\n";
  for (int j = 0; j < problem.num_vars(); ++j) {
    const VarId v(j);
    if (problem.is_synthetic(v)) continue;
    out << problem.name(v) << ' ' << FormatDouble(alpha[v] + 0.0) << '\n';
  }
  if (!out) throw Error(ErrorCode::kIo, "failed writing solution");
}

}  // namespace ohs
