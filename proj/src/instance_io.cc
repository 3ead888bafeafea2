// Copyright 2026 The Symprop Authors
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

#include "symprop/instance_io.h"

#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "symprop/errors.h"

namespace symprop {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    if (end > pos) out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::string FormatDouble(double v) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BinaryProgram Run() {
    std::istringstream in{std::string(text_)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      std::string_view line = raw;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = Trim(line);
      if (line.empty()) continue;
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) Fail("expected 'key: value'");
      const std::string key(Trim(line.substr(0, colon)));
      const std::string_view value = Trim(line.substr(colon + 1));
      Dispatch(key, value);
    }
    if (!seen_.count("n")) Fail("missing key 'n'");
    if (bp_.objective.empty()) bp_.objective.assign(bp_.n, 0.0);
    bp_.Validate();
    return std::move(bp_);
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_) + ": " + what);
  }

  void Once(const std::string& key) {
    if (!seen_.insert(key).second) Fail("duplicate key '" + key + "'");
  }

  void NeedN(const std::string& key) {
    if (!seen_.count("n")) Fail("key '" + key + "' before 'n'");
  }

  void Dispatch(const std::string& key, std::string_view value) {
    if (key == "name") {
      Once(key);
      bp_.name = std::string(value);
    } else if (key == "n") {
      Once(key);
      bp_.n = static_cast<int>(Integer(value, "n"));
      if (bp_.n < 0) Fail("n must be non-negative");
      bp_.objective.assign(bp_.n, 0.0);
    } else if (key == "variables") {
      NeedN(key);
      Once(key);
      for (std::string_view t : Tokens(value)) bp_.variable_names.emplace_back(t);
      if (static_cast<int>(bp_.variable_names.size()) != bp_.n) {
        Fail("expected " + std::to_string(bp_.n) + " variable names");
      }
    } else if (key == "objective") {
      NeedN(key);
      Once(key);
      std::set<int> used;
      for (const Term& t : SparseTerms(Tokens(value))) {
        if (!used.insert(t.index).second) {
          Fail("repeated objective index " + std::to_string(t.index + 1));
        }
        bp_.objective[t.index] = t.coefficient;
      }
    } else if (key == "row") {
      NeedN(key);
      ParseRow(value);
    } else if (key == "generator") {
      NeedN(key);
      if (value == "()") {
        bp_.generators.push_back(Permutation::Identity(bp_.n));
      } else {
        try {
          bp_.generators.push_back(Permutation::FromCycleString(bp_.n, value));
        } catch (const ValidationError& e) {
          throw ValidationError("line " + std::to_string(line_) + ": " +
                                e.what());
        } catch (const ParseError& e) {
          Fail(e.what());
        }
      }
    } else {
      Fail("unknown key '" + key + "'");
    }
  }

  void ParseRow(std::string_view value) {
    std::vector<std::string_view> tokens = Tokens(value);
    if (tokens.size() < 2) Fail("row needs a sense and a right-hand side");
    const std::string_view sense = tokens[tokens.size() - 2];
    const double rhs = Number(tokens.back(), "rhs");
    tokens.resize(tokens.size() - 2);
    std::vector<Term> terms = SparseTerms(tokens);
    std::set<int> used;
    for (const Term& t : terms) {
      if (!used.insert(t.index).second) {
        Fail("repeated row index " + std::to_string(t.index + 1));
      }
    }
    if (sense == "<=") {
      bp_.rows.push_back(MakeRow(std::move(terms), RowSense::kLessEqual, rhs));
    } else if (sense == "=") {
      bp_.rows.push_back(MakeRow(std::move(terms), RowSense::kEqual, rhs));
    } else if (sense == ">=") {
      for (Term& t : terms) t.coefficient = -t.coefficient;
      bp_.rows.push_back(MakeRow(std::move(terms), RowSense::kLessEqual, -rhs));
    } else {
      Fail("unknown row sense '" + std::string(sense) + "'");
    }
  }

  std::vector<Term> SparseTerms(const std::vector<std::string_view>& tokens) {
    std::vector<Term> out;
    for (std::string_view tok : tokens) {
      const auto colon = tok.find(':');
      if (colon == std::string_view::npos) {
        Fail("expected index:coefficient, got '" + std::string(tok) + "'");
      }
      const int64_t index = Integer(tok.substr(0, colon), "index");
      if (index < 1 || index > bp_.n) {
        Fail("index " + std::to_string(index) + " outside [1, " +
             std::to_string(bp_.n) + "]");
      }
      out.push_back({static_cast<int>(index - 1),
                     Number(tok.substr(colon + 1), "coefficient")});
    }
    return out;
  }

  int64_t Integer(std::string_view s, const char* what) {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      Fail(std::string("bad ") + what + " '" + std::string(s) + "'");
    }
    return v;
  }

  double Number(std::string_view s, const char* what) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      Fail(std::string("bad ") + what + " '" + std::string(s) + "'");
    }
    return v;
  }

  std::string_view text_;
  int line_ = 0;
  std::set<std::string> seen_;
  BinaryProgram bp_;
};

std::string Terms(const std::vector<Term>& terms) {
  std::string out;
  for (const Term& t : terms) {
    if (!out.empty()) out += ' ';
    out += std::to_string(t.index + 1) + ":" + FormatDouble(t.coefficient);
  }
  return out;
}

}  // namespace

BinaryProgram ParseInstance(std::string_view text) {
  return Parser(text).Run();
}

std::string FormatInstance(const BinaryProgram& bp) {
  bp.Validate();
  if (bp.name.find_first_of("#\n") != std::string::npos) {
    throw ValidationError("instance name contains '#' or a newline");
  }
  for (const std::string& v : bp.variable_names) {
    if (v.empty() || v.find_first_of(" \t\r\n#") != std::string::npos) {
      throw ValidationError("variable name '" + v +
                            "' is empty or contains whitespace or '#'");
    }
  }
  std::string out;
  if (!bp.name.empty()) out += "name: " + bp.name + "\n";
  out += "n: " + std::to_string(bp.n) + "\n";
  if (!bp.variable_names.empty()) {
    out += "variables:";
    for (const std::string& v : bp.variable_names) out += " " + v;
    out += "\n";
  }
  std::vector<Term> objective;
  for (int i = 0; i < bp.n; ++i) {
    if (bp.objective[i] != 0.0) objective.push_back({i, bp.objective[i]});
  }
  out += "objective: " + Terms(objective) + "\n";
  for (const Row& row : bp.rows) {
    out += "row: " + Terms(row.terms);
    if (!row.terms.empty()) out += ' ';
    out += row.sense == RowSense::kEqual ? "= " : "<= ";
    out += FormatDouble(row.rhs) + "\n";
  }
  for (const Permutation& g : bp.generators) {
    out += "generator: " + (g.IsIdentity() ? std::string("()") : g.ToString()) +
           "\n";
  }
  return out;
}

BinaryProgram ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

void WriteInstanceFile(const BinaryProgram& bp, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << FormatInstance(bp);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace symprop
