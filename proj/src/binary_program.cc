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

#include "symprop/binary_program.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <tuple>

#include "symprop/cyclic.h"
#include "symprop/errors.h"

namespace symprop {
namespace {

bool RowLess(const Row& a, const Row& b) {
  auto key = [](const Row& r) {
    return std::make_tuple(static_cast<int>(r.sense), r.rhs, r.terms.size());
  };
  if (key(a) != key(b)) return key(a) < key(b);
  for (size_t k = 0; k < a.terms.size(); ++k) {
    const Term& s = a.terms[k];
    const Term& t = b.terms[k];
    if (s.index != t.index) return s.index < t.index;
    if (s.coefficient != t.coefficient) return s.coefficient < t.coefficient;
  }
  return false;
}

Row MapRow(const Row& row, const Permutation& perm) {
  std::vector<Term> terms;
  terms.reserve(row.terms.size());
  for (const Term& t : row.terms) terms.push_back({perm(t.index), t.coefficient});
  return MakeRow(std::move(terms), row.sense, row.rhs);
}

}  // namespace

Row MakeRow(std::vector<Term> terms, RowSense sense, double rhs) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.index < b.index; });
  std::vector<Term> merged;
  for (const Term& t : terms) {
    if (!merged.empty() && merged.back().index == t.index) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coefficient == 0.0; });
  return Row{std::move(merged), sense, rhs};
}

void BinaryProgram::Validate() const {
  if (n < 0) throw ValidationError("negative variable count");
  if (static_cast<int>(objective.size()) != n) {
    throw ValidationError("objective has " + std::to_string(objective.size()) +
                          " entries, expected " + std::to_string(n));
  }
  if (!variable_names.empty() && static_cast<int>(variable_names.size()) != n) {
    throw ValidationError("variables lists " +
                          std::to_string(variable_names.size()) +
                          " names, expected " + std::to_string(n));
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    int last = -1;
    for (const Term& t : rows[r].terms) {
      if (t.index < 0 || t.index >= n) {
        throw ValidationError("row " + std::to_string(r + 1) +
                              " references variable " +
                              std::to_string(t.index + 1));
      }
      if (t.index <= last) {
        throw ValidationError("row " + std::to_string(r + 1) +
                              " has unsorted or repeated indices");
      }
      last = t.index;
    }
  }
  for (size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != n) {
      throw ValidationError("generator " + std::to_string(g + 1) +
                            " acts on " + std::to_string(generators[g].size()) +
                            " entries, expected " + std::to_string(n));
    }
  }
}

double BinaryProgram::Objective(const BitVector& x) const {
  double value = 0.0;
  for (int i = 0; i < n; ++i) {
    if (x[i]) value += objective[i];
  }
  return value;
}

bool BinaryProgram::IsFeasible(const BitVector& x, double tolerance) const {
  for (const Row& row : rows) {
    double activity = 0.0;
    for (const Term& t : row.terms) {
      if (x[t.index]) activity += t.coefficient;
    }
    if (row.sense == RowSense::kLessEqual) {
      if (activity > row.rhs + tolerance) return false;
    } else if (std::abs(activity - row.rhs) > tolerance) {
      return false;
    }
  }
  return true;
}

bool BinaryProgram::IsSymmetry(const Permutation& perm) const {
  if (perm.size() != n) return false;
  for (int i = 0; i < n; ++i) {
    if (objective[perm(i)] != objective[i]) return false;
  }
  std::vector<Row> original = rows;
  std::vector<Row> mapped;
  mapped.reserve(rows.size());
  for (const Row& row : rows) mapped.push_back(MapRow(row, perm));
  std::sort(original.begin(), original.end(), RowLess);
  std::sort(mapped.begin(), mapped.end(), RowLess);
  return original == mapped;
}

BinaryProgram BinaryProgram::Relabeled(const Permutation& labeling) const {
  if (labeling.size() != n) throw DimensionError("labeling size differs");
  BinaryProgram out;
  out.name = name;
  out.n = n;
  out.objective.assign(n, 0.0);
  for (int i = 0; i < n; ++i) out.objective[labeling(i)] = objective[i];
  if (!variable_names.empty()) {
    out.variable_names.assign(n, "");
    for (int i = 0; i < n; ++i) {
      out.variable_names[labeling(i)] = variable_names[i];
    }
  }
  out.rows.reserve(rows.size());
  for (const Row& row : rows) out.rows.push_back(MapRow(row, labeling));
  for (const Permutation& g : generators) {
    out.generators.push_back(Conjugate(g, labeling));
  }
  return out;
}

EnumerationOptimum SolveByEnumeration(const BinaryProgram& bp) {
  if (bp.n > 25) throw CapacityError("enumeration limited to 25 variables");
  EnumerationOptimum out;
  BitVector x(bp.n, 0);
  const uint64_t total = uint64_t{1} << bp.n;
  for (uint64_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < bp.n; ++i) x[i] = static_cast<uint8_t>((mask >> i) & 1);
    if (!bp.IsFeasible(x)) continue;
    const double value = bp.Objective(x);
    if (!out.feasible || value > out.objective) {
      out.feasible = true;
      out.objective = value;
      out.best = x;
    }
  }
  return out;
}

}  // namespace symprop
