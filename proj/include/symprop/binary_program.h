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

#ifndef SYMPROP_BINARY_PROGRAM_H_
#define SYMPROP_BINARY_PROGRAM_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symprop/lex.h"
#include "symprop/permutation.h"

namespace symprop {

enum class RowSense { kLessEqual, kEqual };

struct Term {
  int index;  // 0-based
  double coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Row {
  std::vector<Term> terms;  // sorted by index, no zeros
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
  friend bool operator==(const Row&, const Row&) = default;
};

// max c'x  s.t.  rows, x binary.
struct BinaryProgram {
  std::string name;
  int n = 0;
  std::vector<std::string> variable_names;  // empty or size n
  std::vector<double> objective;            // dense, size n
  std::vector<Row> rows;
  std::vector<Permutation> generators;

  // Throws ValidationError on out-of-range indices, size mismatches or
  // duplicate terms within a row.
  void Validate() const;

  double Objective(const BitVector& x) const;
  bool IsFeasible(const BitVector& x, double tolerance = 1e-9) const;

  // Rows are mapped to rows and the objective is invariant.
  bool IsSymmetry(const Permutation& perm) const;

  // Renames variable i to labeling(i) throughout, including generators.
  BinaryProgram Relabeled(const Permutation& labeling) const;

  friend bool operator==(const BinaryProgram&, const BinaryProgram&) = default;
};

// Sorts terms by index and merges repeated indices.
Row MakeRow(std::vector<Term> terms, RowSense sense, double rhs);

struct EnumerationOptimum {
  bool feasible = false;
  double objective = 0.0;
  BitVector best;
};

// Brute force over all 2^n vectors; n <= 25.
EnumerationOptimum SolveByEnumeration(const BinaryProgram& bp);

}  // namespace symprop

#endif  // SYMPROP_BINARY_PROGRAM_H_
