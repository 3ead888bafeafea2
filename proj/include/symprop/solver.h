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

// Depth-first branch-and-bound for binary programs with symmetry
// propagation at every node.

#ifndef SYMPROP_SOLVER_H_
#define SYMPROP_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symprop/binary_program.h"
#include "symprop/cyclic.h"
#include "symprop/fix_state.h"

namespace symprop {

enum class SymmetryMode { kNoSym, kGen, kGroup, kNoPeek, kPeek };

std::string ToString(SymmetryMode mode);
SymmetryMode ParseSymmetryMode(const std::string& name);
const std::vector<SymmetryMode>& AllSymmetryModes();

// Limits on the number of powers of one generator that get materialized.
struct Safeguard {
  int64_t max_powers = kDefaultMaxPowers;
  int64_t max_weight = kDefaultMaxWeight;  // support size times powers

  // Defaults overridden by SYMPROP_MAX_POWERS / SYMPROP_MAX_WEIGHT.
  static Safeguard FromEnvironment();
};

struct Settings {
  SymmetryMode mode = SymmetryMode::kPeek;
  RelabelStrategy relabel = RelabelStrategy::kOriginal;
  uint64_t seed = 0;
  double time_limit_seconds = 0.0;  // <= 0: unlimited
  Safeguard safeguard;
};

enum class SolveStatus { kOptimal, kInfeasible, kTimeLimit };
std::string ToString(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  bool has_incumbent = false;
  double objective = 0.0;
  BitVector incumbent;  // in the original variable order
  int64_t nodes = 0;
  int64_t symmetry_fixings = 0;
  double seconds = 0.0;
  double symmetry_seconds = 0.0;
  int relabeled_generators = 0;
};

// Symmetry handling for one set of generators under one mode.
class SymmetryPropagator {
 public:
  SymmetryPropagator(const std::vector<Permutation>& generators, int n,
                     SymmetryMode mode, const Safeguard& safeguard);

  // Adds fixings to `fixings`; returns false if the node is infeasible.
  // `added` counts the new fixings.
  bool Propagate(FixState& fixings, int64_t* added = nullptr) const;

  // Generators handled by the ordered monotone algorithm.
  int num_ordered() const;

 private:
  struct Handler {
    std::vector<Permutation> powers;
    std::optional<CyclicSubgroup> ordered;
  };

  bool RunHandler(const Handler& handler, FixState& fixings) const;

  int n_;
  SymmetryMode mode_;
  std::vector<Permutation> all_;  // gen: generators, group: all powers
  std::vector<Handler> handlers_;
};

// Activity-based fixing on the rows; false if a row cannot be satisfied.
bool PropagateRows(const BinaryProgram& bp, FixState& fixings);

// Rows and symmetry to a common fixpoint, without relabeling.
PropagationResult NodePropagate(const BinaryProgram& bp,
                                const FixState& fixings,
                                const Settings& settings);

SolveResult Solve(const BinaryProgram& bp, const Settings& settings);

}  // namespace symprop

#endif  // SYMPROP_SOLVER_H_
