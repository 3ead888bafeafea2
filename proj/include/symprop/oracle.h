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

// Exhaustive enumeration over the unfixed entries. Deliberately naive; used
// as ground truth for the propagation algorithms.

#ifndef SYMPROP_ORACLE_H_
#define SYMPROP_ORACLE_H_

#include <vector>

#include "symprop/cyclic.h"
#include "symprop/fix_state.h"
#include "symprop/lex.h"
#include "symprop/permutation.h"

namespace symprop {

inline constexpr int kDefaultOracleCap = 25;

struct EnumeratedSet {
  int n = 0;
  std::vector<BitVector> vectors;  // sorted
};

// All x respecting `fixings` with x >= g(x) for every g in `perms`.
// Throws CapacityError if more than `cap` entries are unfixed.
EnumeratedSet EnumerateFeasible(const std::vector<Permutation>& perms,
                                const FixState& fixings,
                                int cap = kDefaultOracleCap);

// Entries constant over the feasible vectors, or Infeasible if there are
// none. `parallel` splits the enumeration across OpenMP threads.
PropagationResult CompleteFixingsOracle(const std::vector<Permutation>& perms,
                                        const FixState& fixings,
                                        int cap = kDefaultOracleCap,
                                        bool parallel = false);

// Fixpoint of applying the complete fixings of each single permutation in
// turn.
PropagationResult PerPermFixpointOracle(const std::vector<Permutation>& perms,
                                        const FixState& fixings,
                                        int cap = kDefaultOracleCap);

bool IsLexLeader(const BitVector& x, const std::vector<Permutation>& perms);
bool IsLexLeader(const BitVector& x, const CyclicSubgroup& group);

}  // namespace symprop

#endif  // SYMPROP_ORACLE_H_
