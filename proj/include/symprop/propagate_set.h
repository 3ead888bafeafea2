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

#ifndef SYMPROP_PROPAGATE_SET_H_
#define SYMPROP_PROPAGATE_SET_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symprop/fix_state.h"
#include "symprop/implication_tree.h"
#include "symprop/permutation.h"

namespace symprop {

struct PropagateEvent {
  enum class Kind { kIndexIncrease, kFixing };
  Kind kind = Kind::kIndexIncrease;
  int perm_index = 0;
  Fixing fixing;  // kFixing only
};

using PropagateObserver = std::function<void(
    const PropagateEvent&, const PermPropState&, const FixState&)>;

struct PropagateOptions {
  // Run the structural and entry-set checks after every event.
  bool check_invariants = false;
  PropagateObserver observer;
  // If set (size n), receives a mark for every entry looked up while
  // updating trees.
  std::vector<uint8_t>* touched = nullptr;
};

struct PropagateStats {
  int64_t max_vertices_created = 0;  // per permutation
  int64_t index_events = 0;
  int64_t fixing_events = 0;
  int64_t invariant_violations = 0;
  std::string first_violation;
};

// Complete fixings for each individual constraint x >= perm(x), perm in
// `perms`, iterated to a common fixpoint. Identity permutations and size
// mismatches are rejected with ValidationError / DimensionError.
PropagationResult PropagateSet(const std::vector<Permutation>& perms,
                               const FixState& fixings,
                               const PropagateOptions& options = {},
                               PropagateStats* stats = nullptr);

}  // namespace symprop

#endif  // SYMPROP_PROPAGATE_SET_H_
