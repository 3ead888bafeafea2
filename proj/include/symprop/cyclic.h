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

// Complete propagation of x >= g(x) for all g in a cyclic group, for groups
// generated by a monotone cycle or by ordered monotone subcycles, and the
// relabeling heuristics that bring generators into that form.

#ifndef SYMPROP_CYCLIC_H_
#define SYMPROP_CYCLIC_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symprop/fix_state.h"
#include "symprop/lex.h"
#include "symprop/permutation.h"

namespace symprop {

// A subset {g^e : e in exponents} of the cyclic group generated by g, with
// exponents in [1, ord(g) - 1] (the identity is implicit).
class CyclicSubgroup {
 public:
  static constexpr int64_t kDefaultMaxElements = int64_t{1} << 20;

  // Throws ValidationError on exponents outside [1, ord - 1].
  CyclicSubgroup(Permutation generator, std::vector<int64_t> exponents);

  // The whole group <g>. Throws CapacityError if it has more than
  // `max_elements` non-identity elements.
  static CyclicSubgroup Generated(Permutation generator,
                                  int64_t max_elements = kDefaultMaxElements);

  const Permutation& generator() const { return generator_; }
  const std::vector<int64_t>& exponents() const { return exponents_; }
  uint64_t generator_order() const { return order_; }
  int n() const { return generator_.size(); }
  bool trivial() const { return exponents_.empty(); }
  int64_t num_elements() const {
    return static_cast<int64_t>(exponents_.size());
  }

  Permutation Element(int64_t exponent) const {
    return generator_.Power(exponent);
  }
  // Non-identity elements, one per exponent.
  std::vector<Permutation> Elements() const;
  // The exponents together with 0 form a subgroup of Z_ord.
  bool IsClosed() const;

 private:
  Permutation generator_;
  uint64_t order_;
  std::vector<int64_t> exponents_;
};

// Elements fixing every index of `indices`.
CyclicSubgroup StabPointwise(const CyclicSubgroup& group,
                             const std::vector<int>& indices);
// Elements mapping `a` onto itself and `b` onto itself.
CyclicSubgroup StabSetwisePair(const CyclicSubgroup& group,
                               const std::vector<int>& a,
                               const std::vector<int>& b);

struct CyclicStats {
  int64_t feasibility_calls = 0;  // runs of the per-permutation propagation
  int64_t peeks_skipped = 0;      // peeks answered by a cached witness
};

// Complete fixings for x >= g(x), g in `group`, when the generator is a
// single monotone cycle (entries outside its support are left alone).
// Throws UnsupportedGroupError otherwise.
PropagationResult CompleteFixMonotoneGroup(const CyclicSubgroup& group,
                                           const FixState& fixings,
                                           CyclicStats* stats = nullptr);

// Feasibility of the group constraints for fixings that are already complete
// for every individual element.
bool GroupFeasibleMonotone(const CyclicSubgroup& group,
                           const FixState& fixings);

// 1 on the fixed ones and on the first unfixed support entry, 0 elsewhere.
// For complete fixings of a feasible monotone-cycle group this vector
// satisfies every group constraint.
BitVector FeasibilityWitness(const CyclicSubgroup& group,
                             const FixState& fixings);
// Like FeasibilityWitness, but leaves the first unfixed support entry at 0
// when it lies in the second half of the support. Intended to satisfy every
// constraint strictly.
BitVector StrictWitness(const CyclicSubgroup& group, const FixState& fixings);

// Propagation for a generator made of ordered monotone subcycles. Blocks are
// numbered from 0; `start_block` selects where the scan begins. With
// `compute_fixings` the result holds the complete fixings, otherwise only
// the status is meaningful (fixings found on the way are still returned).
// Throws UnsupportedGroupError for other generators and
// std::invalid_argument for a bad start block.
PropagationResult PropagateOrderedMonotone(const CyclicSubgroup& group,
                                           const FixState& fixings,
                                           int start_block,
                                           bool compute_fixings,
                                           CyclicStats* stats = nullptr);

enum class RelabelStrategy { kOriginal, kMax, kMin, kRespect };

std::string ToString(RelabelStrategy strategy);
// Throws std::invalid_argument on unknown names.
RelabelStrategy ParseRelabelStrategy(const std::string& name);

struct RelabelPlan {
  // labeling(i) is the new index of original index i.
  Permutation labeling;
  RelabelStrategy strategy = RelabelStrategy::kOriginal;
  // Input positions of the generators that were relabeled, in processing
  // order.
  std::vector<int> relabeled;
};

RelabelPlan Relabel(const std::vector<Permutation>& generators,
                    RelabelStrategy strategy);

// The generator expressed on relabeled indices: L o g o L^-1.
Permutation Conjugate(const Permutation& perm, const Permutation& labeling);

}  // namespace symprop

#endif  // SYMPROP_CYCLIC_H_
