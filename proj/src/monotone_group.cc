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

#include <algorithm>
#include <stdexcept>

#include "symprop/cyclic.h"
#include "symprop/errors.h"
#include "symprop/propagate_set.h"

namespace symprop {
namespace {

// Sorted support of a single monotone cycle.
std::vector<int> MonotoneSupport(const CyclicSubgroup& group) {
  const auto cycles = group.generator().Cycles();
  if (cycles.size() != 1 || !IsMonotone(cycles[0])) {
    throw UnsupportedGroupError("generator " + group.generator().ToString() +
                                " is not a single monotone cycle");
  }
  if (!group.IsClosed()) {
    throw UnsupportedGroupError("exponent set is not a subgroup");
  }
  std::vector<int> support = cycles[0];
  std::sort(support.begin(), support.end());
  return support;
}

PropagationResult Individually(const std::vector<Permutation>& elements,
                               const FixState& fixings, CyclicStats* stats) {
  if (stats != nullptr) ++stats->feasibility_calls;
  return PropagateSet(elements, fixings);
}

BitVector WitnessOn(const std::vector<int>& support, const FixState& fixings,
                    bool strict) {
  BitVector x(fixings.size(), 0);
  for (int i = 0; i < fixings.size(); ++i) x[i] = fixings.Is(i, 1) ? 1 : 0;
  const int s = static_cast<int>(support.size());
  for (int r = 0; r < s; ++r) {
    if (fixings.IsUnfixed(support[r])) {
      // 1-based rank r + 1 in the second half keeps the entry at 0.
      if (!strict || 2 * (r + 1) <= s) x[support[r]] = 1;
      break;
    }
  }
  return x;
}

}  // namespace

bool GroupFeasibleMonotone(const CyclicSubgroup& group,
                           const FixState& fixings) {
  MonotoneSupport(group);
  return PropagateSet(group.Elements(), fixings).feasible();
}

BitVector FeasibilityWitness(const CyclicSubgroup& group,
                             const FixState& fixings) {
  return WitnessOn(MonotoneSupport(group), fixings, false);
}

BitVector StrictWitness(const CyclicSubgroup& group, const FixState& fixings) {
  return WitnessOn(MonotoneSupport(group), fixings, true);
}

PropagationResult CompleteFixMonotoneGroup(const CyclicSubgroup& group,
                                           const FixState& fixings,
                                           CyclicStats* stats) {
  const std::vector<int> support = MonotoneSupport(group);
  const std::vector<Permutation> elements = group.Elements();
  PropagationResult first = Individually(elements, fixings, stats);
  if (first.infeasible()) return first;
  FixState current = first.fixings;

  // Values known to occur among the feasible vectors.
  std::vector<uint8_t> seen0(fixings.size(), 0);
  std::vector<uint8_t> seen1(fixings.size(), 0);
  auto absorb = [&](const FixState& complete) {
    const BitVector x = WitnessOn(support, complete, false);
    for (int i : support) (x[i] ? seen1 : seen0)[i] = 1;
  };
  absorb(current);

  for (int i : support) {
    if (current.IsFixed(i)) continue;
    if (seen0[i]) {
      if (stats != nullptr) ++stats->peeks_skipped;
    } else {
      FixState trial = current;
      trial.Fix(i, 0);
      PropagationResult r = Individually(elements, trial, stats);
      if (r.infeasible()) {
        current.Fix(i, 1);
        continue;
      }
      absorb(r.fixings);
    }
    if (seen1[i]) {
      if (stats != nullptr) ++stats->peeks_skipped;
    } else {
      FixState trial = current;
      trial.Fix(i, 1);
      PropagationResult r = Individually(elements, trial, stats);
      if (r.infeasible()) {
        current.Fix(i, 0);
        continue;
      }
      absorb(r.fixings);
    }
  }
  return PropagationResult::Feasible(std::move(current));
}

namespace {

class OrderedPropagator {
 public:
  OrderedPropagator(const CyclicSubgroup& group,
                    const SubcycleDecomposition& decomposition,
                    CyclicStats* stats)
      : n_(group.n()), blocks_(decomposition.blocks), stats_(stats) {}

  PropagationResult Run(std::vector<int64_t> exponents, FixState fixings,
                        int start, bool compute_fixings) {
    for (int c = start; c < static_cast<int>(blocks_.size()); ++c) {
      const std::vector<int>& block = blocks_[c];
      const int64_t len = static_cast<int64_t>(block.size());

      std::vector<Permutation> restricted = RestrictedElements(exponents, c);
      if (!restricted.empty()) {
        PropagationResult r = Individually(restricted, fixings, stats_);
        if (r.infeasible()) return r;
        fixings = std::move(r.fixings);
      }

      if (compute_fixings) {
        std::vector<int> open;
        for (int i : block) {
          if (fixings.IsUnfixed(i)) open.push_back(i);
        }
        for (int i : open) {
          FixState zero = fixings;
          zero.Fix(i, 0);
          if (Run(exponents, std::move(zero), c, false).infeasible()) {
            fixings.Fix(i, 1);
            continue;
          }
          FixState one = fixings;
          one.Fix(i, 1);
          if (Run(exponents, std::move(one), c, false).infeasible()) {
            fixings.Fix(i, 0);
          }
        }
      }

      const bool settled = std::all_of(block.begin(), block.end(), [&](int i) {
        return fixings.IsFixed(i);
      });
      std::vector<int64_t> next;
      for (int64_t e : exponents) {
        const int64_t shift = e % len;
        bool keep = shift == 0;
        if (!keep && settled) {
          keep = true;
          for (int64_t p = 0; p < len && keep; ++p) {
            keep = fixings.value(block[p]) ==
                   fixings.value(block[(p + shift) % len]);
          }
        }
        if (keep) next.push_back(e);
      }
      exponents = std::move(next);
    }
    return PropagationResult::Feasible(std::move(fixings));
  }

 private:
  std::vector<Permutation> RestrictedElements(
      const std::vector<int64_t>& exponents, int c) const {
    const std::vector<int>& block = blocks_[c];
    const int64_t len = static_cast<int64_t>(block.size());
    std::vector<char> used(len, 0);
    for (int64_t e : exponents) used[e % len] = 1;
    std::vector<Permutation> out;
    for (int64_t r = 1; r < len; ++r) {
      if (!used[r]) continue;
      std::vector<int> image(n_);
      for (int i = 0; i < n_; ++i) image[i] = i;
      for (int64_t p = 0; p < len; ++p) image[block[p]] = block[(p + r) % len];
      out.emplace_back(std::move(image));
    }
    return out;
  }

  int n_;
  const std::vector<std::vector<int>>& blocks_;
  CyclicStats* stats_;
};

}  // namespace

PropagationResult PropagateOrderedMonotone(const CyclicSubgroup& group,
                                           const FixState& fixings,
                                           int start_block,
                                           bool compute_fixings,
                                           CyclicStats* stats) {
  if (group.n() != fixings.size()) {
    throw DimensionError("group acts on " + std::to_string(group.n()) +
                         " entries, fixings have " +
                         std::to_string(fixings.size()));
  }
  const auto decomposition = MonotoneOrderedDecomposition(group.generator());
  if (!decomposition) {
    throw UnsupportedGroupError("generator " + group.generator().ToString() +
                                " is not monotone and ordered");
  }
  if (!group.IsClosed()) {
    throw UnsupportedGroupError("exponent set is not a subgroup");
  }
  if (start_block < 0 || start_block > decomposition->num_blocks()) {
    throw std::invalid_argument("start block " + std::to_string(start_block) +
                                " outside [0, " +
                                std::to_string(decomposition->num_blocks()) +
                                "]");
  }
  OrderedPropagator propagator(group, *decomposition, stats);
  return propagator.Run(group.exponents(), fixings, start_block,
                        compute_fixings);
}

}  // namespace symprop
