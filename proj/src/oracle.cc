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

#include "symprop/oracle.h"

#include <omp.h>

#include <algorithm>
#include <cstdint>

#include "symprop/errors.h"

namespace symprop {
namespace {

std::vector<int> CheckedUnfixed(const std::vector<Permutation>& perms,
                                const FixState& fixings, int cap) {
  for (const Permutation& p : perms) {
    if (p.size() != fixings.size()) {
      throw DimensionError("permutation size differs from fixing size");
    }
  }
  std::vector<int> unfixed = fixings.Unfixed();
  if (static_cast<int>(unfixed.size()) > cap) {
    throw CapacityError(std::to_string(unfixed.size()) +
                        " unfixed entries exceed the oracle cap of " +
                        std::to_string(cap));
  }
  return unfixed;
}

BitVector BaseVector(const FixState& fixings) {
  BitVector x(fixings.size(), 0);
  for (int i = 0; i < fixings.size(); ++i) x[i] = fixings.Is(i, 1) ? 1 : 0;
  return x;
}

bool Satisfies(const BitVector& x, const std::vector<Permutation>& perms) {
  for (const Permutation& p : perms) {
    if (CompareWithImage(x, p) == LexRelation::kLess) return false;
  }
  return true;
}

// Visits Gray codes with index in [lo, hi): x is set to the code of lo and
// then flipped one bit per step.
template <typename Visit>
void VisitGrayRange(BitVector& x, const std::vector<int>& unfixed,
                    uint64_t lo, uint64_t hi, Visit&& visit) {
  const uint64_t start = lo ^ (lo >> 1);
  for (size_t k = 0; k < unfixed.size(); ++k) {
    x[unfixed[k]] = static_cast<uint8_t>((start >> k) & 1);
  }
  for (uint64_t g = lo; g < hi; ++g) {
    if (g > lo) {
      const int bit = __builtin_ctzll(g);
      x[unfixed[bit]] ^= 1;
    }
    visit(x);
  }
}

struct Tally {
  explicit Tally(int n) : seen0(n, 0), seen1(n, 0) {}
  void Add(const BitVector& x) {
    any = true;
    for (size_t i = 0; i < x.size(); ++i) (x[i] ? seen1 : seen0)[i] = 1;
  }
  void Merge(const Tally& other) {
    any = any || other.any;
    for (size_t i = 0; i < seen0.size(); ++i) {
      seen0[i] |= other.seen0[i];
      seen1[i] |= other.seen1[i];
    }
  }
  bool any = false;
  std::vector<uint8_t> seen0;
  std::vector<uint8_t> seen1;
};

PropagationResult FromTally(const Tally& tally, const FixState& fixings) {
  if (!tally.any) return PropagationResult::Infeasible();
  FixState out = fixings;
  for (int i = 0; i < fixings.size(); ++i) {
    if (out.IsFixed(i)) continue;
    if (!tally.seen1[i]) out.Fix(i, 0);
    if (!tally.seen0[i]) out.Fix(i, 1);
  }
  return PropagationResult::Feasible(std::move(out));
}

}  // namespace

EnumeratedSet EnumerateFeasible(const std::vector<Permutation>& perms,
                                const FixState& fixings, int cap) {
  const std::vector<int> unfixed = CheckedUnfixed(perms, fixings, cap);
  EnumeratedSet out;
  out.n = fixings.size();
  BitVector x = BaseVector(fixings);
  VisitGrayRange(x, unfixed, 0, uint64_t{1} << unfixed.size(),
                 [&](const BitVector& v) {
                   if (Satisfies(v, perms)) out.vectors.push_back(v);
                 });
  std::sort(out.vectors.begin(), out.vectors.end());
  return out;
}

PropagationResult CompleteFixingsOracle(const std::vector<Permutation>& perms,
                                        const FixState& fixings, int cap,
                                        bool parallel) {
  const std::vector<int> unfixed = CheckedUnfixed(perms, fixings, cap);
  const uint64_t total = uint64_t{1} << unfixed.size();
  const BitVector base = BaseVector(fixings);
  Tally tally(fixings.size());
  if (!parallel || total < 4096) {
    BitVector x = base;
    VisitGrayRange(x, unfixed, 0, total, [&](const BitVector& v) {
      if (Satisfies(v, perms)) tally.Add(v);
    });
    return FromTally(tally, fixings);
  }
  const int64_t chunks = 256;
  const uint64_t width = (total + chunks - 1) / chunks;
#pragma omp parallel
  {
    Tally local(fixings.size());
    BitVector x = base;
#pragma omp for schedule(dynamic)
    for (int64_t c = 0; c < chunks; ++c) {
      const uint64_t lo = static_cast<uint64_t>(c) * width;
      const uint64_t hi = std::min(total, lo + width);
      if (lo >= hi) continue;
      VisitGrayRange(x, unfixed, lo, hi, [&](const BitVector& v) {
        if (Satisfies(v, perms)) local.Add(v);
      });
    }
#pragma omp critical
    tally.Merge(local);
  }
  return FromTally(tally, fixings);
}

PropagationResult PerPermFixpointOracle(const std::vector<Permutation>& perms,
                                        const FixState& fixings, int cap) {
  FixState current = fixings;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Permutation& p : perms) {
      PropagationResult r = CompleteFixingsOracle({p}, current, cap);
      if (r.infeasible()) return r;
      if (!(r.fixings == current)) {
        current = std::move(r.fixings);
        changed = true;
      }
    }
  }
  return PropagationResult::Feasible(std::move(current));
}

bool IsLexLeader(const BitVector& x, const std::vector<Permutation>& perms) {
  return Satisfies(x, perms);
}

bool IsLexLeader(const BitVector& x, const CyclicSubgroup& group) {
  for (int64_t e : group.exponents()) {
    if (CompareWithImage(x, group.Element(e)) == LexRelation::kLess) {
      return false;
    }
  }
  return true;
}

}  // namespace symprop
