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

#ifndef SYMPROP_LEX_H_
#define SYMPROP_LEX_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symprop/permutation.h"

namespace symprop {

using BitVector = std::vector<uint8_t>;

// y[i] = x[perm^-1(i)]. Throws DimensionError on length mismatch.
BitVector Apply(const Permutation& perm, const BitVector& x);

enum class LexRelation { kGreater, kEqual, kLess };

struct LexOutcome {
  LexRelation relation = LexRelation::kEqual;
  // First differing position (0-based); absent iff equal.
  std::optional<int> witness;
};

// Compares x and y on positions [0, limit). With limit = n this is the full
// lexicographic order; in the 1-based notation of x ">_k" y, limit = k - 1.
LexOutcome LexCompareUpTo(const BitVector& x, const BitVector& y, int limit);

// Compares x with perm(x) on all positions without materializing perm(x).
LexRelation CompareWithImage(const BitVector& x, const Permutation& perm);

BitVector ParseBits(const std::string& text);  // "10100"
std::string BitsToString(const BitVector& x);

}  // namespace symprop

#endif  // SYMPROP_LEX_H_
