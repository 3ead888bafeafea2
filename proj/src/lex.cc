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

#include "symprop/lex.h"

#include <algorithm>

#include "symprop/errors.h"

namespace symprop {

BitVector Apply(const Permutation& perm, const BitVector& x) {
  if (static_cast<int>(x.size()) != perm.size()) {
    throw DimensionError("apply: vector length " + std::to_string(x.size()) +
                         " differs from permutation size " +
                         std::to_string(perm.size()));
  }
  BitVector y(x.size());
  for (int i = 0; i < perm.size(); ++i) y[i] = x[perm.Preimage(i)];
  return y;
}

LexOutcome LexCompareUpTo(const BitVector& x, const BitVector& y, int limit) {
  const int end =
      std::min<int>(limit, static_cast<int>(std::min(x.size(), y.size())));
  for (int i = 0; i < end; ++i) {
    if (x[i] != y[i]) {
      return {x[i] > y[i] ? LexRelation::kGreater : LexRelation::kLess, i};
    }
  }
  return {LexRelation::kEqual, std::nullopt};
}

LexRelation CompareWithImage(const BitVector& x, const Permutation& perm) {
  for (int i = 0; i < perm.size(); ++i) {
    const uint8_t image = x[perm.Preimage(i)];
    if (x[i] != image) {
      return x[i] > image ? LexRelation::kGreater : LexRelation::kLess;
    }
  }
  return LexRelation::kEqual;
}

BitVector ParseBits(const std::string& text) {
  BitVector x;
  for (char c : text) {
    if (c == '0' || c == '1') x.push_back(static_cast<uint8_t>(c - '0'));
  }
  return x;
}

std::string BitsToString(const BitVector& x) {
  std::string out;
  for (uint8_t bit : x) out.push_back(bit ? '1' : '0');
  return out;
}

}  // namespace symprop
