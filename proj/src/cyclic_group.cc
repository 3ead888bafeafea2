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
#include <numeric>

#include "symprop/cyclic.h"
#include "symprop/errors.h"

namespace symprop {

CyclicSubgroup::CyclicSubgroup(Permutation generator,
                               std::vector<int64_t> exponents)
    : generator_(std::move(generator)),
      order_(generator_.Order()),
      exponents_(std::move(exponents)) {
  std::sort(exponents_.begin(), exponents_.end());
  exponents_.erase(std::unique(exponents_.begin(), exponents_.end()),
                   exponents_.end());
  for (int64_t e : exponents_) {
    if (e < 1 || static_cast<uint64_t>(e) >= order_) {
      throw ValidationError("exponent " + std::to_string(e) +
                            " outside [1, " + std::to_string(order_ - 1) +
                            "]");
    }
  }
}

CyclicSubgroup CyclicSubgroup::Generated(Permutation generator,
                                         int64_t max_elements) {
  const uint64_t order = generator.Order();
  if (order - 1 > static_cast<uint64_t>(std::max<int64_t>(max_elements, 0))) {
    throw CapacityError("cyclic group of order " + std::to_string(order) +
                        " exceeds the element cap " +
                        std::to_string(max_elements));
  }
  std::vector<int64_t> exponents(order - 1);
  std::iota(exponents.begin(), exponents.end(), int64_t{1});
  return CyclicSubgroup(std::move(generator), std::move(exponents));
}

std::vector<Permutation> CyclicSubgroup::Elements() const {
  std::vector<Permutation> out;
  out.reserve(exponents_.size());
  for (int64_t e : exponents_) out.push_back(generator_.Power(e));
  return out;
}

bool CyclicSubgroup::IsClosed() const {
  const int64_t order = static_cast<int64_t>(order_);
  int64_t step = order;
  for (int64_t e : exponents_) step = std::gcd(step, e);
  if (static_cast<int64_t>(exponents_.size()) != order / step - 1) {
    return false;
  }
  for (size_t k = 0; k < exponents_.size(); ++k) {
    if (exponents_[k] != static_cast<int64_t>(k + 1) * step) return false;
  }
  return true;
}

CyclicSubgroup StabPointwise(const CyclicSubgroup& group,
                             const std::vector<int>& indices) {
  std::vector<int64_t> kept;
  for (int64_t e : group.exponents()) {
    const Permutation g = group.Element(e);
    if (std::all_of(indices.begin(), indices.end(),
                    [&](int i) { return g(i) == i; })) {
      kept.push_back(e);
    }
  }
  return CyclicSubgroup(group.generator(), std::move(kept));
}

CyclicSubgroup StabSetwisePair(const CyclicSubgroup& group,
                               const std::vector<int>& a,
                               const std::vector<int>& b) {
  std::vector<char> in_a(group.n(), 0);
  std::vector<char> in_b(group.n(), 0);
  for (int i : a) in_a[i] = 1;
  for (int i : b) in_b[i] = 1;
  std::vector<int64_t> kept;
  for (int64_t e : group.exponents()) {
    const Permutation g = group.Element(e);
    const bool keeps_a =
        std::all_of(a.begin(), a.end(), [&](int i) { return in_a[g(i)]; });
    const bool keeps_b =
        std::all_of(b.begin(), b.end(), [&](int i) { return in_b[g(i)]; });
    if (keeps_a && keeps_b) kept.push_back(e);
  }
  return CyclicSubgroup(group.generator(), std::move(kept));
}

}  // namespace symprop
