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

#include "symprop/permutation.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "symprop/errors.h"

namespace symprop {
namespace {

uint64_t SaturatingLcm(uint64_t a, uint64_t b) {
  const uint64_t g = std::gcd(a, b);
  const uint64_t a_red = a / g;
  if (b != 0 && a_red > std::numeric_limits<uint64_t>::max() / b) {
    return std::numeric_limits<uint64_t>::max();
  }
  return a_red * b;
}

}  // namespace

CycleForm CycleForm::Parse(std::string_view text) {
  CycleForm form;
  std::vector<int> current;
  bool open = false;
  size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("cycle form '" + std::string(text) + "': " + what +
                     " at offset " + std::to_string(pos));
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
    } else if (c == '(') {
      if (open) fail("nested '('");
      open = true;
      current.clear();
      ++pos;
    } else if (c == ')') {
      if (!open) fail("unmatched ')'");
      open = false;
      if (current.size() == 1) fail("cycle of length 1");
      if (!current.empty()) form.cycles.push_back(current);
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      if (!open) fail("entry outside parentheses");
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc()) fail("bad integer");
      current.push_back(value);
      pos = static_cast<size_t>(ptr - text.data());
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (open) fail("unterminated cycle");
  return form;
}

std::string CycleForm::ToString() const {
  if (cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cycles) {
    out << '(';
    for (size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out << ',';
      out << cycle[k];
    }
    out << ')';
  }
  return out.str();
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  inverse_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int j = image_[i];
    if (j < 0 || j >= n || inverse_[j] != -1) {
      throw ValidationError("image array is not a bijection of [0, " +
                            std::to_string(n) + ")");
    }
    inverse_[j] = i;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::FromCycles(int n, const CycleForm& form) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<char> seen(n, 0);
  for (const auto& cycle : form.cycles) {
    if (cycle.size() < 2) {
      throw ValidationError("cycle of length < 2 in " + form.ToString());
    }
    for (size_t k = 0; k < cycle.size(); ++k) {
      const int entry = cycle[k];
      if (entry < 1 || entry > n) {
        throw ValidationError("entry " + std::to_string(entry) +
                              " outside [1, " + std::to_string(n) + "] in " +
                              form.ToString());
      }
      if (seen[entry - 1]) {
        throw ValidationError("entry " + std::to_string(entry) +
                              " repeated in " + form.ToString());
      }
      seen[entry - 1] = 1;
      image[entry - 1] = cycle[(k + 1) % cycle.size()] - 1;
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::FromCycleString(int n, std::string_view text) {
  return FromCycles(n, CycleForm::Parse(text));
}

Permutation Permutation::Inverse() const {
  Permutation result;
  result.image_ = inverse_;
  result.inverse_ = image_;
  return result;
}

Permutation Permutation::Power(int64_t exponent) const {
  const int n = size();
  std::vector<int> image(n);
  for (const auto& cycle : Cycles()) {
    const int64_t len = static_cast<int64_t>(cycle.size());
    const int64_t shift = ((exponent % len) + len) % len;
    for (int64_t k = 0; k < len; ++k) {
      image[cycle[k]] = cycle[(k + shift) % len];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (image_[i] == i) image[i] = i;
  }
  return Permutation(std::move(image));
}

bool Permutation::IsIdentity() const {
  for (int i = 0; i < size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

std::vector<int> Permutation::Support() const {
  std::vector<int> support;
  for (int i = 0; i < size(); ++i) {
    if (image_[i] != i) support.push_back(i);
  }
  return support;
}

std::vector<std::vector<int>> Permutation::Cycles() const {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(size(), 0);
  for (int start = 0; start < size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[i]; i = image_[i]) {
      seen[i] = 1;
      cycle.push_back(i);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

CycleForm Permutation::ToCycleForm() const {
  CycleForm form;
  for (auto cycle : Cycles()) {
    for (int& entry : cycle) ++entry;
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

uint64_t Permutation::Order() const {
  uint64_t order = 1;
  for (const auto& cycle : Cycles()) {
    order = SaturatingLcm(order, cycle.size());
  }
  return order;
}

Permutation Compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw DimensionError("compose: sizes " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()) + " differ");
  }
  std::vector<int> image(a.size());
  for (int i = 0; i < a.size(); ++i) image[i] = a(b(i));
  return Permutation(std::move(image));
}

std::vector<Permutation> GroupElements(const Permutation& gen,
                                       int64_t max_count, int64_t max_weight) {
  std::vector<Permutation> elements;
  const int64_t support = static_cast<int64_t>(gen.Support().size());
  if (support == 0) return elements;
  const uint64_t order = gen.Order();
  int64_t k = std::min<uint64_t>(
      order - 1, static_cast<uint64_t>(std::numeric_limits<int64_t>::max()));
  k = std::min(k, std::max<int64_t>(max_count, 0));
  k = std::min(k, std::max<int64_t>(max_weight, 0) / support);
  elements.reserve(k);
  Permutation current = gen;
  for (int64_t e = 1; e <= k; ++e) {
    elements.push_back(current);
    if (e < k) current = Compose(gen, current);
  }
  return elements;
}

Permutation Restrict(const Permutation& perm, const std::vector<int>& subset) {
  const int n = perm.size();
  std::vector<char> in_subset(n, 0);
  for (int i : subset) {
    if (i < 0 || i >= n) {
      throw InvalidRestrictionError("restriction index out of range");
    }
    in_subset[i] = 1;
  }
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) {
    if (in_subset[i]) {
      if (!in_subset[perm(i)]) {
        throw InvalidRestrictionError(
            "index set is not invariant under " + perm.ToString());
      }
      image[i] = perm(i);
    } else {
      image[i] = i;
    }
  }
  return Permutation(std::move(image));
}

bool IsMonotone(const std::vector<int>& cycle) {
  if (cycle.size() < 2) return false;
  int descents = 0;
  for (size_t k = 0; k < cycle.size(); ++k) {
    if (cycle[(k + 1) % cycle.size()] < cycle[k]) ++descents;
  }
  return descents == 1;
}

std::optional<SubcycleDecomposition> MonotoneOrderedDecomposition(
    const Permutation& perm) {
  SubcycleDecomposition decomposition;
  for (const auto& cycle : perm.Cycles()) {
    if (!IsMonotone(cycle)) return std::nullopt;
    std::vector<int> block = cycle;
    std::sort(block.begin(), block.end());
    if (!decomposition.blocks.empty() &&
        decomposition.blocks.back().back() > block.front()) {
      return std::nullopt;
    }
    decomposition.blocks.push_back(std::move(block));
  }
  return decomposition;
}

}  // namespace symprop
