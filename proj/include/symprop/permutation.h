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

// Permutations of {0, ..., n-1}. All indices in this library are 0-based;
// the instance format and the command line translate to 1-based indices.

#ifndef SYMPROP_PERMUTATION_H_
#define SYMPROP_PERMUTATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symprop {

// Disjoint cycles of length >= 2, 1-based, fixed points omitted. This is the
// external (human-facing) view of a permutation.
struct CycleForm {
  std::vector<std::vector<int>> cycles;

  // Parses "(1,2,3)(4,5)". Whitespace is ignored; "()" or "" is the identity.
  static CycleForm Parse(std::string_view text);
  std::string ToString() const;
};

class Permutation {
 public:
  Permutation() = default;
  // `image[i]` is the image of i. Throws ValidationError if not a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation Identity(int n);
  // Throws ValidationError on repeated or out-of-range entries.
  static Permutation FromCycles(int n, const CycleForm& form);
  static Permutation FromCycleString(int n, std::string_view text);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  int Preimage(int i) const { return inverse_[i]; }
  const std::vector<int>& image() const { return image_; }
  const std::vector<int>& inverse_image() const { return inverse_; }

  Permutation Inverse() const;
  Permutation Power(int64_t exponent) const;
  bool IsIdentity() const;
  // Sorted list of moved points.
  std::vector<int> Support() const;
  // 0-based cycles, each starting at its smallest element, sorted by that
  // element.
  std::vector<std::vector<int>> Cycles() const;
  CycleForm ToCycleForm() const;
  std::string ToString() const { return ToCycleForm().ToString(); }

  // Smallest t >= 1 with perm^t = id. Saturates at UINT64_MAX.
  uint64_t Order() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }

 private:
  std::vector<int> image_;
  std::vector<int> inverse_;
};

// compose(a, b)(i) = a(b(i)). Throws DimensionError on size mismatch.
Permutation Compose(const Permutation& a, const Permutation& b);

// Returns gen^1, ..., gen^k where k = min(ord - 1, max_count,
// floor(max_weight / |supp|)).
std::vector<Permutation> GroupElements(const Permutation& gen,
                                       int64_t max_count, int64_t max_weight);

inline constexpr int64_t kDefaultMaxPowers = 10000;
inline constexpr int64_t kDefaultMaxWeight = 5000000;

// Agrees with `perm` on `subset` and is the identity elsewhere. Throws
// InvalidRestrictionError if perm(subset) != subset.
Permutation Restrict(const Permutation& perm, const std::vector<int>& subset);

// A cycle given as a list of entries (any rotation) is monotone if exactly
// one entry is mapped to a smaller one.
bool IsMonotone(const std::vector<int>& cycle);

// Blocks N_1, ..., N_m of a permutation whose cycles are monotone and ordered.
struct SubcycleDecomposition {
  // Each block sorted increasingly; max(blocks[c]) < min(blocks[c + 1]).
  std::vector<std::vector<int>> blocks;

  int num_blocks() const { return static_cast<int>(blocks.size()); }
};

// Returns the decomposition if every cycle of `perm` is monotone and the
// cycles are ordered; fixed points are ignored.
std::optional<SubcycleDecomposition> MonotoneOrderedDecomposition(
    const Permutation& perm);

}  // namespace symprop

#endif  // SYMPROP_PERMUTATION_H_
