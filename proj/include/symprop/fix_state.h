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

#ifndef SYMPROP_FIX_STATE_H_
#define SYMPROP_FIX_STATE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symprop {

// Entry `entry` takes value `value` (0 or 1).
struct Fixing {
  int entry = 0;
  int value = 0;

  Fixing Converse() const { return {entry, 1 - value}; }
  std::string ToString() const;  // "(entry+1,value)"

  friend auto operator<=>(const Fixing&, const Fixing&) = default;
};

// A set of fixings on pairwise distinct entries, kept sorted by entry.
class Conjunction {
 public:
  Conjunction() = default;
  // Throws std::invalid_argument if two fixings share an entry.
  explicit Conjunction(std::vector<Fixing> fixings);

  void Add(Fixing f);
  bool Contains(Fixing f) const;
  bool IsSubsetOf(const Conjunction& other) const;
  const std::vector<Fixing>& fixings() const { return fixings_; }
  int size() const { return static_cast<int>(fixings_.size()); }
  std::string ToString() const;

  friend auto operator<=>(const Conjunction&, const Conjunction&) = default;

 private:
  std::vector<Fixing> fixings_;
};

// The pair of disjoint index sets (I_0, I_1).
class FixState {
 public:
  static constexpr int8_t kUnfixed = -1;

  FixState() = default;
  explicit FixState(int n) : values_(n, kUnfixed) {}

  // Returns nullopt if the sets intersect. Throws std::out_of_range on
  // indices outside [0, n).
  static std::optional<FixState> FromSets(int n, const std::vector<int>& zeros,
                                          const std::vector<int>& ones);

  int size() const { return static_cast<int>(values_.size()); }
  bool IsFixed(int i) const { return values_[i] != kUnfixed; }
  bool IsUnfixed(int i) const { return values_[i] == kUnfixed; }
  // -1 if unfixed.
  int value(int i) const { return values_[i]; }
  bool Is(int i, int b) const { return values_[i] == b; }

  // Sets entry i to b; throws std::logic_error if it is fixed to 1 - b.
  void Fix(int i, int b);
  void Fix(Fixing f) { Fix(f.entry, f.value); }
  void Unfix(int i) { values_[i] = kUnfixed; }

  std::vector<int> Fixed0() const;
  std::vector<int> Fixed1() const;
  std::vector<int> Unfixed() const;
  int NumFixed() const;
  // Every fixing of `this` also holds in `other`.
  bool IsSubsetOf(const FixState& other) const;
  const std::vector<int8_t>& values() const { return values_; }

  // "I0={..} I1={..}" with 1-based indices.
  std::string ToString() const;

  friend bool operator==(const FixState&, const FixState&) = default;

 private:
  std::vector<int8_t> values_;
};

enum class PropagationStatus { kFeasible, kInfeasible };

struct PropagationResult {
  PropagationStatus status = PropagationStatus::kFeasible;
  // Meaningful only when feasible.
  FixState fixings;

  bool feasible() const { return status == PropagationStatus::kFeasible; }
  bool infeasible() const { return status == PropagationStatus::kInfeasible; }

  static PropagationResult Infeasible() {
    return {PropagationStatus::kInfeasible, FixState()};
  }
  static PropagationResult Feasible(FixState fixings) {
    return {PropagationStatus::kFeasible, std::move(fixings)};
  }
};

// Equal status, and equal sets when feasible.
bool SameOutcome(const PropagationResult& a, const PropagationResult& b);
std::string ToString(const PropagationResult& result);

}  // namespace symprop

#endif  // SYMPROP_FIX_STATE_H_
