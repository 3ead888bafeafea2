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

// Implication trees for a single constraint x >= perm(x).
//
// A tree encodes the inclusion-minimal conjunctions that force x < perm(x)
// (necessary vertices) or x = perm(x) (loose ends) on the lex prefix that has
// been inspected so far. The tree is at most a path that splits once into two
// branches, so every vertex carries a branch tag and the fixing vertices are
// indexed by entry; this gives constant-time lookups of the fixing an entry
// receives on the path to a loose end.

#ifndef SYMPROP_IMPLICATION_TREE_H_
#define SYMPROP_IMPLICATION_TREE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symprop/fix_state.h"
#include "symprop/permutation.h"

namespace symprop {

enum class VertexKind { kRoot, kConditional, kNecessary, kLooseEnd };

struct TreeVertex {
  VertexKind kind = VertexKind::kLooseEnd;
  int entry = -1;  // fixing entry; -1 for root and loose ends
  int value = 0;
  int parent = -1;
  std::array<int, 2> children = {-1, -1};
  int num_children = 0;
  int branch = 0;
  bool alive = false;

  Fixing fixing() const { return {entry, value}; }
  bool is_fixing() const {
    return kind == VertexKind::kConditional || kind == VertexKind::kNecessary;
  }
};

class ImplicationTree {
 public:
  static constexpr int kRoot = 0;

  // Root with a single loose-end child.
  explicit ImplicationTree(int n);

  int num_entries() const { return n_; }
  const TreeVertex& vertex(int v) const { return vertices_[v]; }
  int num_slots() const { return static_cast<int>(vertices_.size()); }
  const std::vector<int>& loose_ends() const { return loose_ends_; }
  // The unique vertex of outdegree two, or -1.
  int junction() const { return junction_; }
  bool infeasible() const { return infeasible_; }
  void MarkInfeasible() { infeasible_ = true; }
  int64_t vertices_created() const { return created_; }

  std::vector<int> Children(int v) const;
  // Live fixing vertices whose fixing has `entry` (at most two).
  std::array<int, 2> VerticesWithEntry(int entry) const {
    return by_entry_[entry];
  }
  // The fixing vertex with `entry` on the rooted path to `target`, or -1.
  int VertexOnPathTo(int entry, int target) const;
  bool IsAncestor(int ancestor, int target) const;
  // Nearest proper ancestor that is a conditional vertex, or -1.
  int FirstConditionalAncestor(int v) const;
  // Fixings on the rooted path to v, optionally only conditional ones.
  Conjunction PathFixings(int v, bool conditional_only) const;

  // Inserts a new fixing vertex between `v` and its parent.
  int InsertAbove(int v, VertexKind kind, Fixing fixing);
  // Replaces loose end `v` by the diamond cond(a) -> necc(~b) -> v and
  // cond(b) -> necc(~a) -> new loose end. Returns the new loose end.
  int SplitIntoDiamond(int v, Fixing first, Fixing second);
  // Removes v and connects its parent to v's children.
  void Splice(int v);
  void RemoveSubtree(int v);
  // Turns conditional u into a necessary vertex with the converse fixing and
  // drops all proper descendants of u.
  void ConvertToNecessary(int u);
  // Applies the merging step at u (a necessary vertex that just replaced a
  // conditional one) if u has a sibling.
  void MergeStep(int u);

  // Canonical nested rendering with 1-based entries, e.g.
  // "root{necc(7,0){cond(2,0){necc(8,0)}}}". Children are sorted by their
  // rendering so the string does not depend on insertion order.
  std::string ToString() const;

  // Structural checks (loose ends are leaves, at most one split of the
  // diamond shape, distinct unfixed entries on rooted paths, consistency of
  // the entry index and branch tags). Returns a description of the first
  // violation.
  std::optional<std::string> CheckStructure(const FixState& fixings) const;

 private:
  int NewVertex(VertexKind kind, int entry, int value, int parent, int branch);
  void Kill(int v);
  void DetachChild(int parent, int child);
  void ReplaceChild(int parent, int old_child, int new_child);
  void RefreshJunction();
  std::string Render(int v) const;

  int n_;
  std::vector<TreeVertex> vertices_;
  std::vector<std::array<int, 2>> by_entry_;
  std::vector<int> loose_ends_;
  int junction_ = -1;
  std::array<int, 2> junction_branches_ = {-1, -1};
  int next_branch_ = 1;
  int64_t created_ = 0;
  bool infeasible_ = false;
};

// Pending fixings (a stack with a membership bitmap) shared by all
// permutations of one propagation run.
class Scheduler {
 public:
  explicit Scheduler(int n) : member_(2 * static_cast<size_t>(n), 0) {}

  // Returns false if the converse fixing is pending as well.
  bool Push(Fixing f);
  bool empty() const { return stack_.empty(); }
  Fixing Pop();
  bool Contains(Fixing f) const { return member_[Key(f)] != 0; }
  bool conflict() const { return conflict_; }

 private:
  static size_t Key(Fixing f) { return 2 * static_cast<size_t>(f.entry) + f.value; }

  std::vector<Fixing> stack_;
  std::vector<uint8_t> member_;
  bool conflict_ = false;
};

// State of one constraint x >= perm(x) during a propagation run.
class PermPropState {
 public:
  explicit PermPropState(const Permutation* perm);

  const Permutation& perm() const { return *perm_; }
  const ImplicationTree& tree() const { return tree_; }
  // 1-based i_gamma: positions [1, lex_index) have been inspected.
  int lex_index() const { return next_ + 1; }
  bool infeasible() const { return tree_.infeasible(); }

  // 0, 1, or -1 (blank) for `entry` on the path to loose end `loose`.
  int HValue(const FixState& fixings, int entry, int loose) const;

  // Raises i_gamma by one and updates the tree. `touched`, if given, gets a
  // mark on every entry whose value was looked up.
  void IndexIncrease(const FixState& fixings, Scheduler& scheduler,
                     std::vector<uint8_t>* touched = nullptr);

  // Updates the tree after `f` was applied (fixings already contain it).
  // Returns true if the state may have changed its completeness status.
  bool ApplyFixing(const FixState& fixings, Fixing f, Scheduler& scheduler);

  // Sufficient completeness conditions. Requires that the root has no
  // necessary child; throws std::logic_error otherwise.
  bool IsComplete(const FixState& fixings) const;
  // The third condition alone (every loose-end path guarded and the index
  // conditions at i_gamma).
  bool GuardedCondition(const FixState& fixings) const;

  // Pushes fixings of necessary children of the root.
  void PushRootFixings(Scheduler& scheduler) const;

  // Conjunctions represented by the tree: conditional fixings on the path to
  // each loose end, and conditional fixings plus the converse fixing for each
  // necessary vertex.
  std::vector<Conjunction> EqConjunctions() const;
  std::vector<Conjunction> InfConjunctions() const;

  // Structural checks plus the entry-set property of loose ends.
  std::optional<std::string> CheckInvariants(const FixState& fixings) const;

 private:
  const Permutation* perm_;
  ImplicationTree tree_;
  int next_ = 0;  // 0-based index of the next position to inspect
};

}  // namespace symprop

#endif  // SYMPROP_IMPLICATION_TREE_H_
