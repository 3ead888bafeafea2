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

#include "symprop/implication_tree.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace symprop {
namespace {

constexpr int kBlank = -1;

}  // namespace

// ---------------------------------------------------------------------------
// ImplicationTree

ImplicationTree::ImplicationTree(int n) : n_(n), by_entry_(n, {-1, -1}) {
  vertices_.reserve(8);
  NewVertex(VertexKind::kRoot, -1, 0, -1, 0);
  const int loose = NewVertex(VertexKind::kLooseEnd, -1, 0, kRoot, 0);
  vertices_[kRoot].children[0] = loose;
  vertices_[kRoot].num_children = 1;
}

int ImplicationTree::NewVertex(VertexKind kind, int entry, int value,
                               int parent, int branch) {
  TreeVertex v;
  v.kind = kind;
  v.entry = entry;
  v.value = value;
  v.parent = parent;
  v.branch = branch;
  v.alive = true;
  const int id = static_cast<int>(vertices_.size());
  vertices_.push_back(v);
  ++created_;
  if (kind == VertexKind::kLooseEnd) loose_ends_.push_back(id);
  if (entry >= 0) {
    auto& slots = by_entry_[entry];
    if (slots[0] == -1) {
      slots[0] = id;
    } else if (slots[1] == -1) {
      slots[1] = id;
    } else {
      throw std::logic_error("more than two tree vertices on entry " +
                             std::to_string(entry + 1));
    }
  }
  return id;
}

void ImplicationTree::Kill(int v) {
  TreeVertex& vx = vertices_[v];
  if (!vx.alive) return;
  vx.alive = false;
  if (vx.entry >= 0) {
    auto& slots = by_entry_[vx.entry];
    if (slots[0] == v) slots[0] = -1;
    if (slots[1] == v) slots[1] = -1;
  }
  if (vx.kind == VertexKind::kLooseEnd) {
    loose_ends_.erase(std::remove(loose_ends_.begin(), loose_ends_.end(), v),
                      loose_ends_.end());
  }
  if (junction_ == v) junction_ = -1;
}

void ImplicationTree::DetachChild(int parent, int child) {
  TreeVertex& p = vertices_[parent];
  if (p.children[0] == child) {
    p.children[0] = p.children[1];
  } else if (p.children[1] != child) {
    throw std::logic_error("vertex is not a child of its parent");
  }
  p.children[1] = -1;
  --p.num_children;
}

void ImplicationTree::ReplaceChild(int parent, int old_child, int new_child) {
  TreeVertex& p = vertices_[parent];
  for (int k = 0; k < p.num_children; ++k) {
    if (p.children[k] == old_child) {
      p.children[k] = new_child;
      vertices_[new_child].parent = parent;
      return;
    }
  }
  throw std::logic_error("vertex is not a child of its parent");
}

void ImplicationTree::RefreshJunction() {
  if (junction_ == -1) return;
  const TreeVertex& j = vertices_[junction_];
  if (!j.alive || j.num_children < 2) junction_ = -1;
}

std::vector<int> ImplicationTree::Children(int v) const {
  const TreeVertex& vx = vertices_[v];
  return std::vector<int>(vx.children.begin(),
                          vx.children.begin() + vx.num_children);
}

bool ImplicationTree::IsAncestor(int ancestor, int target) const {
  if (junction_ == -1) return true;
  const int b = vertices_[ancestor].branch;
  if (b == vertices_[target].branch) return true;
  return b != junction_branches_[0] && b != junction_branches_[1];
}

int ImplicationTree::VertexOnPathTo(int entry, int target) const {
  for (int id : by_entry_[entry]) {
    if (id != -1 && IsAncestor(id, target)) return id;
  }
  return -1;
}

int ImplicationTree::FirstConditionalAncestor(int v) const {
  for (int u = vertices_[v].parent; u != -1; u = vertices_[u].parent) {
    if (vertices_[u].kind == VertexKind::kConditional) return u;
  }
  return -1;
}

Conjunction ImplicationTree::PathFixings(int v, bool conditional_only) const {
  Conjunction c;
  for (int u = vertices_[v].parent; u != -1; u = vertices_[u].parent) {
    const TreeVertex& ux = vertices_[u];
    if (!ux.is_fixing()) continue;
    if (conditional_only && ux.kind != VertexKind::kConditional) continue;
    c.Add(ux.fixing());
  }
  return c;
}

int ImplicationTree::InsertAbove(int v, VertexKind kind, Fixing fixing) {
  const int parent = vertices_[v].parent;
  const int x = NewVertex(kind, fixing.entry, fixing.value, parent,
                          vertices_[v].branch);
  ReplaceChild(parent, v, x);
  TreeVertex& xv = vertices_[x];
  xv.children[0] = v;
  xv.num_children = 1;
  vertices_[v].parent = x;
  return x;
}

int ImplicationTree::SplitIntoDiamond(int v, Fixing first, Fixing second) {
  if (junction_ != -1) {
    throw std::logic_error("implication tree already has a split vertex");
  }
  const int parent = vertices_[v].parent;
  const int side_a = next_branch_++;
  const int side_b = next_branch_++;

  const int cond_a = NewVertex(VertexKind::kConditional, first.entry,
                               first.value, parent, side_a);
  ReplaceChild(parent, v, cond_a);
  const Fixing not_second = second.Converse();
  const int necc_a = NewVertex(VertexKind::kNecessary, not_second.entry,
                               not_second.value, cond_a, side_a);
  vertices_[cond_a].children[0] = necc_a;
  vertices_[cond_a].num_children = 1;
  vertices_[necc_a].children[0] = v;
  vertices_[necc_a].num_children = 1;
  vertices_[v].parent = necc_a;
  vertices_[v].branch = side_a;

  const int cond_b = NewVertex(VertexKind::kConditional, second.entry,
                               second.value, parent, side_b);
  TreeVertex& p = vertices_[parent];
  p.children[p.num_children++] = cond_b;
  const Fixing not_first = first.Converse();
  const int necc_b = NewVertex(VertexKind::kNecessary, not_first.entry,
                               not_first.value, cond_b, side_b);
  vertices_[cond_b].children[0] = necc_b;
  vertices_[cond_b].num_children = 1;
  const int loose_b =
      NewVertex(VertexKind::kLooseEnd, -1, 0, necc_b, side_b);
  vertices_[necc_b].children[0] = loose_b;
  vertices_[necc_b].num_children = 1;

  junction_ = parent;
  junction_branches_ = {side_a, side_b};
  return loose_b;
}

void ImplicationTree::Splice(int v) {
  const int parent = vertices_[v].parent;
  const std::vector<int> kids = Children(v);
  if (kids.empty()) {
    DetachChild(parent, v);
  } else {
    ReplaceChild(parent, v, kids[0]);
    if (kids.size() == 2) {
      TreeVertex& p = vertices_[parent];
      p.children[p.num_children++] = kids[1];
      vertices_[kids[1]].parent = parent;
    }
  }
  const bool was_junction = junction_ == v;
  Kill(v);
  if (was_junction) junction_ = parent;
  RefreshJunction();
}

void ImplicationTree::RemoveSubtree(int v) {
  const int parent = vertices_[v].parent;
  if (parent != -1) DetachChild(parent, v);
  std::vector<int> stack = {v};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    const TreeVertex& ux = vertices_[u];
    for (int k = 0; k < ux.num_children; ++k) stack.push_back(ux.children[k]);
    Kill(u);
  }
  RefreshJunction();
}

void ImplicationTree::ConvertToNecessary(int u) {
  for (int child : Children(u)) RemoveSubtree(child);
  TreeVertex& ux = vertices_[u];
  ux.kind = VertexKind::kNecessary;
  ux.value = 1 - ux.value;
  RefreshJunction();
}

void ImplicationTree::MergeStep(int u) {
  const int parent = vertices_[u].parent;
  TreeVertex& p = vertices_[parent];
  if (p.num_children != 2) return;
  const int w = p.children[0] == u ? p.children[1] : p.children[0];
  DetachChild(parent, w);
  TreeVertex& wx = vertices_[w];
  if (wx.num_children != 1) {
    throw std::logic_error("merging step: sibling does not have one child");
  }
  const int x = wx.children[0];
  if (vertices_[x].fixing() != vertices_[u].fixing()) {
    throw std::logic_error("merging step: sibling child fixing mismatch");
  }
  const std::vector<int> grand = Children(x);
  wx.num_children = 0;
  wx.children = {-1, -1};
  for (int g : grand) {
    wx.children[wx.num_children++] = g;
    vertices_[g].parent = w;
  }
  vertices_[x].num_children = 0;
  Kill(x);
  TreeVertex& ux = vertices_[u];
  ux.children[0] = w;
  ux.num_children = 1;
  wx.parent = u;
  if (junction_ == parent) junction_ = -1;
  RefreshJunction();
}

std::string ImplicationTree::Render(int v) const {
  const TreeVertex& vx = vertices_[v];
  std::string head;
  switch (vx.kind) {
    case VertexKind::kRoot:
      head = "root";
      break;
    case VertexKind::kConditional:
      head = "cond" + vx.fixing().ToString();
      break;
    case VertexKind::kNecessary:
      head = "necc" + vx.fixing().ToString();
      break;
    case VertexKind::kLooseEnd:
      head = "loose";
      break;
  }
  if (vx.num_children == 0) return head;
  std::vector<std::string> parts;
  for (int k = 0; k < vx.num_children; ++k) {
    parts.push_back(Render(vx.children[k]));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = head + "{";
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) out += ",";
    out += parts[k];
  }
  return out + "}";
}

std::string ImplicationTree::ToString() const { return Render(kRoot); }

std::optional<std::string> ImplicationTree::CheckStructure(
    const FixState& fixings) const {
  const int total = num_slots();
  if (!vertices_[kRoot].alive || vertices_[kRoot].kind != VertexKind::kRoot) {
    return "root missing";
  }
  int splits = 0;
  int split_vertex = -1;
  std::vector<int> loose;
  for (int v = 0; v < total; ++v) {
    const TreeVertex& vx = vertices_[v];
    if (!vx.alive) continue;
    if (v != kRoot) {
      if (vx.parent < 0 || !vertices_[vx.parent].alive) {
        return "vertex " + std::to_string(v) + " has a dead parent";
      }
      const auto kids = Children(vx.parent);
      if (std::find(kids.begin(), kids.end(), v) == kids.end()) {
        return "vertex " + std::to_string(v) + " missing from parent";
      }
      if (vx.kind == VertexKind::kRoot) return "second root";
    }
    for (int c : Children(v)) {
      if (!vertices_[c].alive || vertices_[c].parent != v) {
        return "broken child link at vertex " + std::to_string(v);
      }
    }
    if (vx.kind == VertexKind::kLooseEnd) {
      if (vx.num_children != 0) return "loose end is not a leaf";
      loose.push_back(v);
    }
    if (vx.is_fixing()) {
      const auto& slots = by_entry_[vx.entry];
      if (slots[0] != v && slots[1] != v) {
        return "fixing vertex missing from entry index";
      }
    }
    if (vx.num_children == 2) {
      ++splits;
      split_vertex = v;
    }
  }
  for (int e = 0; e < n_; ++e) {
    for (int id : by_entry_[e]) {
      if (id == -1) continue;
      if (!vertices_[id].alive || vertices_[id].entry != e) {
        return "stale entry index at entry " + std::to_string(e + 1);
      }
    }
  }
  std::vector<int> listed = loose_ends_;
  std::sort(listed.begin(), listed.end());
  if (listed != loose) return "loose end list out of sync";
  if (splits > 1) return "more than one vertex of outdegree two";
  if (split_vertex != junction_) return "split vertex bookkeeping out of sync";
  if (split_vertex != -1) {
    const auto kids = Children(split_vertex);
    const TreeVertex& u1 = vertices_[kids[0]];
    const TreeVertex& u2 = vertices_[kids[1]];
    if (u1.kind != VertexKind::kConditional ||
        u2.kind != VertexKind::kConditional || u1.num_children != 1 ||
        u2.num_children != 1) {
      return "split children are not single-child conditional vertices";
    }
    const TreeVertex& w1 = vertices_[u1.children[0]];
    const TreeVertex& w2 = vertices_[u2.children[0]];
    if (w1.kind != VertexKind::kNecessary ||
        w2.kind != VertexKind::kNecessary) {
      return "split grandchildren are not necessary vertices";
    }
    if (u1.fixing() != w2.fixing().Converse() ||
        u2.fixing() != w1.fixing().Converse() || u1.entry == u2.entry) {
      return "split fixings do not form the diamond pattern";
    }
  }
  // Rooted paths: distinct unfixed entries.
  for (int v = 0; v < total; ++v) {
    const TreeVertex& vx = vertices_[v];
    if (!vx.alive || vx.num_children != 0) continue;
    std::set<int> seen;
    for (int u = v; u != -1; u = vertices_[u].parent) {
      const TreeVertex& ux = vertices_[u];
      if (!ux.is_fixing()) continue;
      if (fixings.IsFixed(ux.entry)) {
        return "fixed entry " + std::to_string(ux.entry + 1) + " in tree";
      }
      if (!seen.insert(ux.entry).second) {
        return "entry " + std::to_string(ux.entry + 1) +
               " repeated on a rooted path";
      }
    }
  }
  // The branch-tag ancestor test agrees with a walk to the root.
  for (int l : loose) {
    std::vector<char> on_path(total, 0);
    for (int u = l; u != -1; u = vertices_[u].parent) on_path[u] = 1;
    for (int v = 0; v < total; ++v) {
      if (!vertices_[v].alive || !vertices_[v].is_fixing()) continue;
      if (IsAncestor(v, l) != static_cast<bool>(on_path[v])) {
        return "ancestor test disagrees with tree walk";
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Scheduler

bool Scheduler::Push(Fixing f) {
  if (member_[Key(f)]) return true;
  if (member_[Key(f.Converse())]) {
    conflict_ = true;
    return false;
  }
  member_[Key(f)] = 1;
  stack_.push_back(f);
  return true;
}

Fixing Scheduler::Pop() {
  const Fixing f = stack_.back();
  stack_.pop_back();
  member_[Key(f)] = 0;
  return f;
}

// ---------------------------------------------------------------------------
// PermPropState

PermPropState::PermPropState(const Permutation* perm)
    : perm_(perm), tree_(perm->size()) {}

int PermPropState::HValue(const FixState& fixings, int entry,
                          int loose) const {
  if (fixings.IsFixed(entry)) return fixings.value(entry);
  const int v = tree_.VertexOnPathTo(entry, loose);
  return v == -1 ? kBlank : tree_.vertex(v).value;
}

void PermPropState::IndexIncrease(const FixState& fixings,
                                  Scheduler& scheduler,
                                  std::vector<uint8_t>* touched) {
  const int n = perm_->size();
  if (next_ >= n) return;
  const int i = next_;
  const int j = perm_->Preimage(i);
  ++next_;
  if (i == j) return;
  if (touched != nullptr) {
    (*touched)[i] = 1;
    (*touched)[j] = 1;
  }

  struct Pending {
    int loose;
    int alpha;
    int beta;
  };
  std::vector<Pending> pending;
  for (int v : tree_.loose_ends()) {
    pending.push_back({v, HValue(fixings, i, v), HValue(fixings, j, v)});
  }
  for (const Pending& p : pending) {
    if (tree_.infeasible()) break;
    const int v = p.loose;
    if (!tree_.vertex(v).alive) continue;
    const int a = p.alpha;
    const int b = p.beta;
    if (a == kBlank && b == kBlank) {
      tree_.SplitIntoDiamond(v, {i, 0}, {j, 1});
    } else if (a == 0 && b == kBlank) {
      tree_.InsertAbove(v, VertexKind::kNecessary, {j, 0});
    } else if (a == 1 && b == kBlank) {
      tree_.InsertAbove(v, VertexKind::kConditional, {j, 1});
    } else if (a == kBlank && b == 0) {
      tree_.InsertAbove(v, VertexKind::kConditional, {i, 0});
    } else if (a == kBlank && b == 1) {
      tree_.InsertAbove(v, VertexKind::kNecessary, {i, 1});
    } else if (a == 1 && b == 0) {
      tree_.RemoveSubtree(v);
    } else if (a == 0 && b == 1) {
      const int u = tree_.FirstConditionalAncestor(v);
      if (u == -1) {
        tree_.MarkInfeasible();
        break;
      }
      tree_.ConvertToNecessary(u);
      tree_.MergeStep(u);
    }
    // (0,0) and (1,1) keep the loose end as it is.
  }
  PushRootFixings(scheduler);
}

bool PermPropState::ApplyFixing(const FixState& fixings, Fixing f,
                                Scheduler& scheduler) {
  bool changed = false;
  const auto slots = tree_.VerticesWithEntry(f.entry);
  for (int v : slots) {
    if (v == -1 || tree_.infeasible()) continue;
    const TreeVertex& vx = tree_.vertex(v);
    if (!vx.alive || vx.entry != f.entry) continue;
    changed = true;
    if (vx.fixing() == f) {
      const TreeVertex& p = tree_.vertex(vx.parent);
      int sibling = -1;
      if (p.num_children == 2) {
        sibling = p.children[0] == v ? p.children[1] : p.children[0];
      }
      tree_.Splice(v);
      if (sibling != -1) tree_.RemoveSubtree(sibling);
    } else if (vx.kind == VertexKind::kConditional) {
      tree_.RemoveSubtree(v);
    } else {
      const int u = tree_.FirstConditionalAncestor(v);
      if (u == -1) {
        tree_.MarkInfeasible();
        break;
      }
      tree_.ConvertToNecessary(u);
      tree_.MergeStep(u);
    }
  }
  const int n = perm_->size();
  if (next_ < n && (f.entry == next_ || f.entry == perm_->Preimage(next_))) {
    changed = true;
  }
  (void)fixings;
  if (!tree_.infeasible()) PushRootFixings(scheduler);
  return changed;
}

bool PermPropState::GuardedCondition(const FixState& fixings) const {
  const int n = perm_->size();
  if (next_ >= n) return false;
  const TreeVertex& root = tree_.vertex(ImplicationTree::kRoot);
  for (int k = 0; k < root.num_children; ++k) {
    if (tree_.vertex(root.children[k]).kind == VertexKind::kLooseEnd) {
      return false;
    }
  }
  const int i = next_;
  const int pre = perm_->Preimage(i);
  return !fixings.Is(i, 0) && !fixings.Is(pre, 1) && (*perm_)(i) > i &&
         pre > i;
}

bool PermPropState::IsComplete(const FixState& fixings) const {
  const TreeVertex& root = tree_.vertex(ImplicationTree::kRoot);
  for (int k = 0; k < root.num_children; ++k) {
    if (tree_.vertex(root.children[k]).kind == VertexKind::kNecessary) {
      throw std::logic_error(
          "completeness check with a pending necessary fixing at the root");
    }
  }
  if (tree_.loose_ends().empty()) return true;
  if (next_ >= perm_->size()) return true;
  return GuardedCondition(fixings);
}

void PermPropState::PushRootFixings(Scheduler& scheduler) const {
  const TreeVertex& root = tree_.vertex(ImplicationTree::kRoot);
  for (int k = 0; k < root.num_children; ++k) {
    const TreeVertex& c = tree_.vertex(root.children[k]);
    if (c.kind == VertexKind::kNecessary) scheduler.Push(c.fixing());
  }
}

std::vector<Conjunction> PermPropState::EqConjunctions() const {
  std::vector<Conjunction> out;
  for (int v : tree_.loose_ends()) out.push_back(tree_.PathFixings(v, true));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Conjunction> PermPropState::InfConjunctions() const {
  std::vector<Conjunction> out;
  for (int v = 0; v < tree_.num_slots(); ++v) {
    const TreeVertex& vx = tree_.vertex(v);
    if (!vx.alive || vx.kind != VertexKind::kNecessary) continue;
    Conjunction c = tree_.PathFixings(v, true);
    c.Add(vx.fixing().Converse());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> PermPropState::CheckInvariants(
    const FixState& fixings) const {
  if (auto err = tree_.CheckStructure(fixings)) return err;
  if (tree_.loose_ends().empty()) return std::nullopt;
  std::set<int> expected;
  for (int i = 0; i < next_; ++i) {
    // A fixed point compares an entry with itself and adds nothing.
    if (perm_->Preimage(i) == i) continue;
    for (int e : {i, perm_->Preimage(i)}) {
      if (fixings.IsUnfixed(e)) expected.insert(e);
    }
  }
  std::set<int> all_entries;
  for (int v = 0; v < tree_.num_slots(); ++v) {
    const TreeVertex& vx = tree_.vertex(v);
    if (vx.alive && vx.is_fixing()) all_entries.insert(vx.entry);
  }
  for (int l : tree_.loose_ends()) {
    std::set<int> entries;
    const Conjunction path = tree_.PathFixings(l, false);
    for (const Fixing& f : path.fixings()) {
      entries.insert(f.entry);
    }
    if (entries != expected) {
      auto show = [](const std::set<int>& s) {
        std::string out;
        for (int e : s) out += std::to_string(e + 1) + " ";
        return out;
      };
      return "loose end entry set differs from the inspected prefix: path {" +
             show(entries) + "} expected {" + show(expected) + "} in " +
             tree_.ToString();
    }
  }
  if (!std::includes(expected.begin(), expected.end(), all_entries.begin(),
                     all_entries.end())) {
    return "tree entry outside the loose end entry set";
  }
  return std::nullopt;
}

}  // namespace symprop
