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

#include "symprop/propagate_set.h"

#include <algorithm>
#include <deque>

#include "symprop/errors.h"

namespace symprop {
namespace {

class Run {
 public:
  Run(const std::vector<Permutation>& perms, const FixState& fixings,
      const PropagateOptions& options, PropagateStats* stats)
      : options_(options),
        stats_(stats),
        current_(fixings),
        scheduler_(fixings.size()),
        in_queue_(perms.size(), 1),
        dirty_(perms.size(), 0) {
    states_.reserve(perms.size());
    for (size_t k = 0; k < perms.size(); ++k) {
      states_.emplace_back(&perms[k]);
      queue_.push_back(static_cast<int>(k));
    }
  }

  PropagationResult Execute() {
    bool ok = Loop();
    if (stats_ != nullptr) {
      for (const auto& s : states_) {
        stats_->max_vertices_created = std::max(
            stats_->max_vertices_created, s.tree().vertices_created());
      }
    }
    if (!ok) return PropagationResult::Infeasible();
    return PropagationResult::Feasible(current_);
  }

 private:
  bool Loop() {
    while (!queue_.empty()) {
      const int k = queue_.front();
      queue_.pop_front();
      in_queue_[k] = 0;
      PermPropState& state = states_[k];
      if (state.IsComplete(current_)) continue;
      state.IndexIncrease(current_, scheduler_, options_.touched);
      if (stats_ != nullptr) ++stats_->index_events;
      Notify({PropagateEvent::Kind::kIndexIncrease, k, {}}, state);
      if (state.infeasible() || scheduler_.conflict()) return false;
      if (!Drain()) return false;
      for (size_t q = 0; q < states_.size(); ++q) {
        if (!dirty_[q]) continue;
        dirty_[q] = 0;
        Enqueue(static_cast<int>(q));
      }
      Enqueue(k);
    }
    return true;
  }

  void Enqueue(int k) {
    if (in_queue_[k]) return;
    if (states_[k].IsComplete(current_)) return;
    in_queue_[k] = 1;
    queue_.push_back(k);
  }

  bool Drain() {
    while (!scheduler_.empty()) {
      if (scheduler_.conflict()) return false;
      const Fixing f = scheduler_.Pop();
      if (current_.IsFixed(f.entry)) {
        if (current_.value(f.entry) != f.value) return false;
        continue;
      }
      current_.Fix(f);
      if (stats_ != nullptr) ++stats_->fixing_events;
      for (size_t q = 0; q < states_.size(); ++q) {
        PermPropState& s = states_[q];
        if (s.ApplyFixing(current_, f, scheduler_)) {
          dirty_[q] = 1;
          Notify({PropagateEvent::Kind::kFixing, static_cast<int>(q), f}, s);
        }
        if (s.infeasible()) return false;
      }
      if (scheduler_.conflict()) return false;
    }
    return true;
  }

  void Notify(const PropagateEvent& event, const PermPropState& state) {
    if (options_.check_invariants && !state.infeasible()) {
      if (auto err = state.CheckInvariants(current_)) {
        if (stats_ != nullptr) {
          if (stats_->invariant_violations == 0) {
            stats_->first_violation = *err + " in " + state.tree().ToString();
          }
          ++stats_->invariant_violations;
        }
      }
    }
    if (options_.observer) options_.observer(event, state, current_);
  }

  const PropagateOptions& options_;
  PropagateStats* stats_;
  FixState current_;
  Scheduler scheduler_;
  std::vector<PermPropState> states_;
  std::deque<int> queue_;
  std::vector<uint8_t> in_queue_;
  std::vector<uint8_t> dirty_;
};

}  // namespace

PropagationResult PropagateSet(const std::vector<Permutation>& perms,
                               const FixState& fixings,
                               const PropagateOptions& options,
                               PropagateStats* stats) {
  for (const Permutation& perm : perms) {
    if (perm.size() != fixings.size()) {
      throw DimensionError("permutation size " + std::to_string(perm.size()) +
                           " differs from fixing size " +
                           std::to_string(fixings.size()));
    }
    if (perm.IsIdentity()) {
      throw ValidationError("identity permutation passed to propagation");
    }
  }
  if (options.touched != nullptr) {
    options.touched->resize(fixings.size(), 0);
  }
  Run run(perms, fixings, options, stats);
  return run.Execute();
}

}  // namespace symprop
