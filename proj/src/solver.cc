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

#include "symprop/solver.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <stdexcept>

#include "symprop/errors.h"
#include "symprop/propagate_set.h"

namespace symprop {
namespace {

constexpr double kTolerance = 1e-9;

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int64_t EnvOr(const char* name, int64_t fallback) {
  const char* text = std::getenv(name);
  if (text == nullptr || *text == '\0') return fallback;
  int64_t value = 0;
  const char* end = text + std::char_traits<char>::length(text);
  auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc() || ptr != end || value <= 0) {
    throw std::invalid_argument(std::string(name) +
                                " must be a positive integer, got '" + text +
                                "'");
  }
  return value;
}

}  // namespace

std::string ToString(SymmetryMode mode) {
  switch (mode) {
    case SymmetryMode::kNoSym:
      return "nosym";
    case SymmetryMode::kGen:
      return "gen";
    case SymmetryMode::kGroup:
      return "group";
    case SymmetryMode::kNoPeek:
      return "nopeek";
    case SymmetryMode::kPeek:
      return "peek";
  }
  return "nosym";
}

SymmetryMode ParseSymmetryMode(const std::string& name) {
  for (SymmetryMode m : AllSymmetryModes()) {
    if (ToString(m) == name) return m;
  }
  throw std::invalid_argument("unknown mode '" + name + "'");
}

const std::vector<SymmetryMode>& AllSymmetryModes() {
  static const std::vector<SymmetryMode> modes = {
      SymmetryMode::kNoSym, SymmetryMode::kGen, SymmetryMode::kGroup,
      SymmetryMode::kNoPeek, SymmetryMode::kPeek};
  return modes;
}

std::string ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kTimeLimit:
      return "timelimit";
  }
  return "infeasible";
}

Safeguard Safeguard::FromEnvironment() {
  Safeguard s;
  s.max_powers = EnvOr("SYMPROP_MAX_POWERS", s.max_powers);
  s.max_weight = EnvOr("SYMPROP_MAX_WEIGHT", s.max_weight);
  return s;
}

SymmetryPropagator::SymmetryPropagator(
    const std::vector<Permutation>& generators, int n, SymmetryMode mode,
    const Safeguard& safeguard)
    : n_(n), mode_(mode) {
  if (mode == SymmetryMode::kNoSym) return;
  for (const Permutation& g : generators) {
    if (g.size() != n) throw DimensionError("generator size differs from n");
    if (g.IsIdentity()) continue;
    if (mode == SymmetryMode::kGen) {
      all_.push_back(g);
      continue;
    }
    Handler handler;
    handler.powers =
        GroupElements(g, safeguard.max_powers, safeguard.max_weight);
    const int64_t count = static_cast<int64_t>(handler.powers.size());
    const bool full = static_cast<uint64_t>(count) + 1 == g.Order();
    if (mode != SymmetryMode::kGroup && full &&
        MonotoneOrderedDecomposition(g)) {
      handler.ordered = CyclicSubgroup::Generated(g, count);
    }
    if (mode == SymmetryMode::kGroup) {
      all_.insert(all_.end(), handler.powers.begin(), handler.powers.end());
    } else {
      handlers_.push_back(std::move(handler));
    }
  }
}

int SymmetryPropagator::num_ordered() const {
  return static_cast<int>(std::count_if(
      handlers_.begin(), handlers_.end(),
      [](const Handler& h) { return h.ordered.has_value(); }));
}

bool SymmetryPropagator::RunHandler(const Handler& handler,
                                    FixState& fixings) const {
  const bool peek = mode_ == SymmetryMode::kPeek;
  if (handler.ordered) {
    PropagationResult r =
        PropagateOrderedMonotone(*handler.ordered, fixings, 0, peek);
    if (r.infeasible()) return false;
    fixings = std::move(r.fixings);
    return true;
  }
  std::vector<uint8_t> touched;
  PropagateOptions options;
  if (peek) options.touched = &touched;
  PropagationResult r = PropagateSet(handler.powers, fixings, options);
  if (r.infeasible()) return false;
  fixings = std::move(r.fixings);
  if (!peek) return true;
  for (int e = 0; e < n_; ++e) {
    if (!touched[e] || fixings.IsFixed(e)) continue;
    for (int b : {0, 1}) {
      FixState trial = fixings;
      trial.Fix(e, b);
      if (PropagateSet(handler.powers, trial).infeasible()) {
        fixings.Fix(e, 1 - b);
        break;
      }
    }
  }
  return true;
}

bool SymmetryPropagator::Propagate(FixState& fixings, int64_t* added) const {
  const int before = fixings.NumFixed();
  bool ok = true;
  if (!all_.empty()) {
    PropagationResult r = PropagateSet(all_, fixings);
    if (r.infeasible()) {
      ok = false;
    } else {
      fixings = std::move(r.fixings);
    }
  }
  bool changed = !handlers_.empty();
  while (ok && changed) {
    const int round_start = fixings.NumFixed();
    for (const Handler& h : handlers_) {
      if (!RunHandler(h, fixings)) {
        ok = false;
        break;
      }
    }
    changed = fixings.NumFixed() != round_start;
  }
  if (added != nullptr) *added += fixings.NumFixed() - before;
  return ok;
}

bool PropagateRows(const BinaryProgram& bp, FixState& fixings) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Row& row : bp.rows) {
      double min_act = 0.0;
      double max_act = 0.0;
      for (const Term& t : row.terms) {
        if (fixings.IsFixed(t.index)) {
          if (fixings.Is(t.index, 1)) {
            min_act += t.coefficient;
            max_act += t.coefficient;
          }
        } else if (t.coefficient < 0) {
          min_act += t.coefficient;
        } else {
          max_act += t.coefficient;
        }
      }
      const bool equality = row.sense == RowSense::kEqual;
      if (min_act > row.rhs + kTolerance) return false;
      if (equality && max_act < row.rhs - kTolerance) return false;
      for (const Term& t : row.terms) {
        if (fixings.IsFixed(t.index)) continue;
        const double a = t.coefficient;
        int forced = -1;
        // Upper side: the value that raises the minimum activity is excluded.
        if (min_act + std::abs(a) > row.rhs + kTolerance) forced = a > 0 ? 0 : 1;
        if (equality && max_act - std::abs(a) < row.rhs - kTolerance) {
          const int lower = a > 0 ? 1 : 0;
          if (forced != -1 && forced != lower) return false;
          forced = lower;
        }
        if (forced == -1) continue;
        fixings.Fix(t.index, forced);
        const double delta = forced ? a : 0.0;
        if (a < 0) {
          min_act += delta - a;
          max_act += delta;
        } else {
          min_act += delta;
          max_act += delta - a;
        }
        changed = true;
      }
    }
  }
  return true;
}

PropagationResult NodePropagate(const BinaryProgram& bp,
                                const FixState& fixings,
                                const Settings& settings) {
  const SymmetryPropagator symmetry(bp.generators, bp.n, settings.mode,
                                    settings.safeguard);
  FixState current = fixings;
  while (true) {
    if (!PropagateRows(bp, current)) return PropagationResult::Infeasible();
    int64_t added = 0;
    if (!symmetry.Propagate(current, &added)) {
      return PropagationResult::Infeasible();
    }
    if (added == 0) break;
  }
  return PropagationResult::Feasible(std::move(current));
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const BinaryProgram& bp, const Settings& settings,
                 SolveResult& result)
      : bp_(bp),
        settings_(settings),
        symmetry_(bp.generators, bp.n, settings.mode, settings.safeguard),
        result_(result) {}

  void Run() {
    const Clock::time_point start = Clock::now();
    std::vector<FixState> stack = {FixState(bp_.n)};
    bool timed_out = false;
    while (!stack.empty()) {
      if (settings_.time_limit_seconds > 0 &&
          SecondsSince(start) > settings_.time_limit_seconds) {
        timed_out = true;
        break;
      }
      FixState node = std::move(stack.back());
      stack.pop_back();
      ++result_.nodes;
      if (!Propagate(node)) continue;
      if (Bound(node) <= result_.objective + kTolerance &&
          result_.has_incumbent) {
        continue;
      }
      int branch = -1;
      for (int i = 0; i < bp_.n; ++i) {
        if (node.IsUnfixed(i)) {
          branch = i;
          break;
        }
      }
      if (branch == -1) {
        Leaf(node);
        continue;
      }
      FixState zero = node;
      zero.Fix(branch, 0);
      node.Fix(branch, 1);
      stack.push_back(std::move(zero));
      stack.push_back(std::move(node));
    }
    if (timed_out) {
      result_.status = SolveStatus::kTimeLimit;
    } else {
      result_.status = result_.has_incumbent ? SolveStatus::kOptimal
                                             : SolveStatus::kInfeasible;
    }
  }

 private:
  bool Propagate(FixState& node) {
    while (true) {
      if (!PropagateRows(bp_, node)) return false;
      const Clock::time_point t0 = Clock::now();
      int64_t added = 0;
      const bool ok = symmetry_.Propagate(node, &added);
      result_.symmetry_seconds += SecondsSince(t0);
      result_.symmetry_fixings += added;
      if (!ok) return false;
      if (added == 0) return true;
    }
  }

  double Bound(const FixState& node) const {
    double bound = 0.0;
    for (int i = 0; i < bp_.n; ++i) {
      const double c = bp_.objective[i];
      if (node.Is(i, 1) || (node.IsUnfixed(i) && c > 0)) bound += c;
    }
    return bound;
  }

  void Leaf(const FixState& node) {
    BitVector x(bp_.n, 0);
    for (int i = 0; i < bp_.n; ++i) x[i] = node.Is(i, 1) ? 1 : 0;
    if (!bp_.IsFeasible(x)) return;
    const double value = bp_.Objective(x);
    if (!result_.has_incumbent || value > result_.objective) {
      result_.has_incumbent = true;
      result_.objective = value;
      result_.incumbent = std::move(x);
    }
  }

  const BinaryProgram& bp_;
  const Settings& settings_;
  SymmetryPropagator symmetry_;
  SolveResult& result_;
};

}  // namespace

SolveResult Solve(const BinaryProgram& bp, const Settings& settings) {
  bp.Validate();
  const Clock::time_point start = Clock::now();
  SolveResult result;

  const bool relabel = settings.mode != SymmetryMode::kNoSym &&
                       settings.relabel != RelabelStrategy::kOriginal &&
                       !bp.generators.empty();
  if (!relabel) {
    BranchAndBound(bp, settings, result).Run();
    result.seconds = SecondsSince(start);
    return result;
  }
  const RelabelPlan plan = Relabel(bp.generators, settings.relabel);
  result.relabeled_generators = static_cast<int>(plan.relabeled.size());
  const BinaryProgram work = bp.Relabeled(plan.labeling);
  BranchAndBound(work, settings, result).Run();
  if (result.has_incumbent) {
    BitVector original(bp.n, 0);
    for (int i = 0; i < bp.n; ++i) {
      original[i] = result.incumbent[plan.labeling(i)];
    }
    result.incumbent = std::move(original);
  }
  result.seconds = SecondsSince(start);
  return result;
}

}  // namespace symprop
