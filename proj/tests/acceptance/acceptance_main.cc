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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any check fails. An optional argument overrides the seed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "random_instances.h"
#include "symprop/cyclic.h"
#include "symprop/oracle.h"
#include "symprop/propagate_set.h"
#include "symprop/snark.h"
#include "symprop/solver.h"

namespace symprop {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Shared across criteria: invariant checks and vertex counters from every
// randomized propagation run.
struct Tally {
  int64_t runs = 0;
  int64_t violations = 0;
  std::string first_violation;
  int64_t bound_failures = 0;
  std::string first_bound_failure;

  void Record(const PropagateStats& stats, int n) {
    ++runs;
    if (stats.invariant_violations > 0 && violations == 0) {
      first_violation = stats.first_violation;
    }
    violations += stats.invariant_violations;
    if (stats.max_vertices_created > 6 * n + 2) {
      if (bound_failures == 0) {
        first_bound_failure = "n=" + std::to_string(n) + " created " +
                              std::to_string(stats.max_vertices_created);
      }
      ++bound_failures;
    }
  }
};

PropagationResult Checked(const std::vector<Permutation>& perms,
                          const FixState& f, Tally& tally) {
  PropagateOptions options;
  options.check_invariants = true;
  PropagateStats stats;
  PropagationResult r = PropagateSet(perms, f, options, &stats);
  tally.Record(stats, f.size());
  return r;
}

class Report {
 public:
  void Add(const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    all_pass_ = all_pass_ && pass;
  }
  bool all_pass() const { return all_pass_; }

 private:
  bool all_pass_ = true;
};

void ExampleOne(Report& report, Tally& tally) {
  const auto start = Clock::now();
  const std::vector<Permutation> perms = {
      Permutation::FromCycleString(8, "(1,6,8,4,7,2,5)"),
      Permutation::FromCycleString(8, "(1,3,6,2,4,5)")};
  const FixState f = *FixState::FromSets(8, {3, 5}, {4});
  std::vector<Fixing> applied;
  std::map<int, std::string> trees;
  PropagateOptions options;
  options.check_invariants = true;
  options.observer = [&](const PropagateEvent& e, const PermPropState& s,
                         const FixState&) {
    if (e.kind == PropagateEvent::Kind::kFixing) {
      if (applied.empty() || !(applied.back() == e.fixing)) {
        applied.push_back(e.fixing);
      }
    } else if (e.perm_index == 0) {
      trees[s.lex_index()] = s.tree().ToString();
    }
  };
  PropagateStats stats;
  const auto r = PropagateSet(perms, f, options, &stats);
  tally.Record(stats, 8);
  const auto oracle = PerPermFixpointOracle(perms, f);
  const bool fixings_ok = applied == std::vector<Fixing>{{0, 1}, {6, 0}};
  const bool trees_ok =
      trees[6] ==
          "root{cond(2,0){necc(7,0){necc(8,0)}},"
          "cond(7,1){necc(2,1){necc(8,0){loose}}}}" &&
      trees[7] == "root{necc(7,0){cond(2,0){necc(8,0)}}}";
  const double t = Seconds(start);
  report.Add("example-1",
             fixings_ok && trees_ok && SameOutcome(r, oracle) && t < 1.0,
             "result " + ToString(r) + ", oracle " + ToString(oracle) +
                 ", fixings (1,1),(7,0) " + (fixings_ok ? "yes" : "no") +
                 ", trees at i=6,7 " + (trees_ok ? "match" : "differ") +
                 ", " + std::to_string(t) + " s (limit 1 s, exact)");
}

void ExampleTwo(Report& report) {
  const auto start = Clock::now();
  const auto group =
      CyclicSubgroup::Generated(Permutation::FromCycleString(5, "(1,2,3,4,5)"));
  const FixState f = *FixState::FromSets(5, {1, 4}, {});
  const auto individual = PropagateSet(group.Elements(), f);
  const auto complete = CompleteFixMonotoneGroup(group, f);
  const bool ok = individual.feasible() && individual.fixings == f &&
                  complete.feasible() &&
                  complete.fixings.Fixed0() == std::vector<int>{1, 3, 4} &&
                  complete.fixings.Fixed1().empty();
  const double t = Seconds(start);
  report.Add("example-2", ok && t < 1.0,
             "individual " + ToString(individual) + ", group " +
                 ToString(complete) + ", " + std::to_string(t) +
                 " s (limit 1 s, exact)");
}

void SetPropagation(Report& report, Tally& tally, testing::Rng& rng) {
  constexpr int kCases = 1000;
  const auto start = Clock::now();
  int agree = 0;
  int infeasible = 0;
  std::string first_mismatch;
  for (int t = 0; t < kCases; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto perms =
        testing::RandomPermutations(rng, n, 1 + static_cast<int>(rng() % 8));
    const FixState f = testing::RandomFixings(rng, n);
    const auto got = Checked(perms, f, tally);
    const auto want = PerPermFixpointOracle(perms, f);
    if (SameOutcome(got, want)) {
      ++agree;
      infeasible += want.infeasible();
    } else if (first_mismatch.empty()) {
      first_mismatch = " first mismatch on " + f.ToString();
    }
  }
  const double t = Seconds(start);
  report.Add("set-propagation-vs-oracle", agree == kCases && t < 60.0,
             std::to_string(agree) + "/" + std::to_string(kCases) +
                 " agree (" + std::to_string(infeasible) + " infeasible), " +
                 std::to_string(t) + " s (limit 60 s, 100%)" + first_mismatch);
}

struct WitnessTally {
  int prop4_checked = 0;
  int prop4_held = 0;
  int prop5_checked = 0;
  int prop5_held = 0;
};

void CheckFeasibilityAndWitness(const CyclicSubgroup& group, const FixState& f,
                       Tally& tally, WitnessTally& props) {
  const std::vector<Permutation> elements = group.Elements();
  const auto state = Checked(elements, f, tally);
  if (state.infeasible()) return;
  // Per-permutation complete state: group feasibility iff every single
  // constraint is feasible.
  const bool group_feasible =
      CompleteFixingsOracle(elements, state.fixings).feasible();
  bool all_single = true;
  for (const Permutation& p : elements) {
    all_single = all_single &&
                 CompleteFixingsOracle({p}, state.fixings).feasible();
  }
  ++props.prop4_checked;
  props.prop4_held += group_feasible == all_single;
  if (!group_feasible) return;
  const std::vector<int> support = group.generator().Support();
  const bool open = std::any_of(support.begin(), support.end(), [&](int i) {
    return state.fixings.IsUnfixed(i);
  });
  if (!open) return;
  ++props.prop5_checked;
  const BitVector x = StrictWitness(group, state.fixings);
  bool ok = true;
  for (int i = 0; i < f.size(); ++i) {
    if (state.fixings.IsFixed(i) && x[i] != state.fixings.value(i)) ok = false;
  }
  for (const Permutation& p : elements) {
    ok = ok && CompareWithImage(x, p) == LexRelation::kGreater;
  }
  ok = ok && IsLexLeader(FeasibilityWitness(group, state.fixings), group);
  props.prop5_held += ok;
}

void CyclicPropagation(Report& report, Report& props_report, Tally& tally,
                     testing::Rng& rng) {
  constexpr int kCases = 1000;
  const auto start = Clock::now();
  int agree2 = 0;
  int agree3 = 0;
  WitnessTally props;
  for (int t = 0; t < kCases; ++t) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const CyclicSubgroup group = testing::RandomMonotoneGroup(rng, n);
    const FixState f = testing::RandomFixings(rng, n);
    const auto want = CompleteFixingsOracle(group.Elements(), f);
    agree2 += SameOutcome(CompleteFixMonotoneGroup(group, f), want);
    CheckFeasibilityAndWitness(group, f, tally, props);
  }
  for (int t = 0; t < kCases; ++t) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const CyclicSubgroup group = testing::RandomOrderedMonotoneGroup(rng, n, 4);
    const FixState f = testing::RandomFixings(rng, n);
    const auto want = CompleteFixingsOracle(group.Elements(), f);
    agree3 += SameOutcome(PropagateOrderedMonotone(group, f, 0, true), want);
    Checked(group.Elements(), f, tally);
  }
  const double t = Seconds(start);
  report.Add("cyclic-propagation-vs-oracle",
             agree2 == kCases && agree3 == kCases && t < 120.0,
             "monotone " + std::to_string(agree2) + "/" +
                 std::to_string(kCases) + ", ordered " +
                 std::to_string(agree3) + "/" + std::to_string(kCases) +
                 ", " + std::to_string(t) + " s (limit 120 s, 100%)");
  props_report.Add(
      "feasibility-and-witness",
      props.prop4_checked > 0 && props.prop5_checked > 0 &&
          props.prop4_held == props.prop4_checked &&
          props.prop5_held == props.prop5_checked,
      "feasibility biconditional " + std::to_string(props.prop4_held) + "/" +
          std::to_string(props.prop4_checked) + ", strict witness " +
          std::to_string(props.prop5_held) + "/" +
          std::to_string(props.prop5_checked) + " (100%)");
}

void Invariants(Report& report, Tally& tally, testing::Rng& rng) {
  // Extra runs on larger inputs in addition to all runs above.
  for (int t = 0; t < 300; ++t) {
    const int n = 10 + static_cast<int>(rng() % 30);
    const auto perms =
        testing::RandomPermutations(rng, n, 1 + static_cast<int>(rng() % 8));
    Checked(perms, testing::RandomFixings(rng, n, 0.2), tally);
  }
  report.Add("structural-invariants", tally.violations == 0,
             std::to_string(tally.violations) + " violations over " +
                 std::to_string(tally.runs) +
                 " runs, checked after every event (limit 0)" +
                 (tally.first_violation.empty() ? ""
                                                : ": " + tally.first_violation));
}

void WorkBound(Report& report, Tally& tally, testing::Rng& rng) {
  std::vector<double> times;
  std::string detail;
  for (int n : {64, 128, 256, 512}) {
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) image[i] = (i + 1) % n;
    const std::vector<Permutation> powers =
        GroupElements(Permutation(image), n, int64_t{1} << 40);
    // Zero fixings in the back half keep the all-zero vector feasible.
    FixState f(n);
    for (int i = n / 2; i < n; ++i) {
      if (rng() % 4 == 0) f.Fix(i, 0);
    }
    std::vector<double> samples;
    for (int rep = 0; rep < 5; ++rep) {
      const auto start = Clock::now();
      PropagateStats stats;
      PropagateSet(powers, f, {}, &stats);
      samples.push_back(Seconds(start));
      tally.Record(stats, n);
    }
    std::sort(samples.begin(), samples.end());
    times.push_back(samples[samples.size() / 2]);
    detail += " n=" + std::to_string(n) + ":" + std::to_string(times.back());
  }
  bool ratios_ok = true;
  std::string ratios;
  for (size_t k = 1; k < times.size(); ++k) {
    const double ratio = times[k] / std::max(times[k - 1], 1e-9);
    ratios += " " + std::to_string(ratio);
    ratios_ok = ratios_ok && ratio <= 12.0;
  }
  report.Add("work-bound", tally.bound_failures == 0 && ratios_ok,
             std::to_string(tally.bound_failures) +
                 " runs above 6n+2 vertices per permutation" +
                 (tally.first_bound_failure.empty()
                      ? ""
                      : " (" + tally.first_bound_failure + ")") +
                 "; median s" + detail + "; doubling ratios" + ratios +
                 " (limit 3 x 4 = 12)");
}

void Snarks(Report& report) {
  bool ok = true;
  std::string detail;
  double worst = 0.0;
  for (int k : {3, 5}) {
    const BinaryProgram bp = GenerateSnark(k);
    for (SymmetryMode m : AllSymmetryModes()) {
      int64_t fixings = 0;
      for (RelabelStrategy r :
           {RelabelStrategy::kOriginal, RelabelStrategy::kMax,
            RelabelStrategy::kMin, RelabelStrategy::kRespect}) {
        Settings s;
        s.mode = m;
        s.relabel = r;
        s.time_limit_seconds = 300.0;
        const SolveResult result = Solve(bp, s);
        worst = std::max(worst, result.seconds);
        ok = ok && result.status == SolveStatus::kInfeasible;
        const bool needs_fixing = k == 5 && (m == SymmetryMode::kGroup ||
                                             m == SymmetryMode::kNoPeek ||
                                             m == SymmetryMode::kPeek);
        if (needs_fixing && result.symmetry_fixings < 1) ok = false;
        fixings += result.symmetry_fixings;
      }
      if (k == 5) detail += " " + ToString(m) + ":" + std::to_string(fixings);
    }
  }
  report.Add("flower-snarks", ok,
             "J3, J5 x 20 settings all infeasible, slowest " +
                 std::to_string(worst) +
                 " s (limit 300 s); J5 symmetry fixings over relabelings" +
                 detail + " (each group/nopeek/peek run >= 1)");
}

void SolverCorrectness(Report& report, testing::Rng& rng) {
  constexpr int kPrograms = 200;
  const auto start = Clock::now();
  int agree = 0;
  int infeasible = 0;
  std::string first_mismatch;
  for (int t = 0; t < kPrograms; ++t) {
    const int n = 3 + static_cast<int>(rng() % 13);
    const BinaryProgram bp = testing::RandomSymmetricProgram(rng, n);
    const EnumerationOptimum want = SolveByEnumeration(bp);
    infeasible += !want.feasible;
    bool all = true;
    for (SymmetryMode m : AllSymmetryModes()) {
      for (RelabelStrategy r :
           {RelabelStrategy::kOriginal, RelabelStrategy::kMax,
            RelabelStrategy::kMin, RelabelStrategy::kRespect}) {
        Settings s;
        s.mode = m;
        s.relabel = r;
        const SolveResult got = Solve(bp, s);
        bool same = (got.status == SolveStatus::kOptimal) == want.feasible;
        if (same && want.feasible) {
          same = got.objective == want.objective &&
                 bp.IsFeasible(got.incumbent) &&
                 bp.Objective(got.incumbent) == got.objective;
        }
        if (!same && first_mismatch.empty()) {
          first_mismatch = " first mismatch: program " + std::to_string(t) +
                           " " + ToString(m) + "/" + ToString(r);
        }
        all = all && same;
      }
    }
    agree += all;
  }
  const double t = Seconds(start);
  report.Add("solver-correctness", agree == kPrograms && t < 120.0,
             std::to_string(agree) + "/" + std::to_string(kPrograms) +
                 " programs match enumeration in all 20 settings (" +
                 std::to_string(infeasible) + " infeasible), " +
                 std::to_string(t) + " s (limit 120 s, exact)" +
                 first_mismatch);
}

void RelabelExample(Report& report) {
  const std::vector<Permutation> gens = {
      Permutation::FromCycleString(9, "(1,8,7,3)"),
      Permutation::FromCycleString(9, "(3,4,5,8)"),
      Permutation::FromCycleString(9, "(2,5,6,9,4)")};
  const RelabelPlan plan = Relabel(gens, RelabelStrategy::kRespect);
  std::string map;
  std::vector<int> labels;
  for (int i = 0; i < 9; ++i) {
    labels.push_back(plan.labeling(i) + 1);
    map += (i ? "," : "") + std::to_string(labels.back());
  }
  const bool ok = labels == std::vector<int>{1, 5, 4, 9, 6, 7, 3, 2, 8} &&
                  Conjugate(gens[0], plan.labeling).ToString() == "(1,2,3,4)" &&
                  Conjugate(gens[2], plan.labeling).ToString() == "(5,6,7,8,9)";
  report.Add("relabel-example", ok, "[" + map + "] (exact)");
}

}  // namespace
}  // namespace symprop

int main(int argc, char** argv) {
  using namespace symprop;
  const uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20261016;
  std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
  testing::Rng rng(seed);
  Report report;
  Tally tally;
  ExampleOne(report, tally);
  ExampleTwo(report);
  SetPropagation(report, tally, rng);
  CyclicPropagation(report, report, tally, rng);
  Invariants(report, tally, rng);
  WorkBound(report, tally, rng);
  Snarks(report);
  SolverCorrectness(report, rng);
  RelabelExample(report);
  return report.all_pass() ? 0 : 1;
}
