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

#include "symprop/cyclic.h"

#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "random_instances.h"
#include "symprop/errors.h"
#include "symprop/oracle.h"
#include "symprop/propagate_set.h"

namespace symprop {
namespace {

CyclicSubgroup FiveCycle() {
  return CyclicSubgroup::Generated(
      Permutation::FromCycleString(5, "(1,2,3,4,5)"));
}

TEST(CyclicSubgroupTest, ClosureAndValidation) {
  const Permutation g = Permutation::FromCycleString(6, "(1,2,3,4,5,6)");
  EXPECT_TRUE(CyclicSubgroup(g, {2, 4}).IsClosed());
  EXPECT_FALSE(CyclicSubgroup(g, {2}).IsClosed());
  EXPECT_THROW(CyclicSubgroup(g, {6}), ValidationError);
  EXPECT_THROW(CyclicSubgroup::Generated(g, 3), CapacityError);
  EXPECT_EQ(CyclicSubgroup::Generated(g).num_elements(), 5);
}

TEST(CyclicSubgroupTest, Stabilizers) {
  const Permutation g = Permutation::FromCycleString(4, "(1,2)(3,4)");
  const CyclicSubgroup group = CyclicSubgroup::Generated(g);
  EXPECT_TRUE(StabPointwise(group, {0}).trivial());
  EXPECT_EQ(StabSetwisePair(group, {0, 1}, {2, 3}).num_elements(), 1);
}

TEST(MonotoneGroupTest, ExampleTwoCompleteFixings) {
  const FixState f = *FixState::FromSets(5, {1, 4}, {});
  const auto r = CompleteFixMonotoneGroup(FiveCycle(), f);
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.fixings.ToString(), "I0={2,4,5} I1={}");
}

TEST(MonotoneGroupTest, ExampleTwoWitness) {
  const FixState f = *FixState::FromSets(5, {1, 3, 4}, {});
  EXPECT_TRUE(GroupFeasibleMonotone(FiveCycle(), f));
  const BitVector x = FeasibilityWitness(FiveCycle(), f);
  // 1 on the fixed-1 entries and on the first unfixed entry only.
  EXPECT_EQ(BitsToString(x), "10000");
  EXPECT_TRUE(IsLexLeader(x, FiveCycle()));
  EXPECT_TRUE(IsLexLeader({1, 0, 1, 0, 0}, FiveCycle()));
}

TEST(MonotoneGroupTest, RejectsUnsupportedGroups) {
  const auto bad = CyclicSubgroup::Generated(
      Permutation::FromCycleString(4, "(1,3,2,4)"));
  EXPECT_THROW(CompleteFixMonotoneGroup(bad, FixState(4)),
               UnsupportedGroupError);
  const auto two = CyclicSubgroup::Generated(
      Permutation::FromCycleString(4, "(1,2)(3,4)"));
  EXPECT_THROW(CompleteFixMonotoneGroup(two, FixState(4)),
               UnsupportedGroupError);
  const Permutation g = Permutation::FromCycleString(6, "(1,2,3,4,5,6)");
  EXPECT_THROW(CompleteFixMonotoneGroup(CyclicSubgroup(g, {2}), FixState(6)),
               UnsupportedGroupError);
}

TEST(MonotoneGroupTest, MatchesOracleAndIsIdempotent) {
  testing::Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const CyclicSubgroup group = testing::RandomMonotoneGroup(rng, n);
    const FixState f = testing::RandomFixings(rng, n);
    const auto got = CompleteFixMonotoneGroup(group, f);
    const auto want = CompleteFixingsOracle(group.Elements(), f);
    ASSERT_TRUE(SameOutcome(got, want)) << group.generator().ToString();
    if (got.feasible()) {
      EXPECT_TRUE(SameOutcome(got, CompleteFixMonotoneGroup(group, got.fixings)));
    }
  }
}

TEST(OrderedMonotoneTest, SingleBlockEqualsMonotoneAlgorithm) {
  testing::Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const CyclicSubgroup group = testing::RandomMonotoneGroup(rng, n);
    const FixState f = testing::RandomFixings(rng, n);
    EXPECT_TRUE(SameOutcome(PropagateOrderedMonotone(group, f, 0, true),
                            CompleteFixMonotoneGroup(group, f)));
  }
}

TEST(OrderedMonotoneTest, MatchesOracle) {
  testing::Rng rng(4);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const CyclicSubgroup group = testing::RandomOrderedMonotoneGroup(rng, n);
    const FixState f = testing::RandomFixings(rng, n);
    const auto want = CompleteFixingsOracle(group.Elements(), f);
    ASSERT_TRUE(SameOutcome(PropagateOrderedMonotone(group, f, 0, true), want))
        << group.generator().ToString() << " " << f.ToString();
    // Without peeking feasibility is still decided exactly.
    EXPECT_EQ(PropagateOrderedMonotone(group, f, 0, false).feasible(),
              want.feasible());
  }
}

TEST(OrderedMonotoneTest, ArgumentErrors) {
  const auto group = CyclicSubgroup::Generated(
      Permutation::FromCycleString(7, "(1,2,3)(4,5,6,7)"));
  EXPECT_THROW(PropagateOrderedMonotone(group, FixState(7), 3, true),
               std::invalid_argument);
  EXPECT_THROW(PropagateOrderedMonotone(group, FixState(6), 0, true),
               DimensionError);
  const auto unordered = CyclicSubgroup::Generated(
      Permutation::FromCycleString(4, "(1,3)(2,4)"));
  EXPECT_THROW(PropagateOrderedMonotone(unordered, FixState(4), 0, true),
               UnsupportedGroupError);
}

TEST(RelabelTest, RespectExample) {
  const Permutation g1 = Permutation::FromCycleString(9, "(1,8,7,3)");
  const Permutation g2 = Permutation::FromCycleString(9, "(3,4,5,8)");
  const Permutation g3 = Permutation::FromCycleString(9, "(2,5,6,9,4)");
  const RelabelPlan plan = Relabel({g1, g2, g3}, RelabelStrategy::kRespect);
  std::vector<int> labels;
  for (int i = 0; i < 9; ++i) labels.push_back(plan.labeling(i) + 1);
  EXPECT_EQ(labels, (std::vector<int>{1, 5, 4, 9, 6, 7, 3, 2, 8}));
  EXPECT_EQ(Conjugate(g1, plan.labeling).ToString(), "(1,2,3,4)");
  EXPECT_EQ(Conjugate(g2, plan.labeling).ToString(), "(2,4,9,6)");
  EXPECT_EQ(Conjugate(g3, plan.labeling).ToString(), "(5,6,7,8,9)");
  EXPECT_EQ(plan.relabeled, (std::vector<int>{0, 2}));
}

TEST(RelabelTest, DisjointGeneratorsBecomeOrdered) {
  const Permutation a = Permutation::FromCycleString(8, "(1,5)(2,7,4)");
  const Permutation b = Permutation::FromCycleString(8, "(3,8,6)");
  for (RelabelStrategy s : {RelabelStrategy::kMax, RelabelStrategy::kMin,
                            RelabelStrategy::kRespect}) {
    const RelabelPlan plan = Relabel({a, b}, s);
    EXPECT_TRUE(MonotoneOrderedDecomposition(Conjugate(a, plan.labeling)));
    EXPECT_TRUE(MonotoneOrderedDecomposition(Conjugate(b, plan.labeling)));
  }
}

TEST(RelabelTest, MaxAndMinOrderCycles) {
  const Permutation g = Permutation::FromCycleString(5, "(1,2)(3,4,5)");
  const Permutation max = Conjugate(g, Relabel({g}, RelabelStrategy::kMax).labeling);
  const Permutation min = Conjugate(g, Relabel({g}, RelabelStrategy::kMin).labeling);
  EXPECT_EQ(max.ToString(), "(1,2,3)(4,5)");
  EXPECT_EQ(min.ToString(), "(1,2)(3,4,5)");
}

TEST(RelabelTest, FirstProcessedGeneratorIsOrdered) {
  testing::Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const auto gens = testing::RandomPermutations(rng, n, 3);
    for (RelabelStrategy s : {RelabelStrategy::kMax, RelabelStrategy::kMin,
                              RelabelStrategy::kRespect}) {
      const RelabelPlan plan = Relabel(gens, s);
      ASSERT_FALSE(plan.relabeled.empty());
      for (int k : plan.relabeled) {
        EXPECT_TRUE(MonotoneOrderedDecomposition(
            Conjugate(gens[k], plan.labeling)));
      }
    }
  }
}

TEST(RelabelTest, OriginalIsIdentity) {
  const Permutation g = Permutation::FromCycleString(4, "(1,3)");
  EXPECT_TRUE(Relabel({g}, RelabelStrategy::kOriginal).labeling.IsIdentity());
  EXPECT_EQ(ParseRelabelStrategy("respect"), RelabelStrategy::kRespect);
  EXPECT_THROW(ParseRelabelStrategy("sideways"), std::invalid_argument);
}

}  // namespace
}  // namespace symprop
