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

// Serial vs OpenMP complete-fixings enumeration, and set propagation vs
// running each permutation on its own.

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "symprop/fix_state.h"
#include "symprop/oracle.h"
#include "symprop/permutation.h"
#include "symprop/propagate_set.h"

namespace symprop {
namespace {

std::vector<Permutation> CyclePowers(int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = (i + 1) % n;
  return GroupElements(Permutation(image), n, int64_t{1} << 40);
}

FixState SparseZeros(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  FixState f(n);
  for (int i = n / 2; i < n; ++i) {
    if (rng() % 4 == 0) f.Fix(i, 0);
  }
  return f;
}

void BM_OracleSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto perms = CyclePowers(n);
  const FixState f(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CompleteFixingsOracle(perms, f, n, false));
  }
}
BENCHMARK(BM_OracleSerial)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);

void BM_OracleParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto perms = CyclePowers(n);
  const FixState f(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CompleteFixingsOracle(perms, f, n, true));
  }
}
BENCHMARK(BM_OracleParallel)
    ->DenseRange(14, 20, 3)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_PropagateSet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto perms = CyclePowers(n);
  const FixState f = SparseZeros(n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(PropagateSet(perms, f));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_PropagateSet)
    ->RangeMultiplier(2)
    ->Range(32, 512)
    ->Complexity(benchmark::oNSquared);

void BM_PropagateEach(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto perms = CyclePowers(n);
  const FixState f = SparseZeros(n, 7);
  for (auto _ : state) {
    FixState current = f;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Permutation& p : perms) {
        const auto r = PropagateSet({p}, current);
        if (r.infeasible()) break;
        changed = changed || !(r.fixings == current);
        current = r.fixings;
      }
    }
    benchmark::DoNotOptimize(current);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_PropagateEach)
    ->RangeMultiplier(2)
    ->Range(32, 512)
    ->Complexity(benchmark::oNCubed);

}  // namespace
}  // namespace symprop

BENCHMARK_MAIN();
