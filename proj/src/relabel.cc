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

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symprop/cyclic.h"
#include "symprop/errors.h"

namespace symprop {
namespace {

size_t LargestCycle(const std::vector<std::vector<int>>& cycles) {
  size_t best = 0;
  for (const auto& c : cycles) best = std::max(best, c.size());
  return best;
}

}  // namespace

std::string ToString(RelabelStrategy strategy) {
  switch (strategy) {
    case RelabelStrategy::kOriginal:
      return "original";
    case RelabelStrategy::kMax:
      return "max";
    case RelabelStrategy::kMin:
      return "min";
    case RelabelStrategy::kRespect:
      return "respect";
  }
  return "original";
}

RelabelStrategy ParseRelabelStrategy(const std::string& name) {
  if (name == "original") return RelabelStrategy::kOriginal;
  if (name == "max") return RelabelStrategy::kMax;
  if (name == "min") return RelabelStrategy::kMin;
  if (name == "respect") return RelabelStrategy::kRespect;
  throw std::invalid_argument("unknown relabel strategy '" + name + "'");
}

RelabelPlan Relabel(const std::vector<Permutation>& generators,
                    RelabelStrategy strategy) {
  if (generators.empty()) {
    throw std::invalid_argument("relabel needs at least one generator");
  }
  const int n = generators[0].size();
  for (const Permutation& g : generators) {
    if (g.size() != n) throw DimensionError("generators differ in size");
  }
  RelabelPlan plan{Permutation::Identity(n), strategy, {}};
  if (strategy == RelabelStrategy::kOriginal) return plan;

  struct Item {
    int index;
    std::vector<std::vector<int>> cycles;
    size_t largest;
    uint64_t order;
    int min_entry;
  };
  std::vector<Item> items;
  for (int k = 0; k < static_cast<int>(generators.size()); ++k) {
    auto cycles = generators[k].Cycles();
    if (cycles.empty()) continue;
    const int min_entry = cycles.front().front();
    items.push_back({k, cycles, LargestCycle(cycles), generators[k].Order(),
                     min_entry});
  }
  if (strategy == RelabelStrategy::kRespect) {
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& a, const Item& b) {
                       return a.min_entry < b.min_entry;
                     });
  } else {
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& a, const Item& b) {
                       if (a.largest != b.largest) return a.largest > b.largest;
                       return a.order > b.order;
                     });
  }

  std::vector<int> label(n, -1);
  int next = 0;
  for (Item& item : items) {
    const bool touched =
        std::any_of(item.cycles.begin(), item.cycles.end(), [&](const auto& c) {
          return std::any_of(c.begin(), c.end(),
                             [&](int i) { return label[i] != -1; });
        });
    if (touched) continue;
    auto by_min = [](const auto& a, const auto& b) {
      return a.front() < b.front();
    };
    switch (strategy) {
      case RelabelStrategy::kMax:
        std::stable_sort(item.cycles.begin(), item.cycles.end(),
                         [&](const auto& a, const auto& b) {
                           if (a.size() != b.size()) return a.size() > b.size();
                           return by_min(a, b);
                         });
        break;
      case RelabelStrategy::kMin:
        std::stable_sort(item.cycles.begin(), item.cycles.end(),
                         [&](const auto& a, const auto& b) {
                           if (a.size() != b.size()) return a.size() < b.size();
                           return by_min(a, b);
                         });
        break;
      default:
        std::stable_sort(item.cycles.begin(), item.cycles.end(), by_min);
        break;
    }
    for (const auto& cycle : item.cycles) {
      for (int i : cycle) label[i] = next++;
    }
    plan.relabeled.push_back(item.index);
  }
  for (int i = 0; i < n; ++i) {
    if (label[i] == -1) label[i] = next++;
  }
  plan.labeling = Permutation(std::move(label));
  return plan;
}

Permutation Conjugate(const Permutation& perm, const Permutation& labeling) {
  if (perm.size() != labeling.size()) {
    throw DimensionError("conjugate: sizes differ");
  }
  std::vector<int> image(perm.size());
  for (int i = 0; i < perm.size(); ++i) image[labeling(i)] = labeling(perm(i));
  return Permutation(std::move(image));
}

}  // namespace symprop
