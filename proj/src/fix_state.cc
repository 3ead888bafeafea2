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

#include "symprop/fix_state.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symprop {
namespace {

std::string JoinOneBased(const std::vector<int>& indices) {
  std::ostringstream out;
  out << '{';
  for (size_t k = 0; k < indices.size(); ++k) {
    if (k > 0) out << ',';
    out << indices[k] + 1;
  }
  out << '}';
  return out.str();
}

}  // namespace

std::string Fixing::ToString() const {
  return "(" + std::to_string(entry + 1) + "," + std::to_string(value) + ")";
}

Conjunction::Conjunction(std::vector<Fixing> fixings) {
  for (const Fixing& f : fixings) Add(f);
}

void Conjunction::Add(Fixing f) {
  auto it = std::lower_bound(
      fixings_.begin(), fixings_.end(), f,
      [](const Fixing& a, const Fixing& b) { return a.entry < b.entry; });
  if (it != fixings_.end() && it->entry == f.entry) {
    throw std::invalid_argument("conjunction already has a fixing on entry " +
                                std::to_string(f.entry + 1));
  }
  fixings_.insert(it, f);
}

bool Conjunction::Contains(Fixing f) const {
  return std::binary_search(fixings_.begin(), fixings_.end(), f);
}

bool Conjunction::IsSubsetOf(const Conjunction& other) const {
  return std::includes(other.fixings_.begin(), other.fixings_.end(),
                       fixings_.begin(), fixings_.end());
}

std::string Conjunction::ToString() const {
  std::string out = "{";
  for (size_t k = 0; k < fixings_.size(); ++k) {
    if (k > 0) out += ",";
    out += fixings_[k].ToString();
  }
  return out + "}";
}

std::optional<FixState> FixState::FromSets(int n, const std::vector<int>& zeros,
                                           const std::vector<int>& ones) {
  FixState state(n);
  for (int i : zeros) {
    if (i < 0 || i >= n) throw std::out_of_range("fixing index out of range");
    state.values_[i] = 0;
  }
  for (int i : ones) {
    if (i < 0 || i >= n) throw std::out_of_range("fixing index out of range");
    if (state.values_[i] == 0) return std::nullopt;
    state.values_[i] = 1;
  }
  return state;
}

void FixState::Fix(int i, int b) {
  if (values_[i] == 1 - b) {
    throw std::logic_error("entry " + std::to_string(i + 1) +
                           " is already fixed to " + std::to_string(1 - b));
  }
  values_[i] = static_cast<int8_t>(b);
}

std::vector<int> FixState::Fixed0() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (values_[i] == 0) out.push_back(i);
  }
  return out;
}

std::vector<int> FixState::Fixed1() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (values_[i] == 1) out.push_back(i);
  }
  return out;
}

std::vector<int> FixState::Unfixed() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (values_[i] == kUnfixed) out.push_back(i);
  }
  return out;
}

int FixState::NumFixed() const {
  return static_cast<int>(std::count_if(
      values_.begin(), values_.end(), [](int8_t v) { return v != kUnfixed; }));
}

bool FixState::IsSubsetOf(const FixState& other) const {
  if (other.size() != size()) return false;
  for (int i = 0; i < size(); ++i) {
    if (values_[i] != kUnfixed && other.values_[i] != values_[i]) return false;
  }
  return true;
}

std::string FixState::ToString() const {
  return "I0=" + JoinOneBased(Fixed0()) + " I1=" + JoinOneBased(Fixed1());
}

bool SameOutcome(const PropagationResult& a, const PropagationResult& b) {
  if (a.status != b.status) return false;
  return a.infeasible() || a.fixings == b.fixings;
}

std::string ToString(const PropagationResult& result) {
  if (result.infeasible()) return "Infeasible";
  return "Feasible " + result.fixings.ToString();
}

}  // namespace symprop
