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

#ifndef SYMPROP_EXPERIMENT_H_
#define SYMPROP_EXPERIMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "symprop/solver.h"

namespace symprop {

struct ExperimentGrid {
  // File paths, or "snark:K" for a generated flower snark.
  std::vector<std::string> instances;
  std::vector<SymmetryMode> modes;
  std::vector<RelabelStrategy> relabels;
  std::vector<uint64_t> seeds;
  double time_limit_seconds = 0.0;
  int workers = 1;
  double shift = 10.0;
  Safeguard safeguard;
};

// JSON object with keys instances, modes, relabels, seeds and optionally
// time_limit, workers, shift. Throws ParseError.
ExperimentGrid ParseGrid(const std::string& json_text);

struct RunRecord {
  std::string instance;
  SymmetryMode mode;
  RelabelStrategy relabel;
  uint64_t seed;
  std::string status;  // solve status, or "error"
  double seconds = 0.0;  // time-limit runs enter at the limit
  int64_t nodes = 0;
  int64_t fixings = 0;
  double symmetry_seconds = 0.0;
  std::string error;
};

struct SettingSummary {
  SymmetryMode mode;
  RelabelStrategy relabel;
  double shifted_geomean = 0.0;
  int solved = 0;
  int runs = 0;
  double total_seconds = 0.0;
  double symmetry_seconds = 0.0;
  double symmetry_percent = 0.0;
};

struct ExperimentReport {
  std::vector<RunRecord> rows;  // sorted (instance, mode, relabel, seed)
  std::vector<SettingSummary> summaries;
};

// (prod (t_i + shift))^(1/n) - shift. Throws std::invalid_argument on an
// empty list.
double ShiftedGeometricMean(const std::vector<double>& times, double shift);

// Throws std::invalid_argument if any grid axis is empty.
ExperimentReport RunExperiment(const ExperimentGrid& grid);

// Tab-separated run rows followed by a summary block.
std::string FormatReport(const ExperimentReport& report);

}  // namespace symprop

#endif  // SYMPROP_EXPERIMENT_H_
