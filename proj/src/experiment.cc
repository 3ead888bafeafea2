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

#include "symprop/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "symprop/errors.h"
#include "symprop/instance_io.h"
#include "symprop/snark.h"

namespace symprop {
namespace {

using json = nlohmann::json;

BinaryProgram LoadInstance(const std::string& source) {
  constexpr std::string_view kSnark = "snark:";
  if (source.rfind(kSnark, 0) == 0) {
    return GenerateSnark(std::stoi(source.substr(kSnark.size())));
  }
  return ReadInstanceFile(source);
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string OneLine(std::string s) {
  std::replace_if(s.begin(), s.end(),
                  [](char c) { return c == '\t' || c == '\n' || c == '\r'; },
                  ' ');
  return s;
}

}  // namespace

ExperimentGrid ParseGrid(const std::string& json_text) {
  ExperimentGrid grid;
  try {
    const json doc = json::parse(json_text);
    static const std::vector<std::string> known = {
        "instances", "modes", "relabels", "seeds",
        "time_limit", "workers", "shift"};
    for (const auto& [key, value] : doc.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        throw ParseError("unknown grid key '" + key + "'");
      }
    }
    grid.instances = doc.at("instances").get<std::vector<std::string>>();
    for (const auto& m : doc.at("modes")) {
      grid.modes.push_back(ParseSymmetryMode(m.get<std::string>()));
    }
    for (const auto& r : doc.at("relabels")) {
      grid.relabels.push_back(ParseRelabelStrategy(r.get<std::string>()));
    }
    grid.seeds = doc.at("seeds").get<std::vector<uint64_t>>();
    grid.time_limit_seconds = doc.value("time_limit", 0.0);
    grid.workers = doc.value("workers", 1);
    grid.shift = doc.value("shift", 10.0);
  } catch (const json::exception& e) {
    throw ParseError(std::string("grid: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("grid: ") + e.what());
  }
  if (grid.workers < 1) throw ParseError("grid: workers must be >= 1");
  return grid;
}

double ShiftedGeometricMean(const std::vector<double>& times, double shift) {
  if (times.empty()) {
    throw std::invalid_argument("shifted geometric mean of an empty list");
  }
  double log_sum = 0.0;
  for (double t : times) log_sum += std::log(t + shift);
  return std::exp(log_sum / static_cast<double>(times.size())) - shift;
}

ExperimentReport RunExperiment(const ExperimentGrid& grid) {
  if (grid.instances.empty() || grid.modes.empty() || grid.relabels.empty() ||
      grid.seeds.empty()) {
    throw std::invalid_argument("experiment grid has an empty axis");
  }
  std::vector<std::unique_ptr<BinaryProgram>> programs;
  std::vector<std::string> load_errors;
  for (const std::string& source : grid.instances) {
    try {
      programs.push_back(std::make_unique<BinaryProgram>(LoadInstance(source)));
      load_errors.emplace_back();
    } catch (const std::exception& e) {
      programs.push_back(nullptr);
      load_errors.emplace_back(e.what());
    }
  }

  struct Task {
    size_t instance;
    SymmetryMode mode;
    RelabelStrategy relabel;
    uint64_t seed;
  };
  std::vector<Task> tasks;
  for (size_t i = 0; i < grid.instances.size(); ++i) {
    for (SymmetryMode m : grid.modes) {
      for (RelabelStrategy r : grid.relabels) {
        for (uint64_t s : grid.seeds) tasks.push_back({i, m, r, s});
      }
    }
  }

  std::vector<RunRecord> rows(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < tasks.size(); k = next++) {
      const Task& t = tasks[k];
      RunRecord& row = rows[k];
      row.instance = grid.instances[t.instance];
      row.mode = t.mode;
      row.relabel = t.relabel;
      row.seed = t.seed;
      if (!programs[t.instance]) {
        row.status = "error";
        row.error = load_errors[t.instance];
        continue;
      }
      Settings settings;
      settings.mode = t.mode;
      settings.relabel = t.relabel;
      settings.seed = t.seed;
      settings.time_limit_seconds = grid.time_limit_seconds;
      settings.safeguard = grid.safeguard;
      try {
        const SolveResult r = Solve(*programs[t.instance], settings);
        row.status = ToString(r.status);
        row.seconds = r.status == SolveStatus::kTimeLimit
                          ? grid.time_limit_seconds
                          : r.seconds;
        row.nodes = r.nodes;
        row.fixings = r.symmetry_fixings;
        row.symmetry_seconds = r.symmetry_seconds;
      } catch (const std::exception& e) {
        row.status = "error";
        row.error = e.what();
      }
    }
  };
  const int count =
      std::max(1, std::min<int>(grid.workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 0; w < count; ++w) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();

  auto key = [](const RunRecord& r) {
    return std::make_tuple(r.instance, static_cast<int>(r.mode),
                           static_cast<int>(r.relabel), r.seed);
  };
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const RunRecord& a, const RunRecord& b) {
                     return key(a) < key(b);
                   });

  ExperimentReport report;
  report.rows = rows;
  for (SymmetryMode m : grid.modes) {
    for (RelabelStrategy r : grid.relabels) {
      SettingSummary s{m, r};
      std::vector<double> times;
      for (const RunRecord& row : rows) {
        if (row.mode != m || row.relabel != r || row.status == "error") {
          continue;
        }
        times.push_back(row.seconds);
        ++s.runs;
        if (row.status != "timelimit") ++s.solved;
        s.total_seconds += row.seconds;
        s.symmetry_seconds += row.symmetry_seconds;
      }
      if (!times.empty()) s.shifted_geomean = ShiftedGeometricMean(times, grid.shift);
      if (s.total_seconds > 0) {
        s.symmetry_percent = 100.0 * s.symmetry_seconds / s.total_seconds;
      }
      report.summaries.push_back(s);
    }
  }
  return report;
}

std::string FormatReport(const ExperimentReport& report) {
  std::string out =
      "instance\tmode\trelabel\tseed\tstatus\ttime\tnodes\tfixings\tsymtime\t"
      "error\n";
  for (const RunRecord& r : report.rows) {
    out += r.instance + "\t" + ToString(r.mode) + "\t" + ToString(r.relabel) +
           "\t" + std::to_string(r.seed) + "\t" + r.status + "\t" +
           Fixed(r.seconds, 4) + "\t" + std::to_string(r.nodes) + "\t" +
           std::to_string(r.fixings) + "\t" + Fixed(r.symmetry_seconds, 4) +
           "\t" + OneLine(r.error) + "\n";
  }
  out += "\n# summary\nmode\trelabel\ttime\tS\truns\ttotal\tsymtime\tsympct\n";
  for (const SettingSummary& s : report.summaries) {
    out += ToString(s.mode) + "\t" + ToString(s.relabel) + "\t" +
           Fixed(s.shifted_geomean, 4) + "\t" + std::to_string(s.solved) +
           "\t" + std::to_string(s.runs) + "\t" + Fixed(s.total_seconds, 4) +
           "\t" + Fixed(s.symmetry_seconds, 4) + "\t" +
           Fixed(s.symmetry_percent, 1) + "\n";
  }
  return out;
}

}  // namespace symprop
