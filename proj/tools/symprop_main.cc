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

// symprop command line: solve, propagate, oracle, gen-snark, experiment.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symprop/errors.h"
#include "symprop/experiment.h"
#include "symprop/instance_io.h"
#include "symprop/oracle.h"
#include "symprop/snark.h"
#include "symprop/solver.h"

namespace {

using namespace symprop;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitTimeLimit = 2;
constexpr int kExitUsage = 64;

FixState FixingsFromLists(int n, const std::vector<int>& fix0,
                          const std::vector<int>& fix1) {
  std::vector<int> zeros;
  std::vector<int> ones;
  for (int i : fix0) {
    if (i < 1 || i > n) throw ValidationError("fix0 index out of range");
    zeros.push_back(i - 1);
  }
  for (int i : fix1) {
    if (i < 1 || i > n) throw ValidationError("fix1 index out of range");
    ones.push_back(i - 1);
  }
  auto state = FixState::FromSets(n, zeros, ones);
  if (!state) throw ValidationError("fix0 and fix1 overlap");
  return *state;
}

std::string IndexList(const std::vector<int>& indices) {
  std::string out = "{";
  for (size_t k = 0; k < indices.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(indices[k] + 1);
  }
  return out + "}";
}

void PrintDelta(const FixState& before, const PropagationResult& after) {
  if (after.infeasible()) {
    std::cout << "status: infeasible\n";
    return;
  }
  std::vector<int> new0;
  std::vector<int> new1;
  for (int i = 0; i < before.size(); ++i) {
    if (before.IsFixed(i)) continue;
    if (after.fixings.Is(i, 0)) new0.push_back(i);
    if (after.fixings.Is(i, 1)) new1.push_back(i);
  }
  std::cout << "status: feasible\n"
            << "new fixed0: " << IndexList(new0) << "\n"
            << "new fixed1: " << IndexList(new1) << "\n"
            << "fixed0: " << IndexList(after.fixings.Fixed0()) << "\n"
            << "fixed1: " << IndexList(after.fixings.Fixed1()) << "\n";
}

std::vector<Permutation> GroupPermutations(const BinaryProgram& bp,
                                           const Safeguard& safeguard) {
  std::vector<Permutation> out;
  for (const Permutation& g : bp.generators) {
    if (g.IsIdentity()) continue;
    for (Permutation& p :
         GroupElements(g, safeguard.max_powers, safeguard.max_weight)) {
      if (std::find(out.begin(), out.end(), p) == out.end()) {
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry propagation for binary programs"};
  app.set_config("--config", "", "TOML/INI file providing flag defaults");
  app.require_subcommand(1);

  std::string instance;
  std::string mode_name = "peek";
  std::string relabel_name = "original";
  uint64_t seed = 0;
  double time_limit = 0.0;
  std::vector<int> fix0;
  std::vector<int> fix1;
  int snark_n = 0;
  std::string out_path;
  std::string grid_path;
  int workers = 0;
  bool parallel = false;
  bool print_solution = false;

  const std::vector<std::string> modes = {"nosym", "gen", "group", "nopeek",
                                          "peek"};
  const std::vector<std::string> relabels = {"original", "max", "min",
                                             "respect"};

  auto* solve = app.add_subcommand("solve", "Branch-and-bound solve");
  solve->add_option("--instance", instance, "Instance file")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--mode", mode_name)->check(CLI::IsMember(modes));
  solve->add_option("--relabel", relabel_name)->check(CLI::IsMember(relabels));
  solve->add_option("--seed", seed);
  solve->add_option("--time-limit", time_limit, "Seconds, 0 = none");
  solve->add_flag("--print-solution", print_solution);

  auto* propagate =
      app.add_subcommand("propagate", "Node propagation from given fixings");
  propagate->add_option("--instance", instance)
      ->required()
      ->check(CLI::ExistingFile);
  propagate->add_option("--fix0", fix0, "1-based indices")->delimiter(',');
  propagate->add_option("--fix1", fix1, "1-based indices")->delimiter(',');
  propagate->add_option("--mode", mode_name)->check(CLI::IsMember(modes));

  auto* oracle = app.add_subcommand(
      "oracle", "Complete fixings by enumeration over the generated powers");
  oracle->add_option("--instance", instance)
      ->required()
      ->check(CLI::ExistingFile);
  oracle->add_option("--fix0", fix0)->delimiter(',');
  oracle->add_option("--fix1", fix1)->delimiter(',');
  oracle->add_flag("--parallel", parallel, "Split enumeration over threads");

  auto* gen = app.add_subcommand("gen-snark", "Write a flower snark instance");
  gen->add_option("--n", snark_n, "Odd n >= 3")->required();
  gen->add_option("--out", out_path)->required();

  auto* experiment = app.add_subcommand("experiment", "Run a grid");
  experiment->add_option("--grid", grid_path, "JSON grid file")
      ->required()
      ->check(CLI::ExistingFile);
  experiment->add_option("--out", out_path, "Report file")->required();
  experiment->add_option("--workers", workers, "Override grid workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Safeguard safeguard = Safeguard::FromEnvironment();
    if (*solve) {
      const BinaryProgram bp = ReadInstanceFile(instance);
      Settings settings;
      settings.mode = ParseSymmetryMode(mode_name);
      settings.relabel = ParseRelabelStrategy(relabel_name);
      settings.seed = seed;
      settings.time_limit_seconds = time_limit;
      settings.safeguard = safeguard;
      const SolveResult r = Solve(bp, settings);
      std::cout << "status: " << ToString(r.status) << "\n";
      if (r.has_incumbent) std::cout << "objective: " << r.objective << "\n";
      std::cout << "nodes: " << r.nodes << "\n"
                << "symmetry fixings: " << r.symmetry_fixings << "\n"
                << "time: " << r.seconds << "\n"
                << "symmetry time: " << r.symmetry_seconds << "\n";
      if (print_solution && r.has_incumbent) {
        std::cout << "solution:";
        for (int i = 0; i < bp.n; ++i) {
          if (!r.incumbent[i]) continue;
          std::cout << " "
                    << (bp.variable_names.empty() ? std::to_string(i + 1)
                                                  : bp.variable_names[i]);
        }
        std::cout << "\n";
      }
      switch (r.status) {
        case SolveStatus::kOptimal:
          return kExitOk;
        case SolveStatus::kInfeasible:
          return kExitInfeasible;
        case SolveStatus::kTimeLimit:
          return kExitTimeLimit;
      }
    }
    if (*propagate) {
      const BinaryProgram bp = ReadInstanceFile(instance);
      const FixState start = FixingsFromLists(bp.n, fix0, fix1);
      Settings settings;
      settings.mode = ParseSymmetryMode(mode_name);
      settings.safeguard = safeguard;
      const PropagationResult r = NodePropagate(bp, start, settings);
      PrintDelta(start, r);
      return r.feasible() ? kExitOk : kExitInfeasible;
    }
    if (*oracle) {
      const BinaryProgram bp = ReadInstanceFile(instance);
      const FixState start = FixingsFromLists(bp.n, fix0, fix1);
      const PropagationResult r = CompleteFixingsOracle(
          GroupPermutations(bp, safeguard), start, kDefaultOracleCap, parallel);
      PrintDelta(start, r);
      return r.feasible() ? kExitOk : kExitInfeasible;
    }
    if (*gen) {
      WriteInstanceFile(GenerateSnark(snark_n), out_path);
      std::cout << "wrote " << out_path << "\n";
      return kExitOk;
    }
    if (*experiment) {
      std::ifstream in(grid_path);
      std::stringstream text;
      text << in.rdbuf();
      ExperimentGrid grid = ParseGrid(text.str());
      grid.safeguard = safeguard;
      if (workers > 0) grid.workers = workers;
      const ExperimentReport report = RunExperiment(grid);
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
      out << FormatReport(report);
      std::cout << "wrote " << report.rows.size() << " runs to " << out_path
                << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
