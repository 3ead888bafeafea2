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

#include <stdexcept>

#include "gtest/gtest.h"
#include "symprop/errors.h"

namespace symprop {
namespace {

TEST(ShiftedGeomeanTest, Examples) {
  EXPECT_NEAR(ShiftedGeometricMean({10, 10}, 10), 10.0, 1e-12);
  EXPECT_NEAR(ShiftedGeometricMean({0, 30}, 10), 10.0, 1e-12);
  EXPECT_THROW(ShiftedGeometricMean({}, 10), std::invalid_argument);
}

TEST(ExperimentTest, EmptyGridRejected) {
  ExperimentGrid grid;
  EXPECT_THROW(RunExperiment(grid), std::invalid_argument);
}

TEST(ExperimentTest, RunsFullGridInOrder) {
  const ExperimentGrid grid = ParseGrid(R"({
    "instances": ["snark:5", "snark:3", "missing-file.txt"],
    "modes": ["peek", "nosym"],
    "relabels": ["respect", "original"],
    "seeds": [2, 1],
    "workers": 3
  })");
  const ExperimentReport report = RunExperiment(grid);
  ASSERT_EQ(report.rows.size(), 24u);
  EXPECT_EQ(report.rows.front().instance, "missing-file.txt");
  EXPECT_EQ(report.rows.front().status, "error");
  EXPECT_EQ(report.rows[8].instance, "snark:3");
  EXPECT_EQ(report.rows[8].mode, SymmetryMode::kNoSym);
  EXPECT_EQ(report.rows[8].relabel, RelabelStrategy::kOriginal);
  EXPECT_EQ(report.rows[8].seed, 1u);
  for (size_t k = 8; k < report.rows.size(); ++k) {
    EXPECT_EQ(report.rows[k].status, "infeasible");
  }
  ASSERT_EQ(report.summaries.size(), 4u);
  for (const SettingSummary& s : report.summaries) {
    EXPECT_EQ(s.runs, 4);
    EXPECT_EQ(s.solved, 4);
  }
  const std::string text = FormatReport(report);
  EXPECT_NE(text.find("# summary"), std::string::npos);
}

TEST(ExperimentTest, TimeLimitRunsEnterAtLimit) {
  ExperimentGrid grid;
  grid.instances = {"snark:11"};
  grid.modes = {SymmetryMode::kNoSym};
  grid.relabels = {RelabelStrategy::kOriginal};
  grid.seeds = {0};
  grid.time_limit_seconds = 0.001;
  const ExperimentReport report = RunExperiment(grid);
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].status, "timelimit");
  EXPECT_EQ(report.rows[0].seconds, 0.001);
  EXPECT_EQ(report.summaries[0].solved, 0);
}

TEST(ExperimentTest, GridErrors) {
  EXPECT_THROW(ParseGrid("{"), ParseError);
  EXPECT_THROW(ParseGrid(R"({"instances": [], "modes": ["fast"],
                             "relabels": [], "seeds": []})"),
               ParseError);
  EXPECT_THROW(ParseGrid(R"({"instances": [], "modes": [], "relabels": [],
                             "seeds": [], "colour": 1})"),
               ParseError);
}

}  // namespace
}  // namespace symprop
