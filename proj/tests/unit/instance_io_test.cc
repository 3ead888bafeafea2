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

#include "symprop/instance_io.h"

#include <cstdio>
#include <filesystem>

#include "gtest/gtest.h"
#include "symprop/errors.h"
#include "symprop/snark.h"

namespace symprop {
namespace {

constexpr char kSmall[] = R"(# a comment
name: small
n: 4
variables: a b c d
objective: 1:1.5 3:-2
row: 1:1 2:1 <= 1
row: 2:1 3:1 4:1 = 1   # trailing comment
row: 1:1 4:1 >= 1
generator: (1,2)(3,4)
)";

TEST(InstanceIoTest, ParsesSmallInstance) {
  const BinaryProgram bp = ParseInstance(kSmall);
  EXPECT_EQ(bp.name, "small");
  EXPECT_EQ(bp.n, 4);
  EXPECT_EQ(bp.objective, (std::vector<double>{1.5, 0, -2, 0}));
  ASSERT_EQ(bp.rows.size(), 3u);
  EXPECT_EQ(bp.rows[1].sense, RowSense::kEqual);
  // >= rows are stored negated.
  EXPECT_EQ(bp.rows[2].rhs, -1.0);
  EXPECT_EQ(bp.rows[2].terms[0].coefficient, -1.0);
  ASSERT_EQ(bp.generators.size(), 1u);
  EXPECT_EQ(bp.generators[0].ToString(), "(1,2)(3,4)");
}

TEST(InstanceIoTest, RoundTrip) {
  const BinaryProgram small = ParseInstance(kSmall);
  EXPECT_EQ(ParseInstance(FormatInstance(small)), small);
  BinaryProgram snark = GenerateSnark(5);
  EXPECT_EQ(ParseInstance(FormatInstance(snark)), snark);
  snark.objective[3] = 0.1 + 0.2;
  EXPECT_EQ(ParseInstance(FormatInstance(snark)), snark);
}

TEST(InstanceIoTest, FileRoundTrip) {
  const auto path =
      std::filesystem::temp_directory_path() / "symprop_io_test.txt";
  const BinaryProgram bp = GenerateSnark(3);
  WriteInstanceFile(bp, path.string());
  EXPECT_EQ(ReadInstanceFile(path.string()), bp);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadInstanceFile(path.string()), ParseError);
}

TEST(InstanceIoTest, GeneratorErrors) {
  EXPECT_THROW(ParseInstance("n: 3\ngenerator: (1,2,1)\n"), ValidationError);
  EXPECT_THROW(ParseInstance("n: 3\ngenerator: (1,4)\n"), ValidationError);
  EXPECT_THROW(ParseInstance("n: 3\ngenerator: (1,2\n"), ParseError);
}

TEST(InstanceIoTest, MalformedDocuments) {
  EXPECT_THROW(ParseInstance("n: 3\ncolor: red\n"), ParseError);
  EXPECT_THROW(ParseInstance("objective: 1:1\nn: 3\n"), ParseError);
  EXPECT_THROW(ParseInstance("name: x\n"), ParseError);
  EXPECT_THROW(ParseInstance("n: 3\nn: 3\n"), ParseError);
  EXPECT_THROW(ParseInstance("n: 3\nrow: 1:1 4:1 <= 1\n"), ParseError);
  EXPECT_THROW(ParseInstance("n: 3\nrow: 1:1 1:1 <= 1\n"), ParseError);
  EXPECT_THROW(ParseInstance("n: 3\nrow: 1:1 < 1\n"), ParseError);
  EXPECT_THROW(ParseInstance("n: 3\nvariables: a b\n"), ParseError);
  EXPECT_THROW(ParseInstance("n: 3\nobjective: 1:x\n"), ParseError);
  try {
    ParseInstance("n: 2\n\nbogus\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(InstanceIoTest, RejectsUnwritableNames) {
  BinaryProgram bp;
  bp.n = 1;
  bp.objective = {0.0};
  bp.variable_names = {"a b"};
  EXPECT_THROW(FormatInstance(bp), ValidationError);
}

}  // namespace
}  // namespace symprop
