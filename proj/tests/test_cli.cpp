// Copyright 2026 The stablegraph Authors
//
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "stablegraph/serialization.hpp"
#include "support/golden.hpp"

namespace stablegraph {
namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = SGRAPH_FIXTURE_DIR;
const fs::path kGolden = SGRAPH_GOLDEN_DIR;

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "sgraph_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::vector<testing::GoldenCase> all_cases() {
  return testing::load_golden_cases(kGolden, kFixtures, scratch_dir());
}

class GoldenTest : public ::testing::TestWithParam<testing::GoldenCase> {};

TEST_P(GoldenTest, StdoutAndExitCode) {
  const auto& c = GetParam();
  const auto r = testing::run_cli(c.args);
  const fs::path expected_file = kGolden / (c.name + ".out");
  // Set SGRAPH_UPDATE_GOLDEN=1 to rewrite the expected files after review.
  if (std::getenv("SGRAPH_UPDATE_GOLDEN")) {
    std::ofstream(expected_file, std::ios::binary) << r.out;
  }
  EXPECT_EQ(r.exit_code, c.exit_code) << r.err;
  EXPECT_EQ(r.out, testing::read_text(expected_file));
  if (r.exit_code != 0 && !r.out.empty()) {
    // Domain failures still print a machine-readable result.
    EXPECT_EQ(r.exit_code, 1);
  }
  if (r.exit_code == 2) {
    EXPECT_TRUE(r.out.empty());
  }
  // Deterministic: a second run is byte-identical.
  EXPECT_EQ(testing::run_cli(c.args).out, r.out);
}

INSTANTIATE_TEST_SUITE_P(Cli, GoldenTest, ::testing::ValuesIn(all_cases()),
                         [](const auto& info) { return info.param.name; });

TEST(CliTest, JsonOutputsParseStrictly) {
  for (const auto& c : all_cases()) {
    if (c.args.empty() || c.args.front() == "dot") continue;
    const auto r = testing::run_cli(c.args);
    if (r.out.empty()) continue;
    EXPECT_TRUE(Json::accept(r.out)) << c.name;
  }
}

TEST(CliTest, DiagnosticsGoToStderr) {
  const auto loud = testing::run_cli({"topo", (kFixtures / "cycle3.json").string()});
  EXPECT_EQ(loud.exit_code, 1);
  EXPECT_TRUE(loud.out.empty());
  EXPECT_NE(loud.err.find("sgraph: "), std::string::npos);
  const auto quiet = testing::run_cli({"--quiet", "topo", (kFixtures / "cycle3.json").string()});
  EXPECT_EQ(quiet.exit_code, 1);
  EXPECT_TRUE(quiet.err.empty());
}

TEST(CliTest, GeneratedFileReadsBack) {
  const fs::path out = scratch_dir() / "lattice.json";
  const auto r = testing::run_cli(
      {"generate", "hexagonal-lattice", "--rows", "2", "--cols", "2", "-o", out.string()});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "{\"nodes\":16,\"edges\":19}\n");
  const JsonGraph g = read_graph_file(out);
  EXPECT_EQ(g.node_count(), 16u);
  EXPECT_EQ(g.edge_count(), 19u);
}

TEST(CliTest, OutFlagRedirectsResult) {
  const fs::path out = scratch_dir() / "topo.json";
  const auto r = testing::run_cli({"-o", out.string(), "topo", (kFixtures / "diamond.json").string()});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(testing::read_text(out), "[0,1,2,3]\n");
}

TEST(CliTest, HelpExitsCleanly) {
  const auto r = testing::run_cli({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("subisomorphic"), std::string::npos);
  EXPECT_EQ(testing::run_cli({"layout", "--help"}).exit_code, 0);
}

}  // namespace
}  // namespace stablegraph
