// Copyright 2026 The Strategem Authors.
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

#include "commands.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "scenario_files.h"

namespace strategem {
namespace {

using testing::read_scenario;

CommandOptions machine() {
  CommandOptions o;
  o.format = OutputFormat::kMachine;
  return o;
}

Json output_json(const CommandResult& r) { return Json::parse(r.output); }

TEST(CmdBuildTest, BinaryScenario) {
  const CommandResult r = cmd_build(read_scenario("intro_binary"), "intro", machine());
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  const Json m = output_json(r)["matrix"];
  EXPECT_EQ(m["entries"], Json::parse("[[2.0, 0.0, -1.0], [1.0, -1.0, -2.0]]"));
  EXPECT_EQ(m["rows"], Json::parse(R"(["A", "B"])"));
}

TEST(CmdBuildTest, RealScenarioEntryAD) {
  const CommandResult r = cmd_build(read_scenario("real"), "real", machine());
  ASSERT_EQ(r.exit_code, kExitOk);
  EXPECT_NEAR(output_json(r)["matrix"]["entries"][0][1].get<double>(), 0.08, 1e-9);
}

TEST(CmdBuildTest, IntervalRuleOnBinaryProfilesIsScaleError) {
  CommandOptions o = machine();
  o.rule = PayoffRule::kInterval;
  const CommandResult r = cmd_build(read_scenario("intro_binary"), "intro.json", o);
  EXPECT_EQ(r.exit_code, kExitInvalid);
  EXPECT_TRUE(r.output.empty());
  EXPECT_EQ(r.error.rfind("intro.json:2: ScaleError: ", 0), 0u) << r.error;
}

TEST(CmdBuildTest, PeriodWeighting) {
  CommandOptions o = machine();
  o.period = 0;
  const CommandResult r = cmd_build(read_scenario("monthly"), "monthly", o);
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  // Period 0: C 0.9, D 0.1, E 0.5 -> D weight 3 * 0.1 / 1.5 = 0.2.
  EXPECT_NEAR(output_json(r)["matrix"]["entries"][0][1].get<double>(), 0.08 * 0.2, 1e-12);

  const CommandResult missing = cmd_build(read_scenario("real"), "real", o);
  EXPECT_EQ(missing.exit_code, kExitInvalid);
}

TEST(CmdSolveTest, ExitCodeContract) {
  const CommandResult binary = cmd_solve(read_scenario("intro_binary"), "intro", machine());
  EXPECT_EQ(binary.exit_code, kExitNegativeValue);
  EXPECT_EQ(output_json(binary)["solution"]["value"].get<double>(), -1.0);
  EXPECT_TRUE(output_json(binary)["withdraw"].get<bool>());

  const CommandResult real = cmd_solve(read_scenario("real"), "real", machine());
  EXPECT_EQ(real.exit_code, kExitOk);
  EXPECT_NEAR(output_json(real)["solution"]["value"].get<double>(), 0.08, 1e-9);

  CommandOptions strict = machine();
  strict.dominance = Dominance::kStrict;
  const CommandResult mixed = cmd_solve(read_scenario("added_strategy_x"), "x", strict);
  EXPECT_EQ(mixed.exit_code, kExitOk);
  EXPECT_EQ(output_json(mixed)["solution"]["kind"], "mixed");
  EXPECT_NEAR(output_json(mixed)["solution"]["value"].get<double>(), 0.14, 1e-9);

  const CommandResult bad = cmd_solve(read_scenario("mixed_scales"), "m.json", machine());
  EXPECT_EQ(bad.exit_code, kExitInvalid);
  EXPECT_EQ(bad.error.rfind("m.json:8: MixedScaleError", 0), 0u) << bad.error;

  const CommandResult garbage = cmd_solve("{\n  \"scheme\": \n", "g.json", machine());
  EXPECT_EQ(garbage.exit_code, kExitInvalid);
  EXPECT_EQ(garbage.error.rfind("g.json:", 0), 0u);
}

TEST(CmdSolveTest, TextOutput) {
  const CommandResult r = cmd_solve(read_scenario("intro_binary"), "intro", {});
  EXPECT_NE(r.output.find("pure saddle at (A,E)"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("row B eliminated"), std::string::npos);
  EXPECT_NE(r.output.find("withdraw"), std::string::npos);
}

TEST(CmdSolveTest, IntervalRuleReportsBounds) {
  const CommandResult r = cmd_solve(read_scenario("intervals"), "iv", machine());
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  const Json j = output_json(r);
  EXPECT_LE(j["bounds"]["low"].get<double>(), j["solution"]["value"].get<double>());
  EXPECT_GE(j["bounds"]["high"].get<double>(), j["solution"]["value"].get<double>());
  EXPECT_TRUE(j["matrix"]["entries"][0][0].is_array());
}

TEST(CmdTimelineTest, UniformTenPeriodsAreIdentical) {
  Json doc = Json::parse(read_scenario("real"));
  Json pp;
  for (const char* t : {"C", "D", "E"}) pp[t] = std::vector<double>(10, 0.4);
  doc["timeline"] = {{"periods", 10}, {"pp", pp}};
  const CommandResult r = cmd_timeline(doc.dump(2), "uniform", machine());
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  const Json periods = output_json(r)["series"]["periods"];
  ASSERT_EQ(periods.size(), 10u);
  for (const auto& p : periods) EXPECT_EQ(p["value"], periods[0]["value"]);
}

TEST(CmdTimelineTest, MissingTimelineExits2) {
  const CommandResult r = cmd_timeline(read_scenario("real"), "real", machine());
  EXPECT_EQ(r.exit_code, kExitInvalid);
  EXPECT_NE(r.error.find("ConfigError"), std::string::npos);
}

TEST(CmdTimelineTest, RisingThreatShowsInSeries) {
  const CommandResult r = cmd_timeline(read_scenario("monthly"), "monthly", {});
  ASSERT_EQ(r.exit_code, kExitOk);
  std::istringstream lines(r.output);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "# period value kind saddle");
  double previous = -1;
  std::size_t period;
  double value;
  std::string kind, saddle;
  int rows = 0;
  while (lines >> period >> value >> kind >> saddle) {
    EXPECT_GT(value, previous);
    previous = value;
    ++rows;
  }
  EXPECT_EQ(rows, 6);

  CommandOptions one = machine();
  one.period = 2;
  const Json single = output_json(cmd_timeline(read_scenario("monthly"), "monthly", one));
  EXPECT_EQ(single["series"]["periods"].size(), 1u);
  EXPECT_EQ(single["series"]["periods"][0]["period"], 2);
}

TEST(CmdWhatifTest, Sensitivity) {
  CommandOptions o = machine();
  o.entry = {{"A", "D"}};
  o.delta = 0.0;
  const Json zero = output_json(cmd_whatif(read_scenario("real"), "real", o));
  EXPECT_EQ(zero["sensitivity"]["change"].get<double>(), 0.0);

  o.delta = 0.05;
  const Json up = output_json(cmd_whatif(read_scenario("real"), "real", o));
  EXPECT_GE(up["sensitivity"]["change"].get<double>(), 0.0);

  o.entry = {{"A", "Q"}};
  EXPECT_EQ(cmd_whatif(read_scenario("real"), "real", o).exit_code, kExitInvalid);
}

TEST(CmdWhatifTest, BudgetSearch) {
  CommandOptions o = machine();
  o.budget = 0.0;
  o.step = 0.05;
  const Json nominal = output_json(cmd_whatif(read_scenario("intervals"), "iv", o));
  EXPECT_EQ(nominal["result"]["delta"].get<double>(), 0.0);

  o.budget.reset();
  const Json open = output_json(cmd_whatif(read_scenario("intervals"), "iv", o));
  const Json solved = output_json(cmd_solve(read_scenario("intervals"), "iv", machine()));
  EXPECT_EQ(open["result"]["achieved"], solved["bounds"]["high"]);

  o.budget = 0.1;
  const CommandResult scalar = cmd_whatif(read_scenario("real"), "real", o);
  EXPECT_EQ(scalar.exit_code, kExitInvalid);
  EXPECT_NE(scalar.error.find("ScaleError"), std::string::npos);

  o.step = 10.0;
  EXPECT_EQ(cmd_whatif(read_scenario("intervals"), "iv", o).exit_code, kExitInvalid);
}

// The installed binary, driven through the shell.
class CliTest : public ::testing::Test {
 protected:
  static int run(const std::string& args, std::string* out = nullptr) {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string capture = (dir / ("strategem_cli_" + std::to_string(counter_++))).string();
    const std::string command =
        std::string(STRATEGEM_CLI) + " " + args + " >" + capture + " 2>&1";
    const int status = std::system(command.c_str());
    if (out) {
      std::ifstream in(capture);
      std::ostringstream text;
      text << in.rdbuf();
      *out = text.str();
    }
    std::remove(capture.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  static inline int counter_ = 0;
};

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run("solve " + testing::scenario_path("intro_binary")), 3);
  EXPECT_EQ(run("solve " + testing::scenario_path("real")), 0);
  EXPECT_EQ(run("solve " + testing::scenario_path("added_strategy_x")), 0);
  std::string out;
  EXPECT_EQ(run("solve " + testing::scenario_path("mixed_scales"), &out), 2);
  EXPECT_NE(out.find("mixed_scales.json:8: MixedScaleError"), std::string::npos) << out;
  EXPECT_EQ(run("build --rule interval " + testing::scenario_path("intro_binary")), 2);
  EXPECT_EQ(run("solve /nonexistent/file.json"), 2);
  EXPECT_EQ(run("solve --rule fuzzy " + testing::scenario_path("real")), 2);
  EXPECT_EQ(run("--help"), 0);
}

TEST_F(CliTest, MachineOutputMatchesLibraryReport) {
  std::string out;
  ASSERT_EQ(run("solve --format machine " + testing::scenario_path("real"), &out), 0);
  EXPECT_EQ(out, cmd_solve(read_scenario("real"), "real", machine()).output);
}

TEST_F(CliTest, OutFlagWritesFile) {
  const std::string target =
      (std::filesystem::temp_directory_path() / "strategem_cli_out.json").string();
  std::remove(target.c_str());
  ASSERT_EQ(run("build --format machine --out " + target + " " +
                testing::scenario_path("intro_binary")),
            0);
  std::ifstream in(target);
  std::ostringstream text;
  text << in.rdbuf();
  EXPECT_EQ(Json::parse(text.str())["command"], "build");
  std::remove(target.c_str());
}

TEST_F(CliTest, WhatifFlags) {
  std::string out;
  ASSERT_EQ(run("whatif --entry A,D --delta 0.05 " + testing::scenario_path("real"), &out), 0);
  EXPECT_NE(out.find("change: 0.05"), std::string::npos) << out;
  ASSERT_EQ(run("whatif --budget 0 --step 0.05 " + testing::scenario_path("intervals"), &out),
            0);
  EXPECT_NE(out.find("delta: 0"), std::string::npos) << out;
  EXPECT_EQ(run("whatif --entry A --delta 1 " + testing::scenario_path("real")), 2);
}

}  // namespace
}  // namespace strategem
