// Copyright 2026 The contestq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "contestq/game_io.hpp"
#include "contestq/instances.hpp"

namespace contestq {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "contestq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("contestq_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string Path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SolveCounterexampleOneReportsNoEquilibrium) {
  const std::string game = Write("ce1.json", EmitGame(Build(InstanceId::kCounterexample1).game));
  const CliRun r = Cli({"solve", "--game", game, "--method", "brute"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "no pure Nash equilibrium (9 profiles scanned)\n");
  EXPECT_NE(r.err.find("time:"), std::string::npos);
}

TEST_F(CliTest, VerifyUniqueProportionalEquilibrium) {
  const std::string game = Write("g.json", R"({"n": 2, "Q": 2, "skills": ["1", "1"],
    "efforts": ["1", "2"], "participation": "mandatory", "cost": {"kind": "product"},
    "payment": {"type": "proportional"}})");
  EXPECT_EQ(Cli({"verify", "--game", game, "--profile", "1,1"}).code, 0);
  const CliRun bad = Cli({"verify", "--game", game, "--profile", "2,2"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("player 1"), std::string::npos);
  EXPECT_EQ(Cli({"verify", "--game", game, "--profile", "L:2,0"}).code, 0);
}

TEST_F(CliTest, GraphDotHasTwoSinks) {
  const std::string fip = Path("fip.json");
  ASSERT_EQ(Cli({"instance", "fip-voluntary", "--n", "3", "--q", "3", "--emit", fip}).code, 0);
  const std::string dot = Path("out.dot");
  const CliRun r = Cli({"graph", "--game", fip, "--anonymous", "--dot", dot});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sinks (2): L:3,0,0, L:2,1,0"), std::string::npos);
  const std::string text = ReadFile(dot);
  std::size_t count = 0;
  for (auto pos = text.find("doublecircle"); pos != std::string::npos;
       pos = text.find("doublecircle", pos + 1)) {
    ++count;
  }
  EXPECT_EQ(count, 2u);
}

TEST_F(CliTest, JsonSolutionFeedsVerify) {
  const std::string game = Path("high_skill.json");
  ASSERT_EQ(Cli({"instance", "high-skill", "--emit", game}).code, 0);
  for (const char* method : {"brute", "contiguous", "all-at-one"}) {
    const CliRun solved = Cli({"solve", "--game", game, "--method", method, "--format", "json"});
    ASSERT_EQ(solved.code, 0) << method << solved.err;
    const std::string file = Write("solution.json", solved.out);
    EXPECT_EQ(Cli({"verify", "--game", game, "--profile-file", file}).code, 0);
  }
}

TEST_F(CliTest, PotentialMethod) {
  const std::string game = Write("es.json", R"({"n": 3, "Q": 2, "skills": ["1", "1", "1"],
    "efforts": ["1", "2"], "participation": "mandatory", "cost": {"kind": "product"},
    "payment": {"type": "equal_sharing"}})");
  const CliRun r = Cli({"solve", "--game", game, "--method", "potential", "--start", "2,2,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pure Nash equilibrium: "), std::string::npos);
  const std::string ce1 = Write("ce1.json", EmitGame(Build(InstanceId::kCounterexample1).game));
  EXPECT_EQ(Cli({"solve", "--game", ce1, "--method", "potential"}).code, 2);
}

TEST_F(CliTest, IdenticalInputsGiveIdenticalOutput) {
  const std::string game = Path("fip.json");
  ASSERT_EQ(Cli({"instance", "fip-voluntary", "--n", "4", "--emit", game}).code, 0);
  const std::vector<std::string> args{"dynamics", "--game", game, "--policy", "random",
                                      "--seed", "17", "--start", "3,3,3,3"};
  const CliRun a = Cli(args);
  const CliRun b = Cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, DynamicsFindsTheMatchingPenniesCycle) {
  const std::string game = Path("mp.json");
  ASSERT_EQ(Cli({"instance", "matching-pennies", "--emit", game}).code, 0);
  const CliRun r = Cli({"dynamics", "--game", game, "--start", "1,2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("1,2 -> 1,1 -> 2,1 -> 2,2 -> 1,2"), std::string::npos);
  EXPECT_NE(r.out.find("cycle length: 4"), std::string::npos);
}

TEST_F(CliTest, ConcavityClassifyAndVerifyCommands) {
  const std::string mp = Path("mp.json");
  ASSERT_EQ(Cli({"instance", "matching-pennies", "--emit", mp}).code, 0);
  EXPECT_EQ(Cli({"concavity", "--game", mp}).code, 1);
  const CliRun c = Cli({"classify", "--game", mp, "--format", "json"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("\"player_invariant\": false"), std::string::npos);
  EXPECT_EQ(Cli({"instance", "ce2", "--k", "3", "--verify"}).code, 0);
  const CliRun emitted = Cli({"instance", "ce1"});
  EXPECT_EQ(emitted.code, 0);
  EXPECT_NE(emitted.out.find("\"player_invariant\""), std::string::npos);
}

TEST_F(CliTest, UsageAndInputErrorsExitTwo) {
  EXPECT_EQ(Cli({}).code, 2);
  EXPECT_EQ(Cli({"solve"}).code, 2);
  EXPECT_EQ(Cli({"solve", "--game", Path("missing.json")}).code, 2);
  EXPECT_EQ(Cli({"instance", "nope"}).code, 2);
  const std::string game = Write("bad.json", R"({"n": 2})");
  EXPECT_EQ(Cli({"classify", "--game", game}).code, 2);
  const std::string ce1 = Write("ce1.json", EmitGame(Build(InstanceId::kCounterexample1).game));
  EXPECT_EQ(Cli({"verify", "--game", ce1, "--profile", "1,4"}).code, 2);
  EXPECT_EQ(Cli({"solve", "--game", ce1, "--method", "brute", "--max-profiles", "5"}).code, 2);
}

TEST_F(CliTest, EnvironmentCapOverride) {
  const std::string ce1 = Write("ce1.json", EmitGame(Build(InstanceId::kCounterexample1).game));
  ::setenv("CONTESTQ_CAP", "4", 1);
  const CliRun capped = Cli({"solve", "--game", ce1});
  ::setenv("CONTESTQ_CAP", "bogus", 1);
  const CliRun bogus = Cli({"solve", "--game", ce1});
  ::unsetenv("CONTESTQ_CAP");
  EXPECT_EQ(capped.code, 2);
  EXPECT_NE(capped.err.find("cap"), std::string::npos);
  EXPECT_EQ(bogus.code, 2);
  EXPECT_EQ(Cli({"solve", "--game", ce1}).code, 1);
}

}  // namespace
}  // namespace contestq
