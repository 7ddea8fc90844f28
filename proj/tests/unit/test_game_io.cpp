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

#include "contestq/errors.hpp"
#include "contestq/game_io.hpp"
#include "contestq/instances.hpp"
#include "contestq/payments.hpp"
#include "contestq/solvers.hpp"
#include "oracles.hpp"

namespace contestq {
namespace {

TEST(GameIo, EmitParseRoundTripsTheCatalog) {
  for (const auto& name : InstanceNames()) {
    const ContestGame g = Build(*ParseInstanceId(name)).game;
    const std::string text = EmitGame(g);
    const ContestGame back = ParseGame(text);
    EXPECT_EQ(EmitGame(back), text) << name;
    ForEachProfile(g.num_players(), g.num_qualities(), [&](const Profile& p) {
      for (int i = 0; i < g.num_players(); ++i) {
        EXPECT_EQ(Utility(g, p, i), Utility(back, p, i));
      }
      return true;
    });
  }
}

TEST(GameIo, RoundTripsRandomFamiliesAndReductions) {
  for (auto f : {RandomFamily::kObliviousInvariant, RandomFamily::kConcaveSpecific,
                 RandomFamily::kConcaveInvariant}) {
    const ContestGame g = RandomGame(3, 3, 2, f);
    EXPECT_EQ(EmitGame(ParseGame(EmitGame(g))), EmitGame(g));
  }
  const NormalFormGame nf{2, 2, {{1, 0, 0, 1}, {0, 1, 1, 0}}};
  const ContestGame r = ReduceFromNormalForm(nf, {1, 1}, {1, 2}, CostFunction::Product());
  EXPECT_EQ(EmitGame(ParseGame(EmitGame(r))), EmitGame(r));
}

TEST(GameIo, ParsesAHandWrittenFile) {
  const ContestGame g = ParseGame(R"({
    "n": 2, "Q": 3, "skills": ["3/19", "3/31"], "efforts": ["1", "2", 3],
    "participation": "mandatory",
    "cost": {"kind": "table", "values": [["1", "2", "3"], ["1", "2", "4"]]},
    "payment": {"type": "ktop", "K": 2}})");
  EXPECT_EQ(g.skill(1), Rational(3, 31));
  EXPECT_EQ(g.Cost(1, 3), Rational(4));
  EXPECT_EQ(PaymentKindName(g.payment_function()), "ktop");
}

TEST(GameIo, StrictParsing) {
  const std::string base =
      R"("n": 2, "Q": 2, "skills": ["1", "1"], "efforts": ["1", "2"],
         "participation": "mandatory", "cost": {"kind": "product"})";
  EXPECT_NO_THROW(ParseGame("{" + base + R"(, "payment": {"type": "proportional"}})"));
  EXPECT_THROW(ParseGame("{" + base + R"(, "payment": {"type": "proportional"}, "x": 1})"),
               InputError);
  EXPECT_THROW(ParseGame("{" + base + R"(, "payment": {"type": "proportional", "K": 1}})"),
               InputError);
  EXPECT_THROW(ParseGame("{" + base + R"(, "payment": {"type": "shapley"}})"), InputError);
  EXPECT_THROW(ParseGame("{" + base + "}"), InputError);
  EXPECT_THROW(ParseGame("{"), InputError);
  EXPECT_THROW(ParseGame(R"({"n": 2, "Q": 2, "skills": ["1", "1/0"], "efforts": ["1", "2"],
      "participation": "mandatory", "cost": {"kind": "product"},
      "payment": {"type": "proportional"}})"),
               InputError);
  EXPECT_THROW(ParseGame(R"({"n": 3, "Q": 2, "skills": ["1", "1"], "efforts": ["1", "2"],
      "participation": "mandatory", "cost": {"kind": "product"},
      "payment": {"type": "proportional"}})"),
               InputError);
  EXPECT_THROW(ParseGame(R"({"n": 2, "Q": 2, "skills": [1, 1], "efforts": [1.5, 2],
      "participation": "mandatory", "cost": {"kind": "product"},
      "payment": {"type": "proportional"}})"),
               InputError);
}

TEST(GameIo, ProfilesAndLoads) {
  EXPECT_EQ(ParseProfile("1,2,3"), Profile({1, 2, 3}));
  EXPECT_EQ(ParseLoads("L:2,1,0"), LoadVector({2, 1, 0}));
  EXPECT_TRUE(std::holds_alternative<LoadVector>(ParseState("L:1,1")));
  EXPECT_TRUE(std::holds_alternative<Profile>(ParseState("1,1")));
  for (const char* bad : {"", "1,,2", "1,", "a", "1;2", "L:1,-1"}) {
    EXPECT_THROW(ParseState(bad), InputError) << bad;
  }
  EXPECT_EQ(ParseProfileJson("[2, 1]"), Profile({2, 1}));
  EXPECT_EQ(ParseProfileJson(R"({"method": "brute", "profile": [1, 3]})"),
            Profile({1, 3}));
  EXPECT_THROW(ParseProfileJson(R"({"profile": null})"), InputError);
}

}  // namespace
}  // namespace contestq
