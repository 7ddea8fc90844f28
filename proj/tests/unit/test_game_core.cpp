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

#include <random>

#include "contestq/combinatorics.hpp"
#include "contestq/dynamics.hpp"
#include "contestq/errors.hpp"
#include "contestq/game.hpp"
#include "contestq/instances.hpp"
#include "oracles.hpp"

namespace contestq {
namespace {

std::vector<Rational> R(std::initializer_list<int> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

ContestGame ProportionalGame(std::vector<Rational> s, std::vector<Rational> f) {
  const Participation part = f.front().IsZero() ? Participation::kVoluntary
                                                : Participation::kMandatory;
  return ContestGame(std::move(s), std::move(f), part, CostFunction::Product(),
                     Proportional{});
}

TEST(LoadOf, CountsPlayersPerQuality) {
  EXPECT_EQ(LoadOf(Profile({1, 2}), 3).counts()[0], 1);
  EXPECT_EQ(LoadOf(Profile({1, 2}), 3), LoadVector({1, 1, 0}));
  EXPECT_EQ(LoadOf(Profile({2, 2, 2}), 2), LoadVector({0, 3}));
  EXPECT_EQ(LoadOf(Profile({1, 1, 2, 3}), 3), LoadVector({2, 1, 1}));
}

TEST(LoadOf, SumsToPlayerCountOnRandomProfiles) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int q = 2 + static_cast<int>(rng() % 4);
    std::vector<int> p(n);
    for (int& x : p) x = 1 + static_cast<int>(rng() % q);
    EXPECT_EQ(LoadOf(Profile(p), q).total(), n);
  }
}

TEST(Formatting, ProfilesAndLoads) {
  EXPECT_EQ(FormatProfile(Profile({1, 2, 3})), "1,2,3");
  EXPECT_EQ(FormatLoads(LoadVector({2, 1, 0})), "L:2,1,0");
}

TEST(Utility, CounterexampleOneValues) {
  const ContestGame g = Build(InstanceId::kCounterexample1).game;
  EXPECT_EQ(Utility(g, Profile({1, 1}), 1), Rational(1, 6));
  EXPECT_EQ(Utility(g, Profile({1, 2}), 1), Rational(1, 3));
}

TEST(Utility, MatchingPenniesValues) {
  const ContestGame g = Build(InstanceId::kMatchingPennies).game;
  // Player 2 is paid 1000 when matched; player 1 only 10.
  EXPECT_EQ(Utility(g, Profile({1, 1}), 1), Rational(999));
  EXPECT_EQ(Utility(g, Profile({1, 1}), 0), Rational(9));
  EXPECT_EQ(Utility(g, Profile({2, 1}), 0), Rational(998));
}

TEST(Utility, IsDeterministic) {
  const ContestGame g = Build(InstanceId::kCounterexample2, {.k = 3}).game;
  for (const auto& p : oracle::AllTuples(2, 4)) {
    EXPECT_EQ(Utility(g, Profile(p), 0), Utility(g, Profile(p), 0));
  }
}

TEST(IsPne, CounterexampleOneWitness) {
  const ContestGame g = Build(InstanceId::kCounterexample1).game;
  const PneCheck c = CheckPne(g, Profile({1, 2}));
  EXPECT_FALSE(c.is_pne);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(c.witness->player, 0u);
  EXPECT_EQ(c.witness->target, 3);
  EXPECT_GT(c.witness->gain, Rational(0));
}

TEST(IsPne, ProportionalMandatoryUniqueEquilibrium) {
  const ContestGame g = ProportionalGame(R({1, 1}), R({1, 2}));
  const auto u = [&](const std::vector<int>& p, int i) {
    return oracle::ProportionalUtility(R({1, 1}), R({1, 2}), p, i);
  };
  const auto expected = oracle::PneSet(2, 2, u);
  ASSERT_EQ(expected, (std::vector<std::vector<int>>{{1, 1}}));
  for (const auto& p : oracle::AllTuples(2, 2)) {
    EXPECT_EQ(IsPne(g, Profile(p)), p == expected.front());
  }
}

TEST(IsPne, ConstantZeroPaymentsFavorLowestQuality) {
  PlayerSpecificTable table;
  table.form = PlayerSpecificTable::KeyForm::kProfile;
  for (const auto& p : oracle::AllTuples(2, 2)) {
    for (int i = 0; i < 2; ++i) table.values[{i, p, 0}] = Rational(0);
  }
  const ContestGame g(R({1, 1}), R({1, 2}), Participation::kMandatory,
                      CostFunction::Product(), table);
  EXPECT_TRUE(IsPne(g, Profile({1, 1})));
  EXPECT_FALSE(IsPne(g, Profile({2, 1})));
}

TEST(IsPne, FalseExactlyWhenAnImprovementStepExists) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ContestGame g = RandomGame(seed, 3, 3, RandomFamily::kProportional);
    ForEachProfile(3, 3, [&](const Profile& p) {
      EXPECT_EQ(IsPne(g, p), ImprovementSteps(g, p).empty());
      return true;
    });
  }
}

TEST(BestResponse, PicksTheUtilityMaximizer) {
  const ContestGame g = Build(InstanceId::kCounterexample1).game;
  // Player 2 facing quality 3: 1/2 - 1 at 3, -1/3 at 1, -2/3 at 2.
  EXPECT_EQ(BestResponse(g, Profile({3, 3}), 1), 1);
}

TEST(ContestGame, RejectsInvalidShapes) {
  EXPECT_THROW(ProportionalGame(R({1}), R({1, 2})), InputError);
  EXPECT_THROW(ProportionalGame(R({1, 1}), R({1})), InputError);
  EXPECT_THROW(ProportionalGame(R({1, 0}), R({1, 2})), InputError);
  EXPECT_THROW(ProportionalGame(R({1, 1}), R({2, 2})), InputError);
  EXPECT_THROW(ContestGame(R({1, 1}), R({1, 2}), Participation::kVoluntary,
                           CostFunction::Product(), Proportional{}),
               InputError);
  EXPECT_THROW(ContestGame(R({1, 1}), R({0, 2}), Participation::kMandatory,
                           CostFunction::Product(), Proportional{}),
               InputError);
  EXPECT_THROW(ContestGame(R({1, 1}), R({1, 2}), Participation::kMandatory,
                           CostFunction::Product(), KTop{3}),
               InputError);
}

TEST(ContestGame, CostTableValidation) {
  const auto table = [](std::vector<std::vector<Rational>> v) {
    return CostFunction::Table(std::move(v));
  };
  EXPECT_THROW(ContestGame(R({1, 1}), R({0, 1}), Participation::kVoluntary,
                           table({R({1, 2}), R({0, 2})}), Proportional{}),
               InputError);
  EXPECT_THROW(ContestGame(R({1, 1}), R({1, 2}), Participation::kMandatory,
                           table({R({-1, 2}), R({1, 2})}), Proportional{}),
               InputError);
  const ContestGame warned(R({1, 1}), R({1, 2}), Participation::kMandatory,
                           table({R({3, 2}), R({1, 2})}), Proportional{});
  EXPECT_EQ(warned.warnings().size(), 1u);
  EXPECT_EQ(warned.Cost(0, 2), Rational(2));
}

TEST(ContestGame, ProfileValidation) {
  const ContestGame g = ProportionalGame(R({1, 1}), R({1, 2}));
  EXPECT_THROW(g.ValidateProfile(Profile({1})), InputError);
  EXPECT_THROW(g.ValidateProfile(Profile({1, 3})), InputError);
  EXPECT_THROW(Utility(g, Profile({0, 1}), 0), InputError);
}

TEST(ContestGame, Anonymity) {
  EXPECT_TRUE(ProportionalGame(R({1, 1}), R({1, 2})).IsAnonymous());
  EXPECT_FALSE(ProportionalGame(R({1, 2}), R({1, 2})).IsAnonymous());
}

}  // namespace
}  // namespace contestq
