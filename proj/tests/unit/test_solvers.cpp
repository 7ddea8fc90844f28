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
#include <set>

#include "contestq/combinatorics.hpp"
#include "contestq/errors.hpp"
#include "contestq/instances.hpp"
#include "contestq/payments.hpp"
#include "contestq/solvers.hpp"
#include "oracles.hpp"

namespace contestq {
namespace {

std::vector<Rational> R(std::initializer_list<int> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

std::vector<std::vector<int>> AsVectors(const std::vector<Profile>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.emplace_back(p.qualities().begin(), p.qualities().end());
  return out;
}

// P_i(q, N) = a_i - b_i * N(q) on every (player, loads, own quality) key.
PlayerSpecificTable AffineTable(int n, int q, const std::vector<Rational>& a,
                                const std::vector<Rational>& b) {
  PlayerSpecificTable t;
  t.form = PlayerSpecificTable::KeyForm::kLoads;
  for (const auto& loads : oracle::AllCompositions(n, q)) {
    for (int own = 1; own <= q; ++own) {
      if (loads[own - 1] == 0) continue;
      for (int i = 0; i < n; ++i) {
        t.values[{i, loads, own}] = a[i] - b[i] * Rational(loads[own - 1]);
      }
    }
  }
  return t;
}

TEST(BruteForce, KnownNoEquilibriumInstances) {
  const BruteForceResult ce1 = BruteForcePne(Build(InstanceId::kCounterexample1).game, 100);
  EXPECT_FALSE(ce1.found);
  EXPECT_EQ(ce1.scanned, 9u);
  const BruteForceResult mp = BruteForcePne(Build(InstanceId::kMatchingPennies).game, 100);
  EXPECT_FALSE(mp.found);
  EXPECT_EQ(mp.scanned, 4u);
}

TEST(BruteForce, ProportionalMandatoryUniqueEquilibrium) {
  const ContestGame g(R({1, 1}), R({1, 2}), Participation::kMandatory,
                      CostFunction::Product(), Proportional{});
  const BruteForceResult r = BruteForcePne(g, 100, true);
  EXPECT_EQ(AsVectors(r.all), (std::vector<std::vector<int>>{{1, 1}}));
  EXPECT_THROW(BruteForcePne(g, 3), CapExceededError);
}

TEST(BruteForce, AgreesWithOracleOnProportionalGames) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 2;
    const int q = 2 + trial % 3;
    std::vector<Rational> s;
    for (int i = 0; i < n; ++i) s.push_back(Rational(1, 10) + oracle::RandomFraction(rng, 4, 3));
    std::vector<Rational> f{Rational(trial % 2)};
    for (int j = 1; j < q; ++j) f.push_back(f.back() + Rational(1) + oracle::RandomFraction(rng, 2, 3));
    const ContestGame g(s, f,
                        trial % 2 ? Participation::kMandatory : Participation::kVoluntary,
                        CostFunction::Product(), Proportional{});
    const auto expected = oracle::PneSet(n, q, [&](const std::vector<int>& p, int i) {
      return oracle::ProportionalUtility(s, f, p, i);
    });
    EXPECT_EQ(AsVectors(BruteForcePne(g, 1000, true).all), expected);
  }
}

TEST(Concavity, ConstantPaymentsHold) {
  const ContestGame spec(R({1, 2, 3}), R({1, 2, 3}), Participation::kMandatory,
                         CostFunction::Product(),
                         AffineTable(3, 3, {Rational(1, 4), Rational(1, 5), Rational(1, 6)},
                                     R({0, 0, 0})));
  const ConcavityReport r = IsThreeDiscreteConcaveSpecific(spec, 1000);
  EXPECT_TRUE(r.holds);
  EXPECT_GT(r.triples_checked, 0u);

  PlayerInvariantTable inv;
  for (const auto& loads : oracle::AllCompositions(3, 2)) {
    for (int q = 1; q <= 2; ++q) {
      if (loads[q - 1]) inv.values[{q, loads}] = Rational(1, 3);
    }
  }
  const ContestGame g(R({1, 1, 1}), R({1, 2}), Participation::kMandatory,
                      CostFunction::Product(), inv);
  EXPECT_TRUE(IsThreeDiscreteConcaveInvariant(g, 1000).holds);
}

TEST(Concavity, AffineOwnLoadSlopeIsRejected) {
  // P_i = a - b N(q_i), b > 0.  At N = (2,0), (q_i, q_k, q) = (1, 1, 2):
  //   P_i(1, (1,1)) + P_i(2, (1,1)) = 2a - 2b  >  2 P_i(1, (2,0)) = 2a - 4b.
  const Rational a(1, 2);
  const Rational b(1, 8);
  const ContestGame g(R({1, 1}), R({1, 2}), Participation::kMandatory,
                      CostFunction::Product(), AffineTable(2, 2, {a, a}, {b, b}));
  const ConcavityReport r = IsThreeDiscreteConcaveSpecific(g, 1000);
  ASSERT_FALSE(r.holds);
  const ConcavityViolation& v = *r.violation;
  EXPECT_EQ(v.player, 0u);
  EXPECT_EQ(v.loads, LoadVector({2, 0}));
  EXPECT_EQ(v.q_i, 1);
  EXPECT_EQ(v.q_k, 1);
  EXPECT_EQ(v.q, 2);
  EXPECT_EQ(v.lhs, Rational(2) * a - Rational(2) * b);
  EXPECT_EQ(v.rhs, Rational(2) * a - Rational(4) * b);
}

TEST(Concavity, UncertifiedAffineGameMayNeedAnInversion) {
  // Player 1 loses 10 per co-located player, player 2 is flat.  The only PNE
  // puts the (equally skilled, hence earlier-sorted) player 1 above player 2,
  // so no contiguous PNE exists; the checker rejects the game.
  const ContestGame g(R({1, 1}), R({1, 2}), Participation::kMandatory,
                      CostFunction::Product(),
                      AffineTable(2, 2, {Rational(20), Rational(0)},
                                  {Rational(10), Rational(0)}));
  EXPECT_FALSE(IsThreeDiscreteConcaveSpecific(g, 1000).holds);
  EXPECT_EQ(AsVectors(BruteForcePne(g, 100, true).all),
            (std::vector<std::vector<int>>{{2, 1}}));
  const ContiguousResult r = SolveContiguousSpecific(g);
  EXPECT_FALSE(r.profile);
  EXPECT_EQ(r.candidates, 3u);
}

TEST(Concavity, RegressionVerdicts) {
  const ConcavityReport mp =
      IsThreeDiscreteConcaveSpecific(Build(InstanceId::kMatchingPennies).game, 100);
  ASSERT_FALSE(mp.holds);
  EXPECT_EQ(mp.violation->loads, LoadVector({2, 0}));
  EXPECT_EQ(mp.violation->lhs, Rational(2000));
  EXPECT_EQ(mp.violation->rhs, Rational(20));

  const ContestGame es(R({1, 1, 1}), R({1, 2}), Participation::kMandatory,
                       CostFunction::Product(), EqualSharing{});
  const ConcavityReport esr = IsThreeDiscreteConcaveInvariant(es, 100);
  ASSERT_FALSE(esr.holds);
  EXPECT_EQ(esr.violation->lhs, Rational(4, 3));
  EXPECT_EQ(esr.violation->rhs, Rational(2, 9));

  const ContestGame pr(R({1, 1}), R({1, 2}), Participation::kMandatory,
                       CostFunction::Product(), Proportional{});
  const ConcavityReport prr = IsThreeDiscreteConcaveInvariant(pr, 100);
  ASSERT_FALSE(prr.holds);
  EXPECT_EQ(prr.violation->lhs, Rational(4, 3));
  EXPECT_EQ(prr.violation->rhs, Rational(1));
}

TEST(Concavity, RequiresLoadKeyedTables) {
  EXPECT_THROW(IsThreeDiscreteConcaveSpecific(
                   ReduceFromNormalForm({2, 2, {R({0, 0, 0, 0}), R({0, 0, 0, 0})}},
                                        R({1, 1}), R({1, 2}), CostFunction::Product()),
                   100),
               PreconditionError);
}

TEST(Contiguity, OrderAndInversions) {
  const ContestGame g(R({1, 3, 3, 2}), R({1, 2, 3}), Participation::kMandatory,
                      CostFunction::Product(), Proportional{});
  EXPECT_EQ(SkillOrder(g), (std::vector<std::size_t>{1, 2, 3, 0}));
  EXPECT_EQ(CountInversions(g, Profile({1, 1, 2, 3})), 2u);
  EXPECT_EQ(CountInversions(g, Profile({3, 1, 1, 2})), 0u);
  EXPECT_EQ(ContiguousProfile(g, LoadVector({2, 1, 1})), Profile({3, 1, 1, 2}));
}

ContestGame ZeroGame() {
  // Zero payments and zero costs: every profile is a PNE.
  PlayerSpecificTable t = AffineTable(2, 2, R({0, 0}), R({0, 0}));
  return ContestGame(R({1, 1}), R({0, 1}), Participation::kVoluntary,
                     CostFunction::Table({R({0, 0}), R({0, 0})}), t);
}

TEST(Contigufy, AlreadyContiguousIsUnchanged) {
  const ContestGame g = ZeroGame();
  const ContigufyResult r = Contigufy(g, Profile({1, 2}));
  EXPECT_EQ(r.profile, Profile({1, 2}));
  EXPECT_EQ(r.swaps, 0u);
}

TEST(Contigufy, OneSwapRestoresContiguity) {
  const ContestGame g = ZeroGame();
  const ContigufyResult r = Contigufy(g, Profile({2, 1}));
  EXPECT_EQ(r.profile, Profile({1, 2}));
  EXPECT_EQ(r.swaps, 1u);
  EXPECT_TRUE(IsPne(g, r.profile));
}

TEST(Contigufy, RejectsNonEquilibria) {
  const ContestGame g = Build(InstanceId::kCounterexample1).game;
  EXPECT_THROW(Contigufy(g, Profile({1, 2})), PreconditionError);
}

TEST(Contigufy, CertifiedInstancesKeepLoadsAndStability) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const int q = 2 + static_cast<int>(seed % 2);
    const ContestGame g = RandomGame(seed, n, q, RandomFamily::kConcaveSpecific);
    for (const Profile& p : BruteForcePne(g, 100000, true).all) {
      const ContigufyResult r = Contigufy(g, p);
      EXPECT_EQ(CountInversions(g, r.profile), 0u);
      EXPECT_EQ(LoadOf(r.profile, q), LoadOf(p, q));
      EXPECT_TRUE(IsPne(g, r.profile));
      EXPECT_LE(r.swaps, static_cast<std::uint64_t>(n * n));
    }
  }
}

TEST(SolveContiguous, CandidateCounts) {
  for (int n = 2; n <= 5; ++n) {
    for (int q = 2; q <= 3; ++q) {
      const ContestGame g = RandomGame(n * 10 + q, n, q, RandomFamily::kConcaveSpecific);
      EXPECT_EQ(SolveContiguousSpecific(g).candidates,
                static_cast<std::uint64_t>(oracle::Choose(n + q - 1, q - 1)));
      const ContestGame h = RandomGame(n * 10 + q, n, q, RandomFamily::kConcaveInvariant);
      EXPECT_EQ(SolveContiguousInvariant(h).candidates,
                static_cast<std::uint64_t>(oracle::Choose(n + q - 1, q - 1)));
    }
  }
  const ContestGame g43 = RandomGame(1, 4, 3, RandomFamily::kConcaveSpecific);
  EXPECT_EQ(SolveContiguousSpecific(g43).candidates, 15u);
  const ContestGame g52 = RandomGame(1, 5, 2, RandomFamily::kConcaveInvariant);
  EXPECT_EQ(SolveContiguousInvariant(g52).candidates, 6u);
}

TEST(SolveContiguous, OracleEquivalenceOnCertifiedInstances) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const int q = 2 + static_cast<int>(seed % 2);
    const bool specific = seed % 2 == 0;
    const ContestGame g = RandomGame(
        seed, n, q,
        specific ? RandomFamily::kConcaveSpecific : RandomFamily::kConcaveInvariant);
    const ContiguousResult r =
        specific ? SolveContiguousSpecific(g) : SolveContiguousInvariant(g);
    EXPECT_EQ(r.profile.has_value(), BruteForcePne(g, 1'000'000).found.has_value());
    if (r.profile) EXPECT_TRUE(IsPne(g, *r.profile));
  }
}

TEST(SolveContiguous, EqualSharingMatchesBruteForce) {
  const ContestGame es(R({1, 1, 1}), R({1, 2}), Participation::kMandatory,
                       CostFunction::Product(), EqualSharing{});
  const ContiguousResult r = SolveContiguousInvariant(es);
  const BruteForceResult bf = BruteForcePne(es, 100, true);
  ASSERT_EQ(r.profile.has_value(), bf.found.has_value());
  ASSERT_TRUE(r.profile);
  EXPECT_TRUE(IsPne(es, *r.profile));
  // Anonymous players: every PNE load vector is contiguous.
  std::set<LoadVector> pne_loads;
  for (const auto& p : bf.all) pne_loads.insert(LoadOf(p, 2));
  EXPECT_EQ(r.satisfying, pne_loads.size());
}

TEST(SolveContiguous, ProportionalAnonymousMandatoryPicksAllLowest) {
  const ContestGame g(R({1, 1, 1}), R({1, 2}), Participation::kMandatory,
                      CostFunction::Product(), Proportional{});
  const ContiguousResult r = SolveContiguousInvariant(g);
  ASSERT_TRUE(r.profile);
  EXPECT_EQ(*r.profile, Profile({1, 1, 1}));
  EXPECT_EQ(AsVectors(BruteForcePne(g, 100, true).all),
            (std::vector<std::vector<int>>{{1, 1, 1}}));
}

TEST(SolveContiguous, ParallelWorkersGiveTheSameAnswer) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ContestGame g = RandomGame(seed, 6, 3, RandomFamily::kConcaveSpecific);
    const ContiguousResult a = SolveContiguousSpecific(g, 1);
    const ContiguousResult b = SolveContiguousSpecific(g, 3);
    EXPECT_EQ(a.loads, b.loads);
    EXPECT_EQ(a.satisfying, b.satisfying);
  }
}

TEST(SolveAllAtLowest, SkillBound) {
  const ContestGame ok(R({2, 2}), R({1, 2, 3}), Participation::kMandatory,
                       CostFunction::Product(), Proportional{});
  const auto p = SolveAllAtLowest(ok);
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, Profile({1, 1}));
  const BruteForceResult bf = BruteForcePne(ok, 9, true);
  EXPECT_NE(std::find(bf.all.begin(), bf.all.end(), *p), bf.all.end());

  const ContestGame anonymous(R({1, 1}), R({1, 2, 3}), Participation::kMandatory,
                              CostFunction::Product(), Proportional{});
  EXPECT_FALSE(SolveAllAtLowest(anonymous));
  EXPECT_FALSE(SolveAllAtLowest(Build(InstanceId::kCounterexample2, {.k = 2}).game));
  EXPECT_THROW(SolveAllAtLowest(Build(InstanceId::kFipVoluntary).game),
               PreconditionError);
}

NormalFormGame TwoByTwo(std::vector<int> p1, std::vector<int> p2) {
  return {2, 2, {std::vector<Rational>(p1.begin(), p1.end()),
                 std::vector<Rational>(p2.begin(), p2.end())}};
}

std::vector<std::vector<int>> ReducedPne(const NormalFormGame& nf) {
  const ContestGame g = ReduceFromNormalForm(nf, R({1, 2}), R({1, 3}),
                                             CostFunction::Product());
  return AsVectors(BruteForcePne(g, 100, true).all);
}

TEST(Reduction, MatchingPenniesHasNoEquilibrium) {
  const NormalFormGame mp = TwoByTwo({1, -1, -1, 1}, {-1, 1, 1, -1});
  EXPECT_TRUE(mp.PureNashEquilibria().empty());
  EXPECT_TRUE(ReducedPne(mp).empty());
}

TEST(Reduction, CoordinationGame) {
  const NormalFormGame co = TwoByTwo({2, 0, 0, 1}, {2, 0, 0, 1});
  EXPECT_EQ(AsVectors(co.PureNashEquilibria()),
            (std::vector<std::vector<int>>{{1, 1}, {2, 2}}));
  EXPECT_EQ(ReducedPne(co), AsVectors(co.PureNashEquilibria()));
}

TEST(Reduction, ConstantGameEveryProfileIsStable) {
  const NormalFormGame c = TwoByTwo({5, 5, 5, 5}, {3, 3, 3, 3});
  EXPECT_EQ(ReducedPne(c).size(), 4u);
}

TEST(Reduction, UtilitiesEqualSourcePayoffs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    NormalFormGame nf{3, 3, {}};
    for (int i = 0; i < 3; ++i) {
      std::vector<Rational> t;
      for (int j = 0; j < 27; ++j) t.push_back(oracle::RandomFraction(rng, 9, 4) - Rational(1));
      nf.payoffs.push_back(t);
    }
    const ContestGame g = ReduceFromNormalForm(nf, R({1, 2, 3}), R({0, 1, 2}),
                                               CostFunction::Product());
    for (const auto& p : oracle::AllTuples(3, 3)) {
      for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(Utility(g, Profile(p), i), nf.Payoff(i, Profile(p)));
      }
    }
  }
}

}  // namespace
}  // namespace contestq
