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

#include "contestq/potential.hpp"

#include "contestq/combinatorics.hpp"
#include "contestq/errors.hpp"
#include "contestq/payments.hpp"

namespace contestq {
namespace {

bool DeclaredOblivious(const PaymentFunction& payment) {
  return std::holds_alternative<EqualSharing>(payment) ||
         std::holds_alternative<KTop>(payment);
}

void RequirePotentialGame(const ContestGame& game,
                          std::uint64_t max_profiles) {
  const PaymentFunction& payment = game.payment_function();
  if (std::holds_alternative<Proportional>(payment)) {
    throw PreconditionError(
        "exact potential needs an oblivious payment; proportional allocation "
        "is player-invariant but not oblivious");
  }
  if (DeclaredOblivious(payment)) return;
  const Classification c = Classify(game, max_profiles);
  if (!c.oblivious || !c.player_invariant) {
    throw PreconditionError(
        std::string("exact potential needs a payment that is both "
                    "player-invariant and oblivious; this one is ") +
        (c.player_invariant ? "" : "not player-invariant") +
        (!c.player_invariant && !c.oblivious ? " and " : "") +
        (c.oblivious ? "" : "not oblivious"));
  }
}

}  // namespace

PotentialCache::PotentialCache(const ContestGame& game,
                               std::uint64_t max_profiles) {
  RequirePotentialGame(game, max_profiles);
  const int n = game.num_players();
  const int num_q = game.num_qualities();
  gamma_.assign(num_q, std::vector<Rational>(n + 1));
  for (int q = 1; q <= num_q; ++q) {
    for (int m = 1; m <= n; ++m) {
      // Any load vector with m players on q works; the rest sit on the
      // first other quality.
      std::vector<int> counts(num_q, 0);
      counts[q - 1] = m;
      counts[q == 1 ? 1 : 0] += n - m;
      const Rational paid =
          PaymentAtLoads(game, 0, q, LoadVector(std::move(counts)));
      gamma_[q - 1][m] = gamma_[q - 1][m - 1] + paid;
    }
  }
}

Rational PotentialCache::Evaluate(const ContestGame& game,
                                  const Profile& profile) const {
  const LoadVector loads = LoadOf(profile, game.num_qualities());
  Rational phi;
  for (int q = 1; q <= game.num_qualities(); ++q) phi += gamma(q, loads.load(q));
  for (std::size_t k = 0; k < profile.size(); ++k) {
    phi -= game.Cost(k, profile[k]);
  }
  return phi;
}

Rational Potential(const ContestGame& game, const Profile& profile) {
  game.ValidateProfile(profile);
  return PotentialCache(game, Caps::FromEnvironment().max_profiles)
      .Evaluate(game, profile);
}

AscentResult PotentialAscent(const ContestGame& game, const Profile& start) {
  game.ValidateProfile(start);
  const PotentialCache cache(game, Caps::FromEnvironment().max_profiles);
  AscentResult result{start, 0};
  Rational phi = cache.Evaluate(game, result.profile);
  const int n = game.num_players();
  const int num_q = game.num_qualities();
  for (;;) {
    bool moved = false;
    for (int i = 0; i < n && !moved; ++i) {
      const Rational current = Utility(game, result.profile, i);
      for (int q = 1; q <= num_q; ++q) {
        if (q == result.profile[i]) continue;
        Profile next = result.profile.With(i, q);
        if (current < Utility(game, next, i)) {
          const Rational next_phi = cache.Evaluate(game, next);
          if (!(phi < next_phi)) {
            throw std::logic_error("potential did not increase on an "
                                   "improvement step");
          }
          phi = next_phi;
          result.profile = std::move(next);
          ++result.steps;
          moved = true;
          break;
        }
      }
    }
    if (!moved) return result;
  }
}

}  // namespace contestq
