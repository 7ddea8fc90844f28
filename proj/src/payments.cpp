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

#include "contestq/payments.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "contestq/combinatorics.hpp"
#include "contestq/errors.hpp"
#include "overloaded.hpp"

namespace contestq {
namespace {

using internal::Overloaded;

Rational ProportionalShare(const ContestGame& game, int own,
                           const LoadVector& loads) {
  Rational total;
  for (int q = 1; q <= game.num_qualities(); ++q) {
    total += Rational(loads.load(q)) * game.effort(q);
  }
  // Only reachable under voluntary participation with everybody on
  // quality 1; the indeterminate 0/0 is defined as 0.
  if (total.IsZero()) return Rational(0);
  return game.effort(own) / total;
}

Rational SharedEffort(const ContestGame& game, int own,
                      const LoadVector& loads) {
  return game.payment_scale() * game.effort(own) / Rational(loads.load(own));
}

[[noreturn]] void MissingEntry(const std::string& what) {
  throw InputError("payment table has no entry for " + what);
}

std::string DescribeVector(std::span<const int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Rational EvaluateAtLoads(const ContestGame& game, std::size_t player, int own,
                         const LoadVector& loads,
                         const Profile* profile) {
  return std::visit(
      Overloaded{
          [&](const Proportional&) {
            return ProportionalShare(game, own, loads);
          },
          [&](const EqualSharing&) { return SharedEffort(game, own, loads); },
          [&](const KTop& k) {
            if (own <= game.num_qualities() - k.k) return Rational(0);
            return SharedEffort(game, own, loads);
          },
          [&](const ObliviousTable& t) {
            return t.values[player][own - 1][loads.load(own) - 1];
          },
          [&](const PlayerInvariantTable& t) {
            std::vector<int> key(loads.counts().begin(), loads.counts().end());
            auto it = t.values.find({own, key});
            if (it == t.values.end()) {
              MissingEntry("quality " + std::to_string(own) + " at loads " +
                           DescribeVector(key));
            }
            return it->second;
          },
          [&](const PlayerSpecificTable& t) {
            std::vector<int> key;
            int key_quality = 0;
            if (t.form == PlayerSpecificTable::KeyForm::kProfile) {
              if (profile == nullptr) {
                throw PreconditionError(
                    "player-specific table keyed by quality vectors cannot be "
                    "evaluated on a load vector; use the loads key form");
              }
              key.assign(profile->qualities().begin(),
                         profile->qualities().end());
            } else {
              key.assign(loads.counts().begin(), loads.counts().end());
              key_quality = own;
            }
            auto it = t.values.find(
                {static_cast<int>(player), key, key_quality});
            if (it == t.values.end()) {
              MissingEntry("player " + std::to_string(player + 1) + " at " +
                           DescribeVector(key) +
                           (key_quality ? " quality " +
                                              std::to_string(key_quality)
                                        : std::string()));
            }
            return it->second;
          },
      },
      game.payment_function());
}

}  // namespace

std::string PaymentKindName(const PaymentFunction& payment) {
  return std::visit(
      Overloaded{
          [](const Proportional&) { return std::string("proportional"); },
          [](const EqualSharing&) { return std::string("equal_sharing"); },
          [](const KTop&) { return std::string("ktop"); },
          [](const ObliviousTable&) { return std::string("oblivious"); },
          [](const PlayerInvariantTable&) {
            return std::string("player_invariant");
          },
          [](const PlayerSpecificTable&) {
            return std::string("player_specific");
          },
      },
      payment);
}

bool IsDeclaredPlayerInvariant(const PaymentFunction& payment) {
  return std::holds_alternative<Proportional>(payment) ||
         std::holds_alternative<EqualSharing>(payment) ||
         std::holds_alternative<KTop>(payment) ||
         std::holds_alternative<PlayerInvariantTable>(payment);
}

bool PaymentDependsOnLoadsOnly(const PaymentFunction& payment) {
  const auto* t = std::get_if<PlayerSpecificTable>(&payment);
  return t == nullptr || t->form == PlayerSpecificTable::KeyForm::kLoads;
}

Rational Payment(const ContestGame& game, const Profile& profile,
                 std::size_t player) {
  const LoadVector loads = LoadOf(profile, game.num_qualities());
  return EvaluateAtLoads(game, player, profile[player], loads, &profile);
}

Rational PaymentAtLoads(const ContestGame& game, std::size_t player,
                        int own_quality, const LoadVector& loads) {
  return EvaluateAtLoads(game, player, own_quality, loads, nullptr);
}

Rational NormalizationConstant(const std::vector<Rational>& efforts,
                               int num_players, ScaledFamily family, int k) {
  const int num_q = static_cast<int>(efforts.size());
  const int first_eligible =
      family == ScaledFamily::kEqualSharing ? 1 : num_q - k + 1;
  if (first_eligible < 1 || first_eligible > num_q) {
    throw PreconditionError("K must lie in 1..Q");
  }
  // Players sharing a quality contribute f_q in total, so the maximum puts
  // one player on each of the largest eligible efforts.
  std::vector<Rational> eligible(efforts.begin() + (first_eligible - 1),
                                 efforts.end());
  std::sort(eligible.begin(), eligible.end(), std::greater<>());
  const std::size_t take =
      std::min<std::size_t>(static_cast<std::size_t>(num_players),
                            eligible.size());
  Rational best;
  for (std::size_t j = 0; j < take; ++j) best += eligible[j];
  if (best.IsZero()) {
    throw PreconditionError("normalization constant undefined: zero maximum");
  }
  return Rational(1) / best;
}

Rational NormalizationConstant(const ContestGame& game, ScaledFamily family) {
  int k = 0;
  if (family == ScaledFamily::kKTop) {
    const auto* kt = std::get_if<KTop>(&game.payment_function());
    k = kt ? kt->k : game.num_qualities();
  }
  return NormalizationConstant(game.efforts(), game.num_players(), family, k);
}

Classification Classify(const ContestGame& game, std::uint64_t max_profiles) {
  const int n = game.num_players();
  const int num_q = game.num_qualities();
  const std::uint64_t count = ProfileCount(n, num_q);
  if (count > max_profiles) {
    throw CapExceededError("classify needs " + std::to_string(count) +
                           " profiles, cap is " +
                           std::to_string(max_profiles));
  }
  Classification result{true, true};
  // Per player: (own quality, load on it) -> payment seen so far.
  std::vector<std::map<std::pair<int, int>, Rational>> seen(n);
  ForEachProfile(n, num_q, [&](const Profile& profile) {
    const LoadVector loads = LoadOf(profile, num_q);
    std::vector<Rational> pay(n);
    for (int i = 0; i < n; ++i) pay[i] = Payment(game, profile, i);
    if (result.player_invariant) {
      for (int i = 0; i < n && result.player_invariant; ++i) {
        for (int k = i + 1; k < n; ++k) {
          if (profile[i] == profile[k] && pay[i] != pay[k]) {
            result.player_invariant = false;
            break;
          }
        }
      }
    }
    if (result.oblivious) {
      for (int i = 0; i < n; ++i) {
        const std::pair<int, int> key{profile[i], loads.load(profile[i])};
        auto [it, inserted] = seen[i].emplace(key, pay[i]);
        if (!inserted && it->second != pay[i]) {
          result.oblivious = false;
          break;
        }
      }
    }
    return result.oblivious || result.player_invariant;
  });
  return result;
}

NormalizationReport CheckNormalization(const ContestGame& game,
                                       std::uint64_t max_profiles) {
  const int n = game.num_players();
  const int num_q = game.num_qualities();
  const std::uint64_t count = ProfileCount(n, num_q);
  if (count > max_profiles) {
    throw CapExceededError("normalization check needs " +
                           std::to_string(count) + " profiles, cap is " +
                           std::to_string(max_profiles));
  }
  NormalizationReport report;
  bool first = true;
  ForEachProfile(n, num_q, [&](const Profile& profile) {
    Rational total;
    for (int i = 0; i < n; ++i) total += Payment(game, profile, i);
    if (first || report.max_total < total) {
      report.max_total = total;
      report.worst_profile = profile;
      first = false;
    }
    return true;
  });
  report.holds = report.max_total <= Rational(1);
  return report;
}

}  // namespace contestq
