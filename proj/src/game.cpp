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

#include "contestq/game.hpp"

#include <sstream>

#include "contestq/errors.hpp"
#include "contestq/payments.hpp"
#include "overloaded.hpp"

namespace contestq {
namespace {

using internal::Overloaded;

void ValidatePaymentShape(const PaymentFunction& payment, int n, int num_q) {
  std::visit(
      Overloaded{
          [](const Proportional&) {}, [](const EqualSharing&) {},
          [&](const KTop& k) {
            if (k.k < 1 || k.k > num_q) {
              throw InputError("ktop: K must lie in 1..Q");
            }
          },
          [&](const ObliviousTable& t) {
            if (static_cast<int>(t.values.size()) != n) {
              throw InputError("oblivious table: expected one matrix per player");
            }
            for (const auto& m : t.values) {
              if (static_cast<int>(m.size()) != num_q) {
                throw InputError("oblivious table: expected Q rows per player");
              }
              for (const auto& row : m) {
                if (static_cast<int>(row.size()) != n) {
                  throw InputError(
                      "oblivious table: expected n load columns per row");
                }
              }
            }
          },
          [&](const PlayerInvariantTable& t) {
            for (const auto& [key, value] : t.values) {
              const auto& [quality, loads] = key;
              LoadVector lv(loads);
              if (static_cast<int>(loads.size()) != num_q || lv.total() != n ||
                  quality < 1 || quality > num_q || lv.load(quality) < 1) {
                throw InputError("player-invariant table: invalid key");
              }
              for (int c : loads) {
                if (c < 0) throw InputError("player-invariant table: negative load");
              }
            }
          },
          [&](const PlayerSpecificTable& t) {
            for (const auto& [key, value] : t.values) {
              const auto& [player, vec, quality] = key;
              if (player < 0 || player >= n) {
                throw InputError("player-specific table: player out of range");
              }
              if (t.form == PlayerSpecificTable::KeyForm::kProfile) {
                if (static_cast<int>(vec.size()) != n) {
                  throw InputError("player-specific table: profile length != n");
                }
                for (int q : vec) {
                  if (q < 1 || q > num_q) {
                    throw InputError("player-specific table: quality out of range");
                  }
                }
              } else {
                LoadVector lv(vec);
                if (static_cast<int>(vec.size()) != num_q || lv.total() != n ||
                    quality < 1 || quality > num_q || lv.load(quality) < 1) {
                  throw InputError("player-specific table: invalid loads key");
                }
                for (int c : vec) {
                  if (c < 0) throw InputError("player-specific table: negative load");
                }
              }
            }
          },
      },
      payment);
}

}  // namespace

ContestGame::ContestGame(std::vector<Rational> skills,
                         std::vector<Rational> efforts,
                         Participation participation, CostFunction cost,
                         PaymentFunction payment)
    : skills_(std::move(skills)),
      efforts_(std::move(efforts)),
      participation_(participation),
      cost_(std::move(cost)),
      payment_(std::move(payment)) {
  const int n = num_players();
  const int num_q = num_qualities();
  if (n < 2) throw InputError("a contest needs at least 2 players");
  if (num_q < 2) throw InputError("a contest needs at least 2 qualities");
  for (const auto& s : skills_) {
    if (s.Sign() <= 0) throw InputError("skills must be positive");
  }
  for (int q = 1; q < num_q; ++q) {
    if (!(efforts_[q - 1] < efforts_[q])) {
      throw InputError("efforts must be strictly increasing");
    }
  }
  if (efforts_[0].Sign() < 0) throw InputError("efforts must be non-negative");
  if (participation_ == Participation::kVoluntary && !efforts_[0].IsZero()) {
    throw InputError("voluntary participation requires f_1 = 0");
  }
  if (participation_ == Participation::kMandatory && efforts_[0].IsZero()) {
    throw InputError("mandatory participation requires f_1 > 0");
  }
  if (cost_.kind == CostFunction::Kind::kTable) {
    if (static_cast<int>(cost_.table.size()) != n) {
      throw InputError("cost table must have n rows");
    }
    for (int i = 0; i < n; ++i) {
      const auto& row = cost_.table[i];
      if (static_cast<int>(row.size()) != num_q) {
        throw InputError("cost table rows must have Q entries");
      }
      for (const auto& v : row) {
        if (v.Sign() < 0) throw InputError("cost table entries must be >= 0");
      }
      if (participation_ == Participation::kVoluntary && !row[0].IsZero()) {
        throw InputError("voluntary participation requires Lambda(s, 0) = 0");
      }
      for (int q = 1; q < num_q; ++q) {
        if (row[q] < row[q - 1]) {
          std::ostringstream os;
          os << "cost table row for player " << (i + 1)
             << " decreases between qualities " << q << " and " << (q + 1);
          warnings_.push_back(os.str());
        }
      }
    }
  }
  ValidatePaymentShape(payment_, n, num_q);
  if (std::holds_alternative<EqualSharing>(payment_)) {
    payment_scale_ =
        NormalizationConstant(efforts_, n, ScaledFamily::kEqualSharing);
  } else if (const auto* k = std::get_if<KTop>(&payment_)) {
    payment_scale_ =
        NormalizationConstant(efforts_, n, ScaledFamily::kKTop, k->k);
  }
}

Rational ContestGame::Cost(std::size_t player, int quality) const {
  if (cost_.kind == CostFunction::Kind::kProduct) {
    return skills_[player] * efforts_[quality - 1];
  }
  return cost_.table[player][quality - 1];
}

bool ContestGame::IsAnonymous() const {
  for (const auto& s : skills_) {
    if (s != skills_.front()) return false;
  }
  if (cost_.kind == CostFunction::Kind::kTable) {
    for (const auto& row : cost_.table) {
      if (row != cost_.table.front()) return false;
    }
  }
  return true;
}

void ContestGame::ValidateProfile(const Profile& profile) const {
  if (static_cast<int>(profile.size()) != num_players()) {
    throw InputError("profile must have one quality per player");
  }
  for (int q : profile.qualities()) {
    if (q < 1 || q > num_qualities()) {
      throw InputError("profile quality out of range 1.." +
                       std::to_string(num_qualities()));
    }
  }
}

Rational Utility(const ContestGame& game, const Profile& profile,
                 std::size_t player) {
  game.ValidateProfile(profile);
  if (player >= profile.size()) throw InputError("player index out of range");
  return Payment(game, profile, player) - game.Cost(player, profile[player]);
}

int BestResponse(const ContestGame& game, const Profile& profile,
                 std::size_t player) {
  int best = 1;
  Rational best_utility = Utility(game, profile.With(player, 1), player);
  for (int q = 2; q <= game.num_qualities(); ++q) {
    Rational u = Utility(game, profile.With(player, q), player);
    if (best_utility < u) {
      best = q;
      best_utility = std::move(u);
    }
  }
  return best;
}

PneCheck CheckPne(const ContestGame& game, const Profile& profile) {
  game.ValidateProfile(profile);
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const Rational current = Utility(game, profile, i);
    std::optional<Deviation> best;
    for (int q = 1; q <= game.num_qualities(); ++q) {
      if (q == profile[i]) continue;
      Rational gain = Utility(game, profile.With(i, q), i) - current;
      if (gain.Sign() > 0 && (!best || best->gain < gain)) {
        best = Deviation{i, q, std::move(gain)};
      }
    }
    if (best) return {false, std::move(best)};
  }
  return {true, std::nullopt};
}

bool IsPne(const ContestGame& game, const Profile& profile) {
  return CheckPne(game, profile).is_pne;
}

}  // namespace contestq
