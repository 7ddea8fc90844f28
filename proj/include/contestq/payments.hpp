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

#ifndef CONTESTQ_PAYMENTS_HPP_
#define CONTESTQ_PAYMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "contestq/game.hpp"
#include "contestq/profile.hpp"
#include "contestq/rational.hpp"

namespace contestq {

// P_i(q) under the game's payment function. Table kinds throw InputError on
// a missing entry.
Rational Payment(const ContestGame& game, const Profile& profile,
                 std::size_t player);

// Payment to `player` sitting on `own_quality` when the loads are `loads`.
// Defined for every family except player-specific tables keyed by full
// quality vectors (PreconditionError).
Rational PaymentAtLoads(const ContestGame& game, std::size_t player,
                        int own_quality, const LoadVector& loads);

// True when PaymentAtLoads is defined for the game's payment function.
bool PaymentDependsOnLoadsOnly(const PaymentFunction& payment);

enum class ScaledFamily { kEqualSharing, kKTop };

// Inverse of max over quality vectors of sum over eligible players of
// f_{q_i} / N(q_i). Closed form: the largest min(n, #eligible) eligible
// efforts summed. `k` is ignored for kEqualSharing.
Rational NormalizationConstant(const std::vector<Rational>& efforts,
                               int num_players, ScaledFamily family,
                               int k = 0);
Rational NormalizationConstant(const ContestGame& game, ScaledFamily family);

struct Classification {
  bool oblivious = false;
  bool player_invariant = false;
};

// Exhaustive over all Q^n profiles; CapExceededError above `max_profiles`.
Classification Classify(const ContestGame& game, std::uint64_t max_profiles);

struct NormalizationReport {
  bool holds = true;
  Rational max_total;  // max over profiles of sum_i P_i(q)
  std::optional<Profile> worst_profile;
};

NormalizationReport CheckNormalization(const ContestGame& game,
                                       std::uint64_t max_profiles);

}  // namespace contestq

#endif  // CONTESTQ_PAYMENTS_HPP_
