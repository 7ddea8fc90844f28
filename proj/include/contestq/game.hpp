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

#ifndef CONTESTQ_GAME_HPP_
#define CONTESTQ_GAME_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "contestq/payment_function.hpp"
#include "contestq/profile.hpp"
#include "contestq/rational.hpp"

namespace contestq {

enum class Participation { kVoluntary, kMandatory };

// Skill-effort function Lambda(s_i, f_q).
struct CostFunction {
  enum class Kind { kProduct, kTable };
  Kind kind = Kind::kProduct;
  std::vector<std::vector<Rational>> table;  // n x Q when kind == kTable

  static CostFunction Product() { return {}; }
  static CostFunction Table(std::vector<std::vector<Rational>> values) {
    return {Kind::kTable, std::move(values)};
  }
};

// The discrete contest game. Immutable once constructed; the constructor
// validates every structural invariant and throws InputError otherwise.
class ContestGame {
 public:
  ContestGame(std::vector<Rational> skills, std::vector<Rational> efforts,
              Participation participation, CostFunction cost,
              PaymentFunction payment);

  int num_players() const { return static_cast<int>(skills_.size()); }
  int num_qualities() const { return static_cast<int>(efforts_.size()); }
  const std::vector<Rational>& skills() const { return skills_; }
  const Rational& skill(std::size_t player) const { return skills_[player]; }
  const std::vector<Rational>& efforts() const { return efforts_; }
  // 1-indexed quality.
  const Rational& effort(int quality) const { return efforts_[quality - 1]; }
  Participation participation() const { return participation_; }
  const CostFunction& cost_function() const { return cost_; }
  const PaymentFunction& payment_function() const { return payment_; }

  // Lambda(s_i, f_q).
  Rational Cost(std::size_t player, int quality) const;

  // C_ES or C_KTop for those families, 1 otherwise. Fixed at construction.
  const Rational& payment_scale() const { return payment_scale_; }

  // True when every skill is equal (and table cost rows coincide).
  bool IsAnonymous() const;

  // Non-fatal findings, e.g. a cost table row that is not monotone in q.
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Throws InputError unless `profile` has n entries, each in 1..Q.
  void ValidateProfile(const Profile& profile) const;

 private:
  std::vector<Rational> skills_;
  std::vector<Rational> efforts_;
  Participation participation_;
  CostFunction cost_;
  PaymentFunction payment_;
  Rational payment_scale_{1};
  std::vector<std::string> warnings_;
};

// U_i(q) = P_i(q) - Lambda(s_i, f_{q_i}).
Rational Utility(const ContestGame& game, const Profile& profile,
                 std::size_t player);

// A unilateral deviation and its exact utility gain.
struct Deviation {
  std::size_t player = 0;
  int target = 0;
  Rational gain;

  friend bool operator==(const Deviation&, const Deviation&) = default;
};

struct PneCheck {
  bool is_pne = true;
  // Set when is_pne is false: the first player (index order) with an
  // improving move, together with her best response.
  std::optional<Deviation> witness;
};

PneCheck CheckPne(const ContestGame& game, const Profile& profile);
bool IsPne(const ContestGame& game, const Profile& profile);

// Best response of `player` against the others in `profile`: maximal
// utility, ties broken toward the lowest quality.
int BestResponse(const ContestGame& game, const Profile& profile,
                 std::size_t player);

}  // namespace contestq

#endif  // CONTESTQ_GAME_HPP_
