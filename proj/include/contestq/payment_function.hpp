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

#ifndef CONTESTQ_PAYMENT_FUNCTION_HPP_
#define CONTESTQ_PAYMENT_FUNCTION_HPP_

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "contestq/rational.hpp"

namespace contestq {

// f_{q_i} / sum_k f_{q_k}; 0 when the denominator vanishes (voluntary
// participation with everybody on quality 1).
struct Proportional {};

// C_ES * f_{q_i} / N(q_i).
struct EqualSharing {};

// C_KTop * f_{q_i} / N(q_i) for q_i > Q - K, else 0.
struct KTop {
  int k = 1;
};

// Per player i, payment as a function of (own quality, load on it):
// values[i][q - 1][load - 1].
struct ObliviousTable {
  std::vector<std::vector<std::vector<Rational>>> values;
};

// Payment to any player on `quality` given the full load vector.
struct PlayerInvariantTable {
  using Key = std::pair<int, std::vector<int>>;  // (own quality, loads)
  std::map<Key, Rational> values;
};

// Payment to a given player. Keyed either by the full quality vector or by
// (load vector, own quality); one form per table.
struct PlayerSpecificTable {
  enum class KeyForm { kProfile, kLoads };
  // kProfile: (player, qualities, 0); kLoads: (player, loads, own quality).
  using Key = std::tuple<int, std::vector<int>, int>;
  KeyForm form = KeyForm::kLoads;
  std::map<Key, Rational> values;
};

using PaymentFunction = std::variant<Proportional, EqualSharing, KTop,
                                     ObliviousTable, PlayerInvariantTable,
                                     PlayerSpecificTable>;

std::string PaymentKindName(const PaymentFunction& payment);

// Kinds whose definition makes them player-invariant without inspection.
bool IsDeclaredPlayerInvariant(const PaymentFunction& payment);

}  // namespace contestq

#endif  // CONTESTQ_PAYMENT_FUNCTION_HPP_
