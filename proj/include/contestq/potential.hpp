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

#ifndef CONTESTQ_POTENTIAL_HPP_
#define CONTESTQ_POTENTIAL_HPP_

#include <cstdint>
#include <vector>

#include "contestq/game.hpp"
#include "contestq/profile.hpp"
#include "contestq/rational.hpp"

namespace contestq {

// Prefix sums of the per-load payment on each quality.
//
// gamma(q, m) is the total paid out on quality q when m players use it, so
// gamma(q, 0) == 0 and gamma(q, m) - gamma(q, m - 1) is the payment one of
// them receives.  Only defined for payments that are both player-invariant
// and oblivious; the constructor throws PreconditionError otherwise.
class PotentialCache {
 public:
  explicit PotentialCache(const ContestGame& game,
                          std::uint64_t max_profiles = 1'000'000);

  const Rational& gamma(int quality, int load) const {
    return gamma_[quality - 1][load];
  }

  Rational Evaluate(const ContestGame& game, const Profile& profile) const;

 private:
  std::vector<std::vector<Rational>> gamma_;
};

// Phi(q) = sum_q gamma(q, N(q)) - sum_k cost_k(q_k).
Rational Potential(const ContestGame& game, const Profile& profile);

struct AscentResult {
  Profile profile;
  std::uint64_t steps = 0;
};

// Repeatedly applies the first strictly improving move (players by index,
// target qualities ascending) until none is left.
AscentResult PotentialAscent(const ContestGame& game, const Profile& start);

}  // namespace contestq

#endif  // CONTESTQ_POTENTIAL_HPP_
