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

#ifndef CONTESTQ_SOLVERS_HPP_
#define CONTESTQ_SOLVERS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "contestq/game.hpp"
#include "contestq/profile.hpp"
#include "contestq/rational.hpp"

namespace contestq {

struct BruteForceResult {
  std::optional<Profile> found;  // first PNE in lexicographic order
  std::vector<Profile> all;      // filled only when asked for
  std::uint64_t scanned = 0;
};

BruteForceResult BruteForcePne(const ContestGame& game,
                               std::uint64_t max_profiles,
                               bool collect_all = false);

struct ConcavityViolation {
  std::size_t player = 0;
  LoadVector loads;
  int q_i = 0;
  int q_k = 0;
  int q = 0;
  Rational lhs;
  Rational rhs;
};

struct ConcavityReport {
  bool holds = true;
  std::optional<ConcavityViolation> violation;
  std::uint64_t triples_checked = 0;
};

// Player-specific form: for player i, load vector N and qualities
// (q_i, q_k, q),
//   P_i(q_i, N - e_{q_k} + e_q) + P_i(q, N - e_{q_i} + e_q)
//       <= 2 P_i(q_i, N).
// Player-invariant form: both left-hand terms are evaluated at own quality q.
// A triple is only checked when i can sit on q_i and a second player on q_k,
// i.e. N(q_i) >= 1 and N(q_k) >= 1 + [q_k == q_i].
ConcavityReport IsThreeDiscreteConcaveSpecific(const ContestGame& game,
                                               std::uint64_t max_nodes);
ConcavityReport IsThreeDiscreteConcaveInvariant(const ContestGame& game,
                                                std::uint64_t max_nodes);

// Players ordered by skill, non-increasing, ties by index.
std::vector<std::size_t> SkillOrder(const ContestGame& game);

// Pairs (a, b) of positions in SkillOrder with a < b and q_a > q_b.
std::uint64_t CountInversions(const ContestGame& game, const Profile& profile);

// The profile that puts the first N(1) players of SkillOrder on quality 1,
// the next N(2) on quality 2, and so on.
Profile ContiguousProfile(const ContestGame& game, const LoadVector& loads);

struct ContigufyResult {
  Profile profile;
  std::uint64_t swaps = 0;
};

// Swaps the qualities of the earliest inversion witness and its earliest
// partner until no inversion is left.  Requires a PNE as input and throws
// PreconditionError if the output fails the PNE check.
ContigufyResult Contigufy(const ContestGame& game, const Profile& pne);

struct ContiguousResult {
  std::optional<LoadVector> loads;
  std::optional<Profile> profile;
  std::uint64_t candidates = 0;   // always C(n+Q-1, Q-1)
  std::uint64_t satisfying = 0;   // contiguous load vectors that pass
};

// Enumerate every contiguous load vector in colex order and return the first
// one for which no block player wants to switch.  The specific variant checks
// each block player separately; the invariant variant reads the payment once
// per (block, target) and takes the extreme cost difference over the block.
ContiguousResult SolveContiguousSpecific(const ContestGame& game,
                                         unsigned workers = 1);
ContiguousResult SolveContiguousInvariant(const ContestGame& game,
                                          unsigned workers = 1);

// Proportional allocation, mandatory participation, product cost: if every
// skill is at least f_2 / (f_2 - f_1), everybody on quality 1 is a PNE.
std::optional<Profile> SolveAllAtLowest(const ContestGame& game);

// Finite normal-form game: payoffs[i][profile index] with the same mixed
// radix as ProfileIndex (strategies 1..m, player 0 most significant).
struct NormalFormGame {
  int num_players = 0;
  int num_strategies = 0;
  std::vector<std::vector<Rational>> payoffs;

  const Rational& Payoff(std::size_t player, const Profile& profile) const;
  std::vector<Profile> PureNashEquilibria() const;
};

// Contest game with Q = m whose utilities equal the normal-form payoffs:
// P_i(q) = F_i(q) + cost_i(q_i).  Skills and efforts come from the caller.
ContestGame ReduceFromNormalForm(const NormalFormGame& source,
                                 std::vector<Rational> skills,
                                 std::vector<Rational> efforts,
                                 const CostFunction& cost);

}  // namespace contestq

#endif  // CONTESTQ_SOLVERS_HPP_
