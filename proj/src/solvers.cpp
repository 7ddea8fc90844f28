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

#include "contestq/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "contestq/combinatorics.hpp"
#include "contestq/errors.hpp"
#include "contestq/payments.hpp"

namespace contestq {

BruteForceResult BruteForcePne(const ContestGame& game,
                               std::uint64_t max_profiles, bool collect_all) {
  const int n = game.num_players();
  const int num_q = game.num_qualities();
  const std::uint64_t count = ProfileCount(n, num_q);
  if (count > max_profiles) {
    throw CapExceededError("brute force needs " + std::to_string(count) +
                           " profiles, cap is " +
                           std::to_string(max_profiles));
  }
  BruteForceResult result;
  ForEachProfile(n, num_q, [&](const Profile& p) {
    ++result.scanned;
    if (!IsPne(game, p)) return true;
    if (!result.found) result.found = p;
    if (collect_all) result.all.push_back(p);
    return collect_all;
  });
  return result;
}

namespace {

enum class ConcavityForm { kSpecific, kInvariant };

ConcavityReport CheckConcavity(const ContestGame& game,
                               std::uint64_t max_nodes, ConcavityForm form) {
  if (!PaymentDependsOnLoadsOnly(game.payment_function())) {
    throw PreconditionError(
        "concavity is defined on load vectors; the payment table is keyed by "
        "quality vectors");
  }
  const int n = game.num_players();
  const int num_q = game.num_qualities();
  const std::uint64_t count = LoadVectorCount(n, num_q);
  if (count > max_nodes) {
    throw CapExceededError("concavity check needs " + std::to_string(count) +
                           " load vectors, cap is " +
                           std::to_string(max_nodes));
  }
  ConcavityReport report;
  const std::vector<LoadVector> all = LoadVectorsColex(n, num_q);
  for (int i = 0; i < n; ++i) {
    for (const LoadVector& loads : all) {
      for (int qi = 1; qi <= num_q; ++qi) {
        if (loads.load(qi) < 1) continue;
        const Rational rhs = Rational(2) * PaymentAtLoads(game, i, qi, loads);
        for (int qk = 1; qk <= num_q; ++qk) {
          if (loads.load(qk) < 1 + (qk == qi ? 1 : 0)) continue;
          for (int q = 1; q <= num_q; ++q) {
            ++report.triples_checked;
            const LoadVector k_moved = loads.Moved(qk, q);
            const LoadVector i_moved = loads.Moved(qi, q);
            const int own_a = form == ConcavityForm::kSpecific ? qi : q;
            Rational lhs = PaymentAtLoads(game, i, own_a, k_moved) +
                           PaymentAtLoads(game, i, q, i_moved);
            if (rhs < lhs) {
              report.holds = false;
              report.violation = ConcavityViolation{
                  static_cast<std::size_t>(i), loads, qi, qk, q,
                  std::move(lhs), rhs};
              return report;
            }
          }
        }
      }
    }
  }
  return report;
}

void RequirePlayerInvariant(const ContestGame& game) {
  if (IsDeclaredPlayerInvariant(game.payment_function())) return;
  if (!Classify(game, Caps::FromEnvironment().max_profiles).player_invariant) {
    throw PreconditionError("payment is not player-invariant");
  }
}

template <class Fn>
std::vector<char> EvaluateCandidates(std::size_t count, unsigned workers,
                                     Fn&& accept) {
  std::vector<char> ok(count, 0);
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t j = 0; j < count; ++j) ok[j] = accept(j);
    return ok;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t j = w; j < count; j += workers) ok[j] = accept(j);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return ok;
}

// Block of sorted positions per quality for a contiguous load vector.
std::vector<std::vector<std::size_t>> Blocks(
    const std::vector<std::size_t>& order, const LoadVector& loads) {
  std::vector<std::vector<std::size_t>> blocks(loads.num_qualities());
  std::size_t next = 0;
  for (int q = 1; q <= loads.num_qualities(); ++q) {
    for (int j = 0; j < loads.load(q); ++j) blocks[q - 1].push_back(order[next++]);
  }
  return blocks;
}

ContiguousResult SolveContiguous(const ContestGame& game, unsigned workers,
                                 ConcavityForm form) {
  if (!PaymentDependsOnLoadsOnly(game.payment_function())) {
    throw PreconditionError(
        "contiguous solvers need payments defined on load vectors");
  }
  if (form == ConcavityForm::kInvariant) RequirePlayerInvariant(game);
  const int num_q = game.num_qualities();
  const std::vector<std::size_t> order = SkillOrder(game);
  const std::vector<LoadVector> candidates =
      LoadVectorsColex(game.num_players(), num_q);

  auto accept = [&](std::size_t idx) -> char {
    const LoadVector& loads = candidates[idx];
    const auto blocks = Blocks(order, loads);
    for (int q = 1; q <= num_q; ++q) {
      const auto& block = blocks[q - 1];
      if (block.empty()) continue;
      for (int t = 1; t <= num_q; ++t) {
        if (t == q) continue;
        const LoadVector moved = loads.Moved(q, t);
        if (form == ConcavityForm::kInvariant) {
          const std::size_t rep = block.front();
          const Rational slack = PaymentAtLoads(game, rep, q, loads) -
                                 PaymentAtLoads(game, rep, t, moved);
          Rational worst = game.Cost(block.front(), q) - game.Cost(block.front(), t);
          for (std::size_t i : block) {
            worst = Max(worst, game.Cost(i, q) - game.Cost(i, t));
          }
          if (slack < worst) return 0;
        } else {
          for (std::size_t i : block) {
            const Rational slack = PaymentAtLoads(game, i, q, loads) -
                                   PaymentAtLoads(game, i, t, moved);
            if (slack < game.Cost(i, q) - game.Cost(i, t)) return 0;
          }
        }
      }
    }
    return 1;
  };

  const std::vector<char> ok =
      EvaluateCandidates(candidates.size(), workers, accept);
  ContiguousResult result;
  result.candidates = candidates.size();
  for (std::size_t j = 0; j < ok.size(); ++j) {
    if (!ok[j]) continue;
    ++result.satisfying;
    if (!result.loads) {
      result.loads = candidates[j];
      result.profile = ContiguousProfile(game, candidates[j]);
    }
  }
  if (result.profile && !IsPne(game, *result.profile)) {
    throw std::logic_error("contiguous candidate " +
                           FormatLoads(*result.loads) +
                           " passed the block test but is not a PNE");
  }
  return result;
}

}  // namespace

ConcavityReport IsThreeDiscreteConcaveSpecific(const ContestGame& game,
                                               std::uint64_t max_nodes) {
  return CheckConcavity(game, max_nodes, ConcavityForm::kSpecific);
}

ConcavityReport IsThreeDiscreteConcaveInvariant(const ContestGame& game,
                                                std::uint64_t max_nodes) {
  return CheckConcavity(game, max_nodes, ConcavityForm::kInvariant);
}

ContiguousResult SolveContiguousSpecific(const ContestGame& game,
                                         unsigned workers) {
  return SolveContiguous(game, workers, ConcavityForm::kSpecific);
}

ContiguousResult SolveContiguousInvariant(const ContestGame& game,
                                          unsigned workers) {
  return SolveContiguous(game, workers, ConcavityForm::kInvariant);
}

std::vector<std::size_t> SkillOrder(const ContestGame& game) {
  std::vector<std::size_t> order(game.num_players());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return game.skill(b) < game.skill(a);
                   });
  return order;
}

std::uint64_t CountInversions(const ContestGame& game,
                              const Profile& profile) {
  const std::vector<std::size_t> order = SkillOrder(game);
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (profile[order[a]] > profile[order[b]]) ++count;
    }
  }
  return count;
}

Profile ContiguousProfile(const ContestGame& game, const LoadVector& loads) {
  std::vector<int> q(game.num_players(), 0);
  const auto blocks = Blocks(SkillOrder(game), loads);
  for (int quality = 1; quality <= loads.num_qualities(); ++quality) {
    for (std::size_t i : blocks[quality - 1]) q[i] = quality;
  }
  return Profile(std::move(q));
}

ContigufyResult Contigufy(const ContestGame& game, const Profile& pne) {
  game.ValidateProfile(pne);
  if (!IsPne(game, pne)) {
    throw PreconditionError("contigufy needs a pure Nash equilibrium, got " +
                            FormatProfile(pne));
  }
  const std::vector<std::size_t> order = SkillOrder(game);
  const std::size_t n = order.size();
  std::vector<int> q(n);
  for (std::size_t a = 0; a < n; ++a) q[a] = pne[order[a]];

  ContigufyResult result;
  for (;;) {
    std::size_t witness = n;
    std::size_t partner = n;
    for (std::size_t a = 0; a < n && witness == n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (q[a] > q[b]) {
          witness = a;
          partner = b;
          break;
        }
      }
    }
    if (witness == n) break;
    std::swap(q[witness], q[partner]);
    if (++result.swaps > n * n) {
      throw std::logic_error("contigufy exceeded n^2 swaps");
    }
  }
  std::vector<int> out(n);
  for (std::size_t a = 0; a < n; ++a) out[order[a]] = q[a];
  result.profile = Profile(std::move(out));
  if (!IsPne(game, result.profile)) {
    throw PreconditionError(
        "contiguous rearrangement " + FormatProfile(result.profile) +
        " is not a PNE; the payment is not three-discrete-concave");
  }
  return result;
}

std::optional<Profile> SolveAllAtLowest(const ContestGame& game) {
  if (!std::holds_alternative<Proportional>(game.payment_function()) ||
      game.participation() != Participation::kMandatory ||
      game.cost_function().kind != CostFunction::Kind::kProduct) {
    throw PreconditionError(
        "the all-at-lowest solver needs proportional allocation, mandatory "
        "participation and product cost");
  }
  const Rational bound = game.effort(2) / (game.effort(2) - game.effort(1));
  const Rational min_skill =
      *std::min_element(game.skills().begin(), game.skills().end());
  if (min_skill < bound) return std::nullopt;
  Profile lowest(std::vector<int>(game.num_players(), 1));
  if (!IsPne(game, lowest)) {
    throw std::logic_error("all-at-lowest profile is not a PNE although the "
                           "skill bound holds");
  }
  return lowest;
}

const Rational& NormalFormGame::Payoff(std::size_t player,
                                       const Profile& profile) const {
  return payoffs[player][ProfileIndex(profile, num_strategies)];
}

std::vector<Profile> NormalFormGame::PureNashEquilibria() const {
  std::vector<Profile> result;
  ForEachProfile(num_players, num_strategies, [&](const Profile& p) {
    for (int i = 0; i < num_players; ++i) {
      for (int s = 1; s <= num_strategies; ++s) {
        if (Payoff(i, p) < Payoff(i, p.With(i, s))) return true;
      }
    }
    result.push_back(p);
    return true;
  });
  return result;
}

ContestGame ReduceFromNormalForm(const NormalFormGame& source,
                                 std::vector<Rational> skills,
                                 std::vector<Rational> efforts,
                                 const CostFunction& cost) {
  const int n = source.num_players;
  const int m = source.num_strategies;
  if (static_cast<int>(skills.size()) != n ||
      static_cast<int>(efforts.size()) != m) {
    throw InputError("reduction needs n skills and m efforts");
  }
  if (static_cast<int>(source.payoffs.size()) != n) {
    throw InputError("normal-form game needs one payoff table per player");
  }
  for (const auto& table : source.payoffs) {
    if (table.size() != ProfileCount(n, m)) {
      throw InputError("normal-form payoff table has the wrong size");
    }
  }
  auto cost_of = [&](int i, int q) {
    return cost.kind == CostFunction::Kind::kProduct ? skills[i] * efforts[q - 1]
                                                      : cost.table[i][q - 1];
  };
  PlayerSpecificTable table;
  table.form = PlayerSpecificTable::KeyForm::kProfile;
  ForEachProfile(n, m, [&](const Profile& p) {
    std::vector<int> key(p.qualities().begin(), p.qualities().end());
    for (int i = 0; i < n; ++i) {
      table.values[{i, key, 0}] = source.Payoff(i, p) + cost_of(i, p[i]);
    }
    return true;
  });
  const Participation participation = efforts.front().IsZero()
                                          ? Participation::kVoluntary
                                          : Participation::kMandatory;
  return ContestGame(std::move(skills), std::move(efforts), participation,
                     cost, std::move(table));
}

}  // namespace contestq
