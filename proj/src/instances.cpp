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

#include "contestq/instances.hpp"

#include <algorithm>
#include <random>

#include "contestq/errors.hpp"
#include "contestq/payments.hpp"
#include "contestq/solvers.hpp"

namespace contestq {
namespace {

std::vector<Rational> Efforts(int num_q, int offset) {
  std::vector<Rational> f;
  for (int q = 1; q <= num_q; ++q) f.emplace_back(q + offset);
  return f;
}

// Winner-take-all: the strictly highest quality takes 1, a tie there splits.
PlayerInvariantTable WinnerTakeAll(int n, int num_q) {
  PlayerInvariantTable table;
  for (const LoadVector& loads : LoadVectorsColex(n, num_q)) {
    int top = num_q;
    while (loads.load(top) == 0) --top;
    std::vector<int> key(loads.counts().begin(), loads.counts().end());
    for (int q = 1; q <= num_q; ++q) {
      if (loads.load(q) == 0) continue;
      table.values[{q, key}] =
          q == top ? Rational(1, loads.load(q)) : Rational(0);
    }
  }
  return table;
}

NamedInstance Counterexample1() {
  ContestGame game({Rational(1, 3), Rational(1, 3)}, Efforts(3, 0),
                   Participation::kMandatory, CostFunction::Product(),
                   WinnerTakeAll(2, 3));
  Certificate cert;
  cert.has_pne = false;
  cert.cycle = {{1, 2}, {3, 2}, {3, 1}, {2, 1}, {2, 3}, {1, 3}, {1, 2}};
  cert.best_response_cycle = true;
  return {InstanceId::kCounterexample1, "ce1", std::move(game),
          std::move(cert)};
}

NamedInstance Counterexample2(int k) {
  if (k < 2) throw InputError("counterexample 2 needs k >= 2");
  const Rational tail(1, k + 1);
  const Rational s1 = Rational(1) / (Rational(4 * k - 2) + tail);
  const Rational s2 = Rational(1) / (Rational(4 * k + 2) + tail);
  ContestGame game({s1, s2}, Efforts(k + 1, 0), Participation::kMandatory,
                   CostFunction::Product(), Proportional{});
  Certificate cert;
  cert.has_pne = false;
  cert.cycle = {{k, k + 1}, {k - 1, k + 1}, {k - 1, k}, {k, k}, {k, k + 1}};
  return {InstanceId::kCounterexample2, "ce2", std::move(game),
          std::move(cert)};
}

NamedInstance MatchingPennies() {
  // Player 1 is paid 1000 alone on her quality and 10 otherwise; player 2
  // the other way round.
  PlayerSpecificTable table;
  table.form = PlayerSpecificTable::KeyForm::kLoads;
  const Rational big(1000);
  const Rational small(10);
  for (const LoadVector& loads : LoadVectorsColex(2, 2)) {
    std::vector<int> key(loads.counts().begin(), loads.counts().end());
    for (int q = 1; q <= 2; ++q) {
      if (loads.load(q) == 0) continue;
      const bool alone = loads.load(q) == 1;
      table.values[{0, key, q}] = alone ? big : small;
      table.values[{1, key, q}] = alone ? small : big;
    }
  }
  ContestGame game({Rational(1), Rational(1)}, Efforts(2, 0),
                   Participation::kMandatory, CostFunction::Product(),
                   std::move(table));
  Certificate cert;
  cert.has_pne = false;
  cert.cycle = {{1, 2}, {1, 1}, {2, 1}, {2, 2}, {1, 2}};
  cert.best_response_cycle = true;
  return {InstanceId::kMatchingPennies, "matching-pennies", std::move(game),
          std::move(cert)};
}

NamedInstance Fip(int n, int num_q, bool voluntary) {
  if (n < 2 || num_q < 2) throw InputError("FIP instances need n, Q >= 2");
  ContestGame game(std::vector<Rational>(n, Rational(1)),
                   Efforts(num_q, voluntary ? -1 : 0),
                   voluntary ? Participation::kVoluntary
                             : Participation::kMandatory,
                   CostFunction::Product(), Proportional{});
  Certificate cert;
  cert.has_pne = true;
  cert.mode = GraphMode::kAnonymous;
  std::vector<int> all_low(num_q, 0);
  all_low[0] = n;
  std::vector<std::vector<int>> sinks{all_low};
  if (voluntary) {
    std::vector<int> one_up = all_low;
    one_up[0] = n - 1;
    one_up[1] = 1;
    sinks.push_back(one_up);
  }
  cert.sinks = sinks;
  return {voluntary ? InstanceId::kFipVoluntary : InstanceId::kFipMandatory,
          voluntary ? "fip-voluntary" : "fip-mandatory", std::move(game),
          std::move(cert)};
}

NamedInstance HighSkill(const InstanceParams& params) {
  std::vector<Rational> skills = params.skills;
  std::vector<Rational> efforts = params.efforts;
  if (efforts.empty()) efforts = Efforts(3, 0);
  if (skills.empty()) skills.assign(params.n.value_or(2), Rational(2));
  const int n = static_cast<int>(skills.size());
  ContestGame game(std::move(skills), std::move(efforts),
                   Participation::kMandatory, CostFunction::Product(),
                   Proportional{});
  Certificate cert;
  cert.has_pne = true;
  cert.pne = Profile(std::vector<int>(n, 1));
  return {InstanceId::kHighSkillFamily, "high-skill", std::move(game),
          std::move(cert)};
}

std::string Describe(const std::vector<std::vector<int>>& nodes, bool loads) {
  std::string out;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j) out += loads ? " " : " -> ";
    out += loads ? FormatLoads(LoadVector(nodes[j]))
                 : FormatProfile(Profile(nodes[j]));
  }
  return out;
}

}  // namespace

std::string InstanceName(InstanceId id) {
  switch (id) {
    case InstanceId::kCounterexample1: return "ce1";
    case InstanceId::kCounterexample2: return "ce2";
    case InstanceId::kMatchingPennies: return "matching-pennies";
    case InstanceId::kFipVoluntary: return "fip-voluntary";
    case InstanceId::kFipMandatory: return "fip-mandatory";
    case InstanceId::kHighSkillFamily: return "high-skill";
  }
  return "";
}

std::vector<std::string> InstanceNames() {
  return {"ce1", "ce2", "matching-pennies", "fip-voluntary", "fip-mandatory",
          "high-skill"};
}

std::optional<InstanceId> ParseInstanceId(const std::string& name) {
  for (InstanceId id :
       {InstanceId::kCounterexample1, InstanceId::kCounterexample2,
        InstanceId::kMatchingPennies, InstanceId::kFipVoluntary,
        InstanceId::kFipMandatory, InstanceId::kHighSkillFamily}) {
    if (InstanceName(id) == name) return id;
  }
  return std::nullopt;
}

NamedInstance Build(InstanceId id, const InstanceParams& params) {
  switch (id) {
    case InstanceId::kCounterexample1: return Counterexample1();
    case InstanceId::kCounterexample2: return Counterexample2(params.k);
    case InstanceId::kMatchingPennies: return MatchingPennies();
    case InstanceId::kFipVoluntary: return Fip(params.n.value_or(3), params.q, true);
    case InstanceId::kFipMandatory: return Fip(params.n.value_or(3), params.q, false);
    case InstanceId::kHighSkillFamily: return HighSkill(params);
  }
  throw InputError("unknown instance");
}

CertificateReport VerifyCertificate(const NamedInstance& instance,
                                    const Caps& caps) {
  const ContestGame& game = instance.game;
  const Certificate& cert = instance.certificate;
  CertificateReport report;
  auto record = [&](std::string claim, bool ok, std::string detail) {
    report.checks.push_back({std::move(claim), ok, std::move(detail)});
    report.passed = report.passed && ok;
  };

  const bool anonymous = cert.mode == GraphMode::kAnonymous;
  if (!anonymous || ProfileCount(game.num_players(), game.num_qualities()) <=
                        caps.max_profiles) {
    const BruteForceResult bf = BruteForcePne(game, caps.max_profiles);
    const std::string scanned = std::to_string(bf.scanned) + " profiles";
    record(cert.has_pne ? "a PNE exists" : "no PNE exists",
           bf.found.has_value() == cert.has_pne,
           bf.found ? "found " + FormatProfile(*bf.found) + " after " + scanned
                    : "none in " + scanned);
  }

  if (cert.pne) {
    const PneCheck check = CheckPne(game, *cert.pne);
    record(FormatProfile(*cert.pne) + " is a PNE", check.is_pne,
           check.witness ? "player " +
                               std::to_string(check.witness->player + 1) +
                               " improves by moving to " +
                               std::to_string(check.witness->target)
                         : "no improving deviation");
  }

  if (!cert.cycle.empty() || cert.sinks) {
    const ImprovementGraph graph =
        BuildImprovementGraph(game, cert.mode, caps.max_nodes);
    const GraphAnalysis analysis = AnalyzeGraph(graph);
    if (!cert.cycle.empty()) {
      record("improvement cycle " + Describe(cert.cycle, anonymous),
             graph.HasWalk(cert.cycle),
             std::to_string(graph.edge_count()) + " edges");
      record("graph has a cycle", !analysis.acyclic,
             analysis.acyclic ? "acyclic" : "cycle found");
    }
    if (cert.sinks) {
      record("graph is acyclic", analysis.acyclic,
             std::to_string(graph.nodes.size()) + " nodes");
      std::vector<std::vector<int>> found;
      for (std::size_t s : analysis.sinks) found.push_back(graph.nodes[s]);
      std::vector<std::vector<int>> expected = *cert.sinks;
      std::sort(found.begin(), found.end());
      std::sort(expected.begin(), expected.end());
      record("sinks are " + Describe(*cert.sinks, anonymous),
             found == expected, "found " + Describe(found, anonymous));
    }
  }

  if (cert.best_response_cycle) {
    PathOptions options;
    options.policy = Policy::kBestResponse;
    const PathResult run = RunImprovementPath(
        game, Profile(cert.cycle.front()), options);
    std::vector<std::vector<int>> walk;
    for (const Profile& p : run.cycle) {
      walk.emplace_back(p.qualities().begin(), p.qualities().end());
    }
    record("best-response dynamics repeat the cycle",
           run.outcome == PathOutcome::kCycleDetected && walk == cert.cycle,
           "observed " + Describe(walk, false));
  }
  return report;
}

std::string RandomFamilyName(RandomFamily family) {
  switch (family) {
    case RandomFamily::kObliviousInvariant: return "oblivious-invariant";
    case RandomFamily::kConcaveSpecific: return "concave-specific";
    case RandomFamily::kConcaveInvariant: return "concave-invariant";
    case RandomFamily::kProportional: return "proportional";
  }
  return "";
}

std::optional<RandomFamily> ParseRandomFamily(const std::string& name) {
  for (RandomFamily f :
       {RandomFamily::kObliviousInvariant, RandomFamily::kConcaveSpecific,
        RandomFamily::kConcaveInvariant, RandomFamily::kProportional}) {
    if (RandomFamilyName(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  int Int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool Coin() { return Int(0, 1) == 1; }
  Rational Fraction(int max_num, int max_den) {
    return Rational(Int(0, max_num), Int(1, max_den));
  }
  Rational Positive(int max_num, int max_den) {
    return Rational(Int(1, max_num), Int(1, max_den));
  }

  std::vector<Rational> Efforts(int num_q, bool voluntary) {
    std::vector<Rational> f;
    Rational current = voluntary ? Rational(0) : Positive(3, 2);
    f.push_back(current);
    for (int q = 2; q <= num_q; ++q) {
      current += Positive(3, 2);
      f.push_back(current);
    }
    return f;
  }

  std::vector<Rational> Skills(int n) {
    std::vector<Rational> s;
    for (int i = 0; i < n; ++i) s.push_back(Positive(6, 4));
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

constexpr int kMaxAttempts = 10'000;
constexpr std::uint64_t kCertifyCap = 1'000'000;

ContestGame DrawObliviousInvariant(Draw& draw, int n, int num_q) {
  const bool voluntary = draw.Coin();
  // v[q - 1][m - 1]: what each of the m players on q is paid.
  std::vector<std::vector<Rational>> v(num_q, std::vector<Rational>(n));
  for (auto& row : v) {
    for (auto& x : row) x = draw.Fraction(8, 8);
  }
  Rational peak;
  for (const LoadVector& loads : LoadVectorsColex(n, num_q)) {
    Rational total;
    for (int q = 1; q <= num_q; ++q) {
      if (loads.load(q)) total += Rational(loads.load(q)) * v[q - 1][loads.load(q) - 1];
    }
    peak = Max(peak, total);
  }
  if (Rational(1) < peak) {
    for (auto& row : v) {
      for (auto& x : row) x /= peak;
    }
  }
  ObliviousTable table;
  table.values.assign(n, v);
  return ContestGame(draw.Skills(n), draw.Efforts(num_q, voluntary),
                     voluntary ? Participation::kVoluntary
                               : Participation::kMandatory,
                     CostFunction::Product(), std::move(table));
}

// a_i - b_i * N(own quality) with b_i >= 0 and a_i >= n b_i.
struct Affine {
  Rational a;
  Rational b;
};

Affine DrawAffine(Draw& draw, int n) {
  Affine f;
  f.b = draw.Coin() ? Rational(0) : draw.Fraction(4, 8);
  f.a = Rational(n) * f.b + draw.Fraction(8, 8);
  return f;
}

ContestGame DrawConcaveSpecific(Draw& draw, int n, int num_q) {
  const bool voluntary = draw.Coin();
  std::vector<Affine> per_player;
  Rational total_a;
  for (int i = 0; i < n; ++i) {
    per_player.push_back(DrawAffine(draw, n));
    total_a += per_player.back().a;
  }
  // Normalization: sum_i P_i <= sum_i a_i.
  const Rational scale =
      Rational(1) < total_a ? Rational(1) / total_a : Rational(1);
  PlayerSpecificTable table;
  table.form = PlayerSpecificTable::KeyForm::kLoads;
  for (const LoadVector& loads : LoadVectorsColex(n, num_q)) {
    std::vector<int> key(loads.counts().begin(), loads.counts().end());
    for (int q = 1; q <= num_q; ++q) {
      if (loads.load(q) == 0) continue;
      for (int i = 0; i < n; ++i) {
        const Affine& f = per_player[i];
        table.values[{i, key, q}] =
            scale * (f.a - f.b * Rational(loads.load(q)));
      }
    }
  }
  return ContestGame(draw.Skills(n), draw.Efforts(num_q, voluntary),
                     voluntary ? Participation::kVoluntary
                               : Participation::kMandatory,
                     CostFunction::Product(), std::move(table));
}

ContestGame DrawConcaveInvariant(Draw& draw, int n, int num_q) {
  const bool voluntary = draw.Coin();
  Affine f = DrawAffine(draw, n);
  // Normalization: at most n players are paid at most a each.
  const Rational bound = Rational(n) * f.a;
  const Rational scale =
      Rational(1) < bound ? Rational(1) / bound : Rational(1);
  PlayerInvariantTable table;
  for (const LoadVector& loads : LoadVectorsColex(n, num_q)) {
    std::vector<int> key(loads.counts().begin(), loads.counts().end());
    for (int q = 1; q <= num_q; ++q) {
      if (loads.load(q) == 0) continue;
      table.values[{q, key}] = scale * (f.a - f.b * Rational(loads.load(q)));
    }
  }
  return ContestGame(draw.Skills(n), draw.Efforts(num_q, voluntary),
                     voluntary ? Participation::kVoluntary
                               : Participation::kMandatory,
                     CostFunction::Product(), std::move(table));
}

bool Normalized(const ContestGame& game) {
  if (ProfileCount(game.num_players(), game.num_qualities()) > kCertifyCap) {
    return true;
  }
  return CheckNormalization(game, kCertifyCap).holds;
}

}  // namespace

ContestGame RandomGame(std::uint64_t seed, int n, int num_q,
                       RandomFamily family) {
  if (n < 2 || num_q < 2) throw InputError("random games need n, Q >= 2");
  if (LoadVectorCount(n, num_q) > 100'000) {
    throw CapExceededError("random game shape too large");
  }
  Draw draw(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    switch (family) {
      case RandomFamily::kProportional: {
        const bool voluntary = draw.Coin();
        return ContestGame(draw.Skills(n), draw.Efforts(num_q, voluntary),
                           voluntary ? Participation::kVoluntary
                                     : Participation::kMandatory,
                           CostFunction::Product(), Proportional{});
      }
      case RandomFamily::kObliviousInvariant: {
        ContestGame g = DrawObliviousInvariant(draw, n, num_q);
        if (Normalized(g)) return g;
        break;
      }
      case RandomFamily::kConcaveSpecific: {
        ContestGame g = DrawConcaveSpecific(draw, n, num_q);
        if (Normalized(g) &&
            IsThreeDiscreteConcaveSpecific(g, kCertifyCap).holds) {
          return g;
        }
        break;
      }
      case RandomFamily::kConcaveInvariant: {
        ContestGame g = DrawConcaveInvariant(draw, n, num_q);
        if (Normalized(g) &&
            IsThreeDiscreteConcaveInvariant(g, kCertifyCap).holds) {
          return g;
        }
        break;
      }
    }
  }
  throw std::runtime_error("no certified draw for family " +
                           RandomFamilyName(family));
}

}  // namespace contestq
