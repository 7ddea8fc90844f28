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

#include "contestq/dynamics.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "contestq/combinatorics.hpp"
#include "contestq/errors.hpp"
#include "contestq/payments.hpp"

namespace contestq {

std::vector<Deviation> ImprovementSteps(const ContestGame& game,
                                        const Profile& profile) {
  game.ValidateProfile(profile);
  std::vector<Deviation> steps;
  for (int i = 0; i < game.num_players(); ++i) {
    const Rational current = Utility(game, profile, i);
    for (int q = 1; q <= game.num_qualities(); ++q) {
      if (q == profile[i]) continue;
      Rational gain = Utility(game, profile.With(i, q), i) - current;
      if (gain.Sign() > 0) {
        steps.push_back({static_cast<std::size_t>(i), q, std::move(gain)});
      }
    }
  }
  return steps;
}

PathResult RunImprovementPath(const ContestGame& game, const Profile& start,
                              const PathOptions& options) {
  game.ValidateProfile(start);
  std::mt19937_64 rng(options.seed);
  PathResult result;
  std::map<Profile, std::size_t> seen;
  result.path.push_back(start);
  seen.emplace(start, 0);
  for (;;) {
    const Profile& current = result.path.back();
    const std::vector<Deviation> steps = ImprovementSteps(game, current);
    if (steps.empty()) {
      result.outcome = PathOutcome::kConverged;
      return result;
    }
    if (result.steps >= options.max_steps) {
      result.outcome = PathOutcome::kTruncated;
      return result;
    }
    Profile next;
    switch (options.policy) {
      case Policy::kFirstImproving:
        next = current.With(steps.front().player, steps.front().target);
        break;
      case Policy::kBestResponse: {
        const std::size_t player = steps.front().player;
        next = current.With(player, BestResponse(game, current, player));
        break;
      }
      case Policy::kRandom: {
        std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
        const Deviation& d = steps[pick(rng)];
        next = current.With(d.player, d.target);
        break;
      }
    }
    ++result.steps;
    result.path.push_back(next);
    auto [it, inserted] = seen.emplace(std::move(next), result.path.size() - 1);
    if (!inserted) {
      result.cycle.assign(result.path.begin() + it->second, result.path.end());
      result.outcome = PathOutcome::kCycleDetected;
      return result;
    }
  }
}

std::size_t ImprovementGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& out : edges) total += out.size();
  return total;
}

std::string ImprovementGraph::Label(std::size_t node) const {
  std::ostringstream os;
  if (mode == GraphMode::kAnonymous) os << "L:";
  const auto& v = nodes[node];
  for (std::size_t j = 0; j < v.size(); ++j) os << (j ? "," : "") << v[j];
  return os.str();
}

std::size_t ImprovementGraph::Find(const std::vector<int>& node) const {
  if (mode == GraphMode::kProfile) {
    if (nodes.empty() || node.size() != nodes.front().size()) return npos;
    for (int q : node) {
      if (q < 1 || q > num_qualities) return npos;
    }
    return ProfileIndex(Profile(node), num_qualities);
  }
  auto it = std::lower_bound(
      nodes.begin(), nodes.end(), node,
      [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                            b.rend());
      });
  if (it == nodes.end() || *it != node) return npos;
  return static_cast<std::size_t>(it - nodes.begin());
}

bool ImprovementGraph::HasWalk(
    const std::vector<std::vector<int>>& walk) const {
  for (std::size_t j = 0; j + 1 < walk.size(); ++j) {
    const std::size_t from = Find(walk[j]);
    const std::size_t to = Find(walk[j + 1]);
    if (from == npos || to == npos) return false;
    const auto& out = edges[from];
    if (std::none_of(out.begin(), out.end(),
                     [&](const GraphEdge& e) { return e.to == to; })) {
      return false;
    }
  }
  return true;
}

namespace {

void RequireAnonymous(const ContestGame& game) {
  if (!game.IsAnonymous()) {
    throw PreconditionError(
        "anonymous mode needs equal skills and identical cost rows");
  }
  if (!PaymentDependsOnLoadsOnly(game.payment_function())) {
    throw PreconditionError(
        "anonymous mode needs a payment defined on load vectors");
  }
}

Rational AnonymousPayment(const ContestGame& game, int quality,
                          const LoadVector& loads) {
  Rational value = PaymentAtLoads(game, 0, quality, loads);
  if (!IsDeclaredPlayerInvariant(game.payment_function())) {
    for (int i = 1; i < game.num_players(); ++i) {
      if (PaymentAtLoads(game, i, quality, loads) != value) {
        throw PreconditionError(
            "anonymous mode needs a payment independent of the player; "
            "players 1 and " + std::to_string(i + 1) + " differ at " +
            FormatLoads(loads));
      }
    }
  }
  return value;
}

template <class Fn>
void ParallelFor(std::size_t count, unsigned workers, Fn&& body) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t j = 0; j < count; ++j) body(j);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t j = w; j < count; j += workers) body(j);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

ImprovementGraph BuildImprovementGraph(const ContestGame& game,
                                       GraphMode mode,
                                       std::uint64_t max_nodes,
                                       unsigned workers) {
  const int n = game.num_players();
  const int num_q = game.num_qualities();
  ImprovementGraph graph;
  graph.mode = mode;
  graph.num_qualities = num_q;
  const std::uint64_t count = mode == GraphMode::kProfile
                                  ? ProfileCount(n, num_q)
                                  : LoadVectorCount(n, num_q);
  if (count > max_nodes) {
    throw CapExceededError("improvement graph needs " + std::to_string(count) +
                           " nodes, cap is " + std::to_string(max_nodes));
  }
  if (mode == GraphMode::kAnonymous) {
    RequireAnonymous(game);
    for (const LoadVector& l : LoadVectorsColex(n, num_q)) {
      graph.nodes.emplace_back(l.counts().begin(), l.counts().end());
    }
  } else {
    graph.nodes.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const Profile p = ProfileFromIndex(idx, n, num_q);
      graph.nodes.emplace_back(p.qualities().begin(), p.qualities().end());
    }
  }
  graph.edges.resize(graph.nodes.size());

  ParallelFor(graph.nodes.size(), workers, [&](std::size_t node) {
    auto& out = graph.edges[node];
    if (mode == GraphMode::kProfile) {
      const Profile p(graph.nodes[node]);
      for (const Deviation& d : ImprovementSteps(game, p)) {
        out.push_back({ProfileIndex(p.With(d.player, d.target), num_q),
                       static_cast<int>(d.player), p[d.player], d.target,
                       d.gain});
      }
      return;
    }
    const LoadVector loads(graph.nodes[node]);
    for (int q = 1; q <= num_q; ++q) {
      if (loads.load(q) == 0) continue;
      const Rational stay =
          AnonymousPayment(game, q, loads) - game.Cost(0, q);
      for (int t = 1; t <= num_q; ++t) {
        if (t == q) continue;
        const LoadVector moved = loads.Moved(q, t);
        Rational gain =
            AnonymousPayment(game, t, moved) - game.Cost(0, t) - stay;
        if (gain.Sign() > 0) {
          const std::vector<int> key(moved.counts().begin(),
                                     moved.counts().end());
          out.push_back({graph.Find(key), -1, q, t, std::move(gain)});
        }
      }
    }
  });
  return graph;
}

GraphAnalysis AnalyzeGraph(const ImprovementGraph& graph) {
  enum Color : unsigned char { kWhite, kGray, kBlack };
  const std::size_t count = graph.nodes.size();
  GraphAnalysis analysis;
  for (std::size_t v = 0; v < count; ++v) {
    if (graph.edges[v].empty()) analysis.sinks.push_back(v);
  }
  std::vector<Color> color(count, kWhite);
  // Iterative DFS; each frame is (node, next edge to follow).
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < count && analysis.acyclic; ++root) {
    if (color[root] != kWhite) continue;
    stack.push_back({root, 0});
    color[root] = kGray;
    while (!stack.empty() && analysis.acyclic) {
      auto& [v, next] = stack.back();
      if (next == graph.edges[v].size()) {
        color[v] = kBlack;
        stack.pop_back();
        continue;
      }
      const std::size_t w = graph.edges[v][next++].to;
      if (color[w] == kGray) {
        analysis.acyclic = false;
        auto it = std::find_if(stack.begin(), stack.end(),
                               [w](const auto& f) { return f.first == w; });
        for (; it != stack.end(); ++it) analysis.cycle.push_back(it->first);
        analysis.cycle.push_back(w);
      } else if (color[w] == kWhite) {
        color[w] = kGray;
        stack.push_back({w, 0});
      }
    }
    stack.clear();
  }
  return analysis;
}

std::string ToDot(const ImprovementGraph& graph,
                  const GraphAnalysis& analysis) {
  std::vector<bool> is_sink(graph.nodes.size(), false);
  for (std::size_t s : analysis.sinks) is_sink[s] = true;
  std::ostringstream os;
  os << "digraph improvement {\n";
  for (std::size_t v = 0; v < graph.nodes.size(); ++v) {
    os << "  n" << v << " [label=\"" << graph.Label(v) << "\", shape="
       << (is_sink[v] ? "doublecircle" : "circle") << "];\n";
  }
  for (std::size_t v = 0; v < graph.nodes.size(); ++v) {
    for (const GraphEdge& e : graph.edges[v]) {
      os << "  n" << v << " -> n" << e.to << " [label=\"";
      if (e.player >= 0) os << "p" << e.player + 1 << ": ";
      os << e.from_quality << "->" << e.to_quality << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

NoSwitchReport CheckNoSwitchLemma(const ContestGame& game,
                                  std::uint64_t max_nodes) {
  if (!std::holds_alternative<Proportional>(game.payment_function())) {
    throw PreconditionError(
        "the no-switch check applies to proportional allocation only");
  }
  NoSwitchReport report;
  report.anonymous = game.IsAnonymous();
  const ImprovementGraph graph = BuildImprovementGraph(
      game, report.anonymous ? GraphMode::kAnonymous : GraphMode::kProfile,
      max_nodes);
  for (std::size_t v = 0; v < graph.nodes.size(); ++v) {
    for (const GraphEdge& e : graph.edges[v]) {
      ++report.edges_checked;
      if (e.to_quality > e.from_quality) {
        report.violations.push_back(
            {graph.Label(v), e.from_quality, e.to_quality, e.gain});
      }
    }
  }
  if (report.anonymous &&
      game.participation() == Participation::kVoluntary) {
    report.quiet_states_checked = true;
    const int n = game.num_players();
    std::vector<int> all_low(game.num_qualities(), 0);
    all_low[0] = n;
    std::vector<int> one_up = all_low;
    one_up[0] = n - 1;
    one_up[1] = 1;
    for (const GraphEdge& e : graph.edges[graph.Find(one_up)]) {
      if ((e.from_quality == 1 && e.to_quality == 2) ||
          (e.from_quality == 2 && e.to_quality == 1)) {
        report.quiet_states_hold = false;
      }
    }
    for (const GraphEdge& e : graph.edges[graph.Find(all_low)]) {
      if (e.from_quality == 1 && e.to_quality == 2) {
        report.quiet_states_hold = false;
      }
    }
  }
  report.holds = report.violations.empty() && report.quiet_states_hold;
  return report;
}

}  // namespace contestq
