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

#ifndef CONTESTQ_DYNAMICS_HPP_
#define CONTESTQ_DYNAMICS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "contestq/game.hpp"
#include "contestq/profile.hpp"
#include "contestq/rational.hpp"

namespace contestq {

// Every strictly improving unilateral deviation out of `profile`, ordered by
// player index and then by target quality.
std::vector<Deviation> ImprovementSteps(const ContestGame& game,
                                        const Profile& profile);

enum class Policy { kFirstImproving, kBestResponse, kRandom };

struct PathOptions {
  Policy policy = Policy::kBestResponse;
  std::uint64_t seed = 0;  // only read by kRandom
  std::uint64_t max_steps = 1'000'000;
};

enum class PathOutcome { kConverged, kCycleDetected, kTruncated };

struct PathResult {
  PathOutcome outcome = PathOutcome::kTruncated;
  // Every visited state, start first.
  std::vector<Profile> path;
  // For kCycleDetected: the repeated stretch, closed (front() == back()).
  std::vector<Profile> cycle;
  std::uint64_t steps = 0;

  const Profile& final_profile() const { return path.back(); }
};

// Policies:
//   kFirstImproving  first player with an improving move takes the lowest
//                    improving quality.
//   kBestResponse    first player with an improving move jumps to her best
//                    response (ties to the lowest quality).
//   kRandom          a uniformly drawn improvement step (mt19937_64 seeded
//                    with `seed`).
// A state seen twice ends the run with kCycleDetected.
PathResult RunImprovementPath(const ContestGame& game, const Profile& start,
                              const PathOptions& options);

enum class GraphMode { kProfile, kAnonymous };

struct GraphEdge {
  std::size_t to = 0;
  int player = -1;  // -1 in anonymous mode
  int from_quality = 0;
  int to_quality = 0;
  Rational gain;
};

// Nodes are profiles (kProfile, indexed by ProfileIndex) or load vectors
// (kAnonymous, colex order).  Anonymous mode needs equal skills, equal cost
// rows and a payment that does not depend on the player's identity.
struct ImprovementGraph {
  GraphMode mode = GraphMode::kProfile;
  int num_qualities = 0;
  std::vector<std::vector<int>> nodes;
  std::vector<std::vector<GraphEdge>> edges;

  std::size_t edge_count() const;
  std::string Label(std::size_t node) const;
  // Index of a node given by its quality or load tuple; npos if absent.
  std::size_t Find(const std::vector<int>& node) const;
  // True if every consecutive pair of the closed walk is an edge.
  bool HasWalk(const std::vector<std::vector<int>>& walk) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

ImprovementGraph BuildImprovementGraph(const ContestGame& game,
                                       GraphMode mode,
                                       std::uint64_t max_nodes,
                                       unsigned workers = 1);

struct GraphAnalysis {
  bool acyclic = true;
  std::vector<std::size_t> sinks;
  // Closed cycle (front() == back()) from the first back edge found by DFS.
  std::vector<std::size_t> cycle;
};

GraphAnalysis AnalyzeGraph(const ImprovementGraph& graph);

std::string ToDot(const ImprovementGraph& graph,
                  const GraphAnalysis& analysis);

struct NoSwitchViolation {
  std::string state;
  int from_quality = 0;
  int to_quality = 0;
  Rational gain;
};

struct NoSwitchReport {
  bool holds = true;
  bool anonymous = false;
  std::vector<NoSwitchViolation> violations;
  // Voluntary participation only: no edge between qualities 1 and 2 at
  // (n-1,1,0,...) and no edge 1 -> 2 at (n,0,...).
  bool quiet_states_checked = false;
  bool quiet_states_hold = true;
  std::uint64_t edges_checked = 0;
};

// Proportional allocation only.  Uses the anonymous graph when the game is
// anonymous and the profile graph otherwise.
NoSwitchReport CheckNoSwitchLemma(const ContestGame& game,
                                  std::uint64_t max_nodes);

}  // namespace contestq

#endif  // CONTESTQ_DYNAMICS_HPP_
