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

#ifndef CONTESTQ_COMBINATORICS_HPP_
#define CONTESTQ_COMBINATORICS_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "contestq/profile.hpp"

namespace contestq {

// Saturates at UINT64_MAX.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t ProfileCount(int num_players, int num_qualities);
std::uint64_t LoadVectorCount(int num_players, int num_qualities);

// Mixed-radix encoding; player 0 is the most significant digit, so index
// order is lexicographic order on profiles.
Profile ProfileFromIndex(std::uint64_t index, int num_players,
                         int num_qualities);
std::uint64_t ProfileIndex(const Profile& profile, int num_qualities);

// Visits all Q^n profiles in lexicographic order. The visitor returns false
// to stop early.
void ForEachProfile(int num_players, int num_qualities,
                    const std::function<bool(const Profile&)>& visit);

// All compositions of n into Q non-negative parts, colexicographic over
// (N(1), ..., N(Q)): (n,0,..,0) first, (0,..,0,n) last.
std::vector<LoadVector> LoadVectorsColex(int num_players, int num_qualities);

// Enumeration limits. Defaults: 10^6 profiles, 10^5 graph nodes. The
// CONTESTQ_CAP environment variable overrides both.
struct Caps {
  std::uint64_t max_profiles = 1'000'000;
  std::uint64_t max_nodes = 100'000;

  static Caps FromEnvironment();
};

}  // namespace contestq

#endif  // CONTESTQ_COMBINATORICS_HPP_
