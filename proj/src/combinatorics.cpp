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

#include "contestq/combinatorics.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "contestq/errors.hpp"

namespace contestq {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

}  // namespace

Profile Profile::With(std::size_t player, int quality) const {
  std::vector<int> q = qualities_;
  q[player] = quality;
  return Profile(std::move(q));
}

int LoadVector::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

LoadVector LoadVector::Moved(int from, int to) const {
  std::vector<int> c = counts_;
  --c[from - 1];
  ++c[to - 1];
  return LoadVector(std::move(c));
}

LoadVector LoadOf(const Profile& profile, int num_qualities) {
  std::vector<int> counts(num_qualities, 0);
  for (int q : profile.qualities()) ++counts[q - 1];
  return LoadVector(std::move(counts));
}

std::string FormatProfile(const Profile& profile) {
  std::ostringstream os;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) os << ',';
    os << profile[i];
  }
  return os.str();
}

std::string FormatLoads(const LoadVector& loads) {
  std::ostringstream os;
  os << "L:";
  for (int q = 1; q <= loads.num_qualities(); ++q) {
    if (q > 1) os << ',';
    os << loads.load(q);
  }
  return os.str();
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    result = result * (n - k + j) / j;
    if (result > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t ProfileCount(int num_players, int num_qualities) {
  unsigned __int128 count = 1;
  for (int i = 0; i < num_players; ++i) {
    count *= static_cast<unsigned>(num_qualities);
    if (count > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(count);
}

std::uint64_t LoadVectorCount(int num_players, int num_qualities) {
  return Binomial(num_players + num_qualities - 1, num_qualities - 1);
}

Profile ProfileFromIndex(std::uint64_t index, int num_players,
                         int num_qualities) {
  std::vector<int> q(num_players);
  for (int i = num_players - 1; i >= 0; --i) {
    q[i] = static_cast<int>(index % num_qualities) + 1;
    index /= num_qualities;
  }
  return Profile(std::move(q));
}

std::uint64_t ProfileIndex(const Profile& profile, int num_qualities) {
  std::uint64_t index = 0;
  for (int q : profile.qualities()) index = index * num_qualities + (q - 1);
  return index;
}

void ForEachProfile(int num_players, int num_qualities,
                    const std::function<bool(const Profile&)>& visit) {
  std::vector<int> q(num_players, 1);
  while (true) {
    if (!visit(Profile(q))) return;
    int pos = num_players - 1;
    while (pos >= 0 && q[pos] == num_qualities) q[pos--] = 1;
    if (pos < 0) return;
    ++q[pos];
  }
}

std::vector<LoadVector> LoadVectorsColex(int num_players, int num_qualities) {
  // Colex order on (N(1..Q)) is lexicographic order on (N(Q), ..., N(1)):
  // enumerate the reversed tuple lexicographically and flip it back.
  std::vector<LoadVector> out;
  std::vector<int> rev(num_qualities, 0);
  const auto emit = [&] {
    std::vector<int> counts(rev.rbegin(), rev.rend());
    out.emplace_back(std::move(counts));
  };
  // rev[0..Q-2] free with sum <= n, rev[Q-1] = n - sum.
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == num_qualities - 1) {
      rev[pos] = remaining;
      emit();
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      rev[pos] = v;
      rec(pos + 1, remaining - v);
    }
  };
  rec(0, num_players);
  return out;
}

Caps Caps::FromEnvironment() {
  Caps caps;
  if (const char* env = std::getenv("CONTESTQ_CAP"); env && *env) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
      throw InputError(std::string("CONTESTQ_CAP must be a positive integer, "
                                   "got '") + env + "'");
    }
    caps.max_profiles = value;
    caps.max_nodes = value;
  }
  return caps;
}

}  // namespace contestq
