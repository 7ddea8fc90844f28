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

#ifndef CONTESTQ_PROFILE_HPP_
#define CONTESTQ_PROFILE_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace contestq {

// A quality vector: one 1-indexed quality per player (players 0-indexed in
// the C++ API, printed 1-indexed).
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<int> qualities)
      : qualities_(std::move(qualities)) {}

  std::size_t size() const { return qualities_.size(); }
  int operator[](std::size_t player) const { return qualities_[player]; }
  std::span<const int> qualities() const { return qualities_; }

  // Copy of this profile with `player` moved to `quality`.
  Profile With(std::size_t player, int quality) const;

  friend auto operator<=>(const Profile&, const Profile&) = default;

 private:
  std::vector<int> qualities_;
};

// Per-quality occupancy counts N(1..Q).
class LoadVector {
 public:
  LoadVector() = default;
  explicit LoadVector(std::vector<int> counts) : counts_(std::move(counts)) {}

  int num_qualities() const { return static_cast<int>(counts_.size()); }
  // 1-indexed quality.
  int load(int quality) const { return counts_[quality - 1]; }
  std::span<const int> counts() const { return counts_; }
  int total() const;

  // Copy with one unit moved from quality `from` to quality `to`.
  LoadVector Moved(int from, int to) const;

  friend auto operator<=>(const LoadVector&, const LoadVector&) = default;

 private:
  std::vector<int> counts_;
};

LoadVector LoadOf(const Profile& profile, int num_qualities);

// "1,2,3" and "L:2,1,0" renderings used by the CLI and DOT output.
std::string FormatProfile(const Profile& profile);
std::string FormatLoads(const LoadVector& loads);

}  // namespace contestq

#endif  // CONTESTQ_PROFILE_HPP_
