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

#ifndef CONTESTQ_INSTANCES_HPP_
#define CONTESTQ_INSTANCES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contestq/combinatorics.hpp"
#include "contestq/dynamics.hpp"
#include "contestq/game.hpp"
#include "contestq/profile.hpp"
#include "contestq/rational.hpp"

namespace contestq {

enum class InstanceId {
  kCounterexample1,
  kCounterexample2,
  kMatchingPennies,
  kFipVoluntary,
  kFipMandatory,
  kHighSkillFamily,
};

struct InstanceParams {
  int k = 2;  // Counterexample2
  std::optional<int> n;  // Fip* (default 3), HighSkillFamily (default 2)
  int q = 3;  // Fip*
  // HighSkillFamily; empty means the default two-player instance.
  std::vector<Rational> skills;
  std::vector<Rational> efforts;
};

// What the catalog promises about an instance.
struct Certificate {
  bool has_pne = false;
  GraphMode mode = GraphMode::kProfile;
  // Closed walk (front() == back()) that must be present in the graph.
  std::vector<std::vector<int>> cycle;
  bool best_response_cycle = false;  // cycle is also a best-response run
  // Exact sink set of the graph in `mode`, when acyclicity is claimed.
  std::optional<std::vector<std::vector<int>>> sinks;
  std::optional<Profile> pne;  // a profile that must be a PNE
};

struct NamedInstance {
  InstanceId id;
  std::string name;
  ContestGame game;
  Certificate certificate;
};

std::string InstanceName(InstanceId id);
std::optional<InstanceId> ParseInstanceId(const std::string& name);
std::vector<std::string> InstanceNames();

NamedInstance Build(InstanceId id, const InstanceParams& params = {});

struct CertificateCheck {
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct CertificateReport {
  bool passed = true;
  std::vector<CertificateCheck> checks;
};

CertificateReport VerifyCertificate(const NamedInstance& instance,
                                    const Caps& caps = {});

enum class RandomFamily {
  kObliviousInvariant,
  kConcaveSpecific,
  kConcaveInvariant,
  kProportional,
};

std::string RandomFamilyName(RandomFamily family);
std::optional<RandomFamily> ParseRandomFamily(const std::string& name);

// Reproducible random game.  Table families are scaled to satisfy the
// normalization bound and checked (classification or concavity) before they
// are returned; draws that fail the check are redrawn from the same stream.
ContestGame RandomGame(std::uint64_t seed, int n, int q, RandomFamily family);

}  // namespace contestq

#endif  // CONTESTQ_INSTANCES_HPP_
