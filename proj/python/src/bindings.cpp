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

// Python bindings. Rationals cross the boundary as "p/q" strings; the
// contestq package turns them into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "contestq/combinatorics.hpp"
#include "contestq/dynamics.hpp"
#include "contestq/errors.hpp"
#include "contestq/game.hpp"
#include "contestq/game_io.hpp"
#include "contestq/instances.hpp"
#include "contestq/payments.hpp"
#include "contestq/potential.hpp"
#include "contestq/solvers.hpp"

namespace py = pybind11;

namespace contestq {
namespace {

using Qualities = std::vector<int>;

Qualities Vec(const Profile& p) { return {p.qualities().begin(), p.qualities().end()}; }
Qualities Vec(const LoadVector& l) { return {l.counts().begin(), l.counts().end()}; }

std::vector<std::string> Strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.ToString());
  return out;
}

std::vector<Rational> Rationals(const std::vector<std::string>& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(Rational::Parse(v));
  return out;
}

Profile Checked(const ContestGame& game, const Qualities& q) {
  Profile p(q);
  game.ValidateProfile(p);
  return p;
}

py::dict DeviationDict(const Deviation& d) {
  py::dict out;
  out["player"] = d.player;
  out["target"] = d.target;
  out["gain"] = d.gain.ToString();
  return out;
}

Policy ParsePolicy(const std::string& name) {
  if (name == "first") return Policy::kFirstImproving;
  if (name == "best") return Policy::kBestResponse;
  if (name == "random") return Policy::kRandom;
  throw InputError("unknown policy '" + name + "' (first, best, random)");
}

py::dict PathDict(const PathResult& r) {
  static const char* const kNames[] = {"converged", "cycle", "truncated"};
  py::dict out;
  out["outcome"] = kNames[static_cast<int>(r.outcome)];
  std::vector<Qualities> path;
  for (const auto& p : r.path) path.push_back(Vec(p));
  std::vector<Qualities> cycle;
  for (const auto& p : r.cycle) cycle.push_back(Vec(p));
  out["path"] = path;
  out["cycle"] = cycle;
  out["steps"] = r.steps;
  return out;
}

py::dict GraphDict(const ImprovementGraph& g) {
  const GraphAnalysis a = AnalyzeGraph(g);
  py::list edges;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    for (const auto& e : g.edges[v]) {
      py::dict d;
      d["from"] = v;
      d["to"] = e.to;
      d["player"] = e.player;
      d["from_quality"] = e.from_quality;
      d["to_quality"] = e.to_quality;
      d["gain"] = e.gain.ToString();
      edges.append(d);
    }
  }
  py::dict out;
  out["anonymous"] = g.mode == GraphMode::kAnonymous;
  out["nodes"] = g.nodes;
  out["edges"] = edges;
  out["acyclic"] = a.acyclic;
  out["sinks"] = a.sinks;
  out["cycle"] = a.cycle;
  out["dot"] = ToDot(g, a);
  return out;
}

py::dict ConcavityDict(const ConcavityReport& r) {
  py::dict out;
  out["holds"] = r.holds;
  out["triples_checked"] = r.triples_checked;
  if (r.violation) {
    const auto& v = *r.violation;
    py::dict d;
    d["player"] = v.player;
    d["loads"] = Vec(v.loads);
    d["q_i"] = v.q_i;
    d["q_k"] = v.q_k;
    d["q"] = v.q;
    d["lhs"] = v.lhs.ToString();
    d["rhs"] = v.rhs.ToString();
    out["violation"] = d;
  } else {
    out["violation"] = py::none();
  }
  return out;
}

}  // namespace
}  // namespace contestq

PYBIND11_MODULE(_core, m) {
  using namespace contestq;
  m.doc() = "Exact solvers for discrete contest games";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);

  py::class_<ContestGame>(m, "Game")
      .def_static("from_json", &ParseGame, py::arg("text"))
      .def_static("load", &LoadGame, py::arg("path"))
      .def("to_json", &EmitGame)
      .def_property_readonly("num_players", &ContestGame::num_players)
      .def_property_readonly("num_qualities", &ContestGame::num_qualities)
      .def_property_readonly("skills", [](const ContestGame& g) { return Strings(g.skills()); })
      .def_property_readonly("efforts", [](const ContestGame& g) { return Strings(g.efforts()); })
      .def_property_readonly("voluntary",
                             [](const ContestGame& g) {
                               return g.participation() == Participation::kVoluntary;
                             })
      .def_property_readonly("payment_kind",
                             [](const ContestGame& g) {
                               return PaymentKindName(g.payment_function());
                             })
      .def_property_readonly("anonymous", &ContestGame::IsAnonymous)
      .def_property_readonly("warnings", &ContestGame::warnings)
      .def(
          "payment",
          [](const ContestGame& g, const Qualities& q, std::size_t i) {
            return Payment(g, Checked(g, q), i).ToString();
          },
          py::arg("profile"), py::arg("player"))
      .def(
          "utility",
          [](const ContestGame& g, const Qualities& q, std::size_t i) {
            return Utility(g, Checked(g, q), i).ToString();
          },
          py::arg("profile"), py::arg("player"))
      .def(
          "check_pne",
          [](const ContestGame& g, const Qualities& q) {
            const PneCheck c = CheckPne(g, Checked(g, q));
            py::dict out;
            out["is_pne"] = c.is_pne;
            out["witness"] = c.witness ? py::object(DeviationDict(*c.witness)) : py::none();
            return out;
          },
          py::arg("profile"))
      .def(
          "is_pne",
          [](const ContestGame& g, const Qualities& q) { return IsPne(g, Checked(g, q)); },
          py::arg("profile"))
      .def(
          "improvement_steps",
          [](const ContestGame& g, const Qualities& q) {
            py::list out;
            for (const auto& d : ImprovementSteps(g, Checked(g, q))) out.append(DeviationDict(d));
            return out;
          },
          py::arg("profile"));

  m.def(
      "make_game",
      [](const std::vector<std::string>& skills, const std::vector<std::string>& efforts,
         bool voluntary, const std::string& payment, int k) {
        PaymentFunction pay;
        if (payment == "proportional") {
          pay = Proportional{};
        } else if (payment == "equal_sharing") {
          pay = EqualSharing{};
        } else if (payment == "ktop") {
          pay = KTop{k};
        } else {
          throw InputError("make_game supports proportional, equal_sharing and ktop");
        }
        return ContestGame(Rationals(skills), Rationals(efforts),
                           voluntary ? Participation::kVoluntary : Participation::kMandatory,
                           CostFunction::Product(), pay);
      },
      py::arg("skills"), py::arg("efforts"), py::arg("voluntary"),
      py::arg("payment") = "proportional", py::arg("k") = 1);

  m.def(
      "classify",
      [](const ContestGame& g, std::uint64_t cap) {
        const Classification c = Classify(g, cap);
        py::dict out;
        out["oblivious"] = c.oblivious;
        out["player_invariant"] = c.player_invariant;
        return out;
      },
      py::arg("game"), py::arg("max_profiles") = Caps{}.max_profiles);

  m.def(
      "brute_force_pne",
      [](const ContestGame& g, bool all, std::uint64_t cap) {
        const auto r = BruteForcePne(g, cap, all);
        py::dict out;
        out["found"] = r.found ? py::object(py::cast(Vec(*r.found))) : py::none();
        std::vector<Qualities> list;
        for (const auto& p : r.all) list.push_back(Vec(p));
        out["all"] = list;
        out["scanned"] = r.scanned;
        return out;
      },
      py::arg("game"), py::arg("collect_all") = false,
      py::arg("max_profiles") = Caps{}.max_profiles);

  m.def(
      "solve_contiguous",
      [](const ContestGame& g, const std::string& variant, unsigned workers) {
        ContiguousResult r;
        if (variant == "specific") {
          r = SolveContiguousSpecific(g, workers);
        } else if (variant == "invariant") {
          r = SolveContiguousInvariant(g, workers);
        } else {
          throw InputError("variant must be 'specific' or 'invariant'");
        }
        py::dict out;
        out["profile"] = r.profile ? py::object(py::cast(Vec(*r.profile))) : py::none();
        out["loads"] = r.loads ? py::object(py::cast(Vec(*r.loads))) : py::none();
        out["candidates"] = r.candidates;
        out["satisfying"] = r.satisfying;
        return out;
      },
      py::arg("game"), py::arg("variant") = "specific", py::arg("workers") = 1);

  m.def(
      "solve_all_at_lowest",
      [](const ContestGame& g) -> std::optional<Qualities> {
        if (auto p = SolveAllAtLowest(g)) return Vec(*p);
        return std::nullopt;
      },
      py::arg("game"));

  m.def(
      "contigufy",
      [](const ContestGame& g, const Qualities& q) {
        const auto r = Contigufy(g, Checked(g, q));
        py::dict out;
        out["profile"] = Vec(r.profile);
        out["swaps"] = r.swaps;
        return out;
      },
      py::arg("game"), py::arg("pne"));

  m.def(
      "count_inversions",
      [](const ContestGame& g, const Qualities& q) { return CountInversions(g, Checked(g, q)); },
      py::arg("game"), py::arg("profile"));

  m.def(
      "concavity",
      [](const ContestGame& g, const std::string& form, std::uint64_t cap) {
        if (form == "specific") return ConcavityDict(IsThreeDiscreteConcaveSpecific(g, cap));
        if (form == "invariant") return ConcavityDict(IsThreeDiscreteConcaveInvariant(g, cap));
        throw InputError("form must be 'specific' or 'invariant'");
      },
      py::arg("game"), py::arg("form") = "specific", py::arg("max_nodes") = Caps{}.max_nodes);

  m.def(
      "potential",
      [](const ContestGame& g, const Qualities& q) { return Potential(g, Checked(g, q)).ToString(); },
      py::arg("game"), py::arg("profile"));

  m.def(
      "potential_ascent",
      [](const ContestGame& g, const Qualities& q) {
        const auto r = PotentialAscent(g, Checked(g, q));
        py::dict out;
        out["profile"] = Vec(r.profile);
        out["steps"] = r.steps;
        return out;
      },
      py::arg("game"), py::arg("start"));

  m.def(
      "run_dynamics",
      [](const ContestGame& g, const Qualities& start, const std::string& policy,
         std::uint64_t seed, std::uint64_t max_steps) {
        PathOptions o;
        o.policy = ParsePolicy(policy);
        o.seed = seed;
        o.max_steps = max_steps;
        return PathDict(RunImprovementPath(g, Checked(g, start), o));
      },
      py::arg("game"), py::arg("start"), py::arg("policy") = "best", py::arg("seed") = 0,
      py::arg("max_steps") = 1'000'000);

  m.def(
      "improvement_graph",
      [](const ContestGame& g, bool anonymous, std::uint64_t cap, unsigned workers) {
        return GraphDict(BuildImprovementGraph(
            g, anonymous ? GraphMode::kAnonymous : GraphMode::kProfile, cap, workers));
      },
      py::arg("game"), py::arg("anonymous") = false, py::arg("max_nodes") = Caps{}.max_nodes,
      py::arg("workers") = 1);

  m.def(
      "no_switch",
      [](const ContestGame& g, std::uint64_t cap) {
        const auto r = CheckNoSwitchLemma(g, cap);
        py::dict out;
        out["holds"] = r.holds;
        out["violations"] = r.violations.size();
        out["quiet_states_checked"] = r.quiet_states_checked;
        out["quiet_states_hold"] = r.quiet_states_hold;
        out["edges_checked"] = r.edges_checked;
        return out;
      },
      py::arg("game"), py::arg("max_nodes") = Caps{}.max_nodes);

  m.def("instance_names", &InstanceNames);

  m.def(
      "instance",
      [](const std::string& name, int k, std::optional<int> n, int q,
         const std::vector<std::string>& skills, const std::vector<std::string>& efforts) {
        const auto id = ParseInstanceId(name);
        if (!id) throw InputError("unknown instance '" + name + "'");
        InstanceParams p;
        p.k = k;
        p.n = n;
        p.q = q;
        p.skills = Rationals(skills);
        p.efforts = Rationals(efforts);
        return Build(*id, p).game;
      },
      py::arg("name"), py::arg("k") = 2, py::arg("n") = py::none(), py::arg("q") = 3,
      py::arg("skills") = std::vector<std::string>{},
      py::arg("efforts") = std::vector<std::string>{});

  m.def(
      "verify_instance",
      [](const std::string& name, int k, std::optional<int> n, int q) {
        const auto id = ParseInstanceId(name);
        if (!id) throw InputError("unknown instance '" + name + "'");
        InstanceParams p;
        p.k = k;
        p.n = n;
        p.q = q;
        const auto report = VerifyCertificate(Build(*id, p));
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict d;
          d["claim"] = c.claim;
          d["passed"] = c.passed;
          d["detail"] = c.detail;
          checks.append(d);
        }
        py::dict out;
        out["passed"] = report.passed;
        out["checks"] = checks;
        return out;
      },
      py::arg("name"), py::arg("k") = 2, py::arg("n") = py::none(), py::arg("q") = 3);

  m.def(
      "random_game",
      [](std::uint64_t seed, int n, int q, const std::string& family) {
        const auto f = ParseRandomFamily(family);
        if (!f) throw InputError("unknown random family '" + family + "'");
        return RandomGame(seed, n, q, *f);
      },
      py::arg("seed"), py::arg("n"), py::arg("q"), py::arg("family"));
}
