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

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "contestq/combinatorics.hpp"
#include "contestq/dynamics.hpp"
#include "contestq/errors.hpp"
#include "contestq/game.hpp"
#include "contestq/game_io.hpp"
#include "contestq/instances.hpp"
#include "contestq/payments.hpp"
#include "contestq/potential.hpp"
#include "contestq/solvers.hpp"

namespace contestq {
namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
  std::string game_path;
  std::string format = "text";
  std::optional<std::uint64_t> max_profiles;
  std::optional<std::uint64_t> max_nodes;
  unsigned workers = 1;

  // solve
  std::string method = "brute";
  std::string variant = "auto";
  std::string start;
  bool all = false;

  // verify
  std::string profile;
  std::string profile_file;

  // dynamics
  std::string policy = "best";
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 100'000;

  // graph
  bool anonymous = false;
  std::string dot_path;
  bool no_switch = false;

  // concavity
  std::string form = "auto";

  // instance
  std::string instance;
  int k = 2;
  std::optional<int> n;
  int q = 3;
  std::string emit_path;
  bool verify = false;
};

Caps ResolveCaps(const Options& o) {
  Caps caps = Caps::FromEnvironment();
  if (o.max_profiles) caps.max_profiles = *o.max_profiles;
  if (o.max_nodes) caps.max_nodes = *o.max_nodes;
  return caps;
}

json Ints(std::span<const int> v) { return json(std::vector<int>(v.begin(), v.end())); }

std::string Join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    out += (j ? ", " : "") + parts[j];
  }
  return out;
}

std::vector<std::string> Utilities(const ContestGame& game, const Profile& p) {
  std::vector<std::string> u;
  for (int i = 0; i < game.num_players(); ++i) {
    u.push_back(Utility(game, p, i).ToString());
  }
  return u;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  void Report(std::ostream& err) const {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    err << "time: " << us / 1000.0 << " ms\n";
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Profile ResolveProfile(const ContestGame& game, const std::string& text) {
  auto state = ParseState(text);
  if (auto* p = std::get_if<Profile>(&state)) {
    game.ValidateProfile(*p);
    return *p;
  }
  const LoadVector& loads = std::get<LoadVector>(state);
  if (loads.num_qualities() != game.num_qualities() ||
      loads.total() != game.num_players()) {
    throw InputError("load vector " + FormatLoads(loads) +
                     " does not match the game");
  }
  return ContiguousProfile(game, loads);
}

int EmitSolution(const ContestGame& game, const Options& o,
                 const std::string& method, const std::optional<Profile>& p,
                 const json& stats, const std::string& negative,
                 std::ostream& out) {
  if (o.format == "json") {
    json doc;
    doc["method"] = method;
    doc["found"] = p.has_value();
    if (p) {
      doc["profile"] = Ints(p->qualities());
      doc["loads"] = Ints(LoadOf(*p, game.num_qualities()).counts());
      doc["utilities"] = Utilities(game, *p);
    } else {
      doc["profile"] = nullptr;
      doc["message"] = negative;
    }
    doc["stats"] = stats;
    out << doc.dump(2) << "\n";
  } else if (p) {
    out << "pure Nash equilibrium: " << FormatProfile(*p) << "\n";
    out << "loads: " << FormatLoads(LoadOf(*p, game.num_qualities())) << "\n";
    out << "utilities: " << Join(Utilities(game, *p)) << "\n";
    out << "method: " << method << "\n";
    for (const auto& [key, value] : stats.items()) {
      out << key << ": " << value.dump() << "\n";
    }
  } else {
    out << negative << "\n";
  }
  return p ? kOk : kNegative;
}

int Solve(const Options& o, std::ostream& out, std::ostream& err) {
  const ContestGame game = LoadGame(o.game_path);
  const Caps caps = ResolveCaps(o);
  Timer timer;
  int code = kUsage;
  if (o.method == "brute") {
    const BruteForceResult r = BruteForcePne(game, caps.max_profiles, o.all);
    json stats{{"profiles_scanned", r.scanned}};
    if (o.all) {
      json all = json::array();
      for (const Profile& p : r.all) all.push_back(FormatProfile(p));
      stats["all"] = all;
    }
    code = EmitSolution(game, o, "brute", r.found, stats,
                        "no pure Nash equilibrium (" +
                            std::to_string(r.scanned) + " profiles scanned)",
                        out);
  } else if (o.method == "contiguous") {
    std::string variant = o.variant;
    if (variant == "auto") {
      variant = IsDeclaredPlayerInvariant(game.payment_function())
                    ? "invariant"
                    : "specific";
    }
    if (variant != "specific" && variant != "invariant") {
      throw InputError("--variant must be specific, invariant or auto");
    }
    const ContiguousResult r = variant == "invariant"
                                   ? SolveContiguousInvariant(game, o.workers)
                                   : SolveContiguousSpecific(game, o.workers);
    json stats{{"candidates_checked", r.candidates},
               {"satisfying_candidates", r.satisfying},
               {"variant", variant}};
    code = EmitSolution(game, o, "contiguous", r.profile, stats,
                        "no contiguous pure Nash equilibrium (" +
                            std::to_string(r.candidates) +
                            " candidates checked)",
                        out);
  } else if (o.method == "all-at-one") {
    const std::optional<Profile> p = SolveAllAtLowest(game);
    const Rational bound = game.effort(2) / (game.effort(2) - game.effort(1));
    code = EmitSolution(game, o, "all-at-one", p,
                        json{{"skill_bound", bound.ToString()}},
                        "skill bound " + bound.ToString() +
                            " not met; no conclusion",
                        out);
  } else if (o.method == "potential") {
    const Profile start =
        o.start.empty() ? Profile(std::vector<int>(game.num_players(), 1))
                        : ResolveProfile(game, o.start);
    const AscentResult r = PotentialAscent(game, start);
    code = EmitSolution(
        game, o, "potential", r.profile,
        json{{"steps", r.steps},
             {"potential", Potential(game, r.profile).ToString()}},
        "", out);
  } else {
    throw InputError("unknown method \"" + o.method + "\"");
  }
  timer.Report(err);
  return code;
}

int Verify(const Options& o, std::ostream& out) {
  const ContestGame game = LoadGame(o.game_path);
  if (o.profile.empty() == o.profile_file.empty()) {
    throw InputError("give exactly one of --profile and --profile-file");
  }
  Profile p;
  if (!o.profile.empty()) {
    p = ResolveProfile(game, o.profile);
  } else {
    p = ParseProfileJson(ReadFile(o.profile_file));
    game.ValidateProfile(p);
  }
  const PneCheck check = CheckPne(game, p);
  if (o.format == "json") {
    json doc{{"profile", Ints(p.qualities())},
             {"is_pne", check.is_pne},
             {"utilities", Utilities(game, p)}};
    if (check.witness) {
      doc["witness"] = {{"player", check.witness->player + 1},
                        {"target", check.witness->target},
                        {"gain", check.witness->gain.ToString()}};
    }
    out << doc.dump(2) << "\n";
  } else if (check.is_pne) {
    out << FormatProfile(p) << " is a pure Nash equilibrium\n";
  } else {
    out << FormatProfile(p) << " is not a pure Nash equilibrium: player "
        << check.witness->player + 1 << " gains "
        << check.witness->gain.ToString() << " by moving to quality "
        << check.witness->target << "\n";
  }
  return check.is_pne ? kOk : kNegative;
}

int Dynamics(const Options& o, std::ostream& out) {
  const ContestGame game = LoadGame(o.game_path);
  PathOptions options;
  if (o.policy == "first") {
    options.policy = Policy::kFirstImproving;
  } else if (o.policy == "best") {
    options.policy = Policy::kBestResponse;
  } else if (o.policy == "random") {
    options.policy = Policy::kRandom;
  } else {
    throw InputError("--policy must be first, best or random");
  }
  options.seed = o.seed;
  options.max_steps = o.max_steps;
  const Profile start =
      o.start.empty() ? Profile(std::vector<int>(game.num_players(), 1))
                      : ResolveProfile(game, o.start);
  const PathResult r = RunImprovementPath(game, start, options);
  const char* outcome = r.outcome == PathOutcome::kConverged ? "converged"
                        : r.outcome == PathOutcome::kCycleDetected
                            ? "cycle"
                            : "truncated";
  if (o.format == "json") {
    json path = json::array();
    for (const Profile& p : r.path) path.push_back(Ints(p.qualities()));
    json cycle = json::array();
    for (const Profile& p : r.cycle) cycle.push_back(Ints(p.qualities()));
    out << json{{"outcome", outcome},
                {"steps", r.steps},
                {"path", path},
                {"cycle", cycle}}
               .dump(2)
        << "\n";
  } else {
    out << "outcome: " << outcome << " after " << r.steps << " steps\n";
    std::vector<std::string> path;
    for (const Profile& p : r.path) path.push_back(FormatProfile(p));
    out << "path: ";
    for (std::size_t j = 0; j < path.size(); ++j) {
      out << (j ? " -> " : "") << path[j];
    }
    out << "\n";
    if (!r.cycle.empty()) {
      out << "cycle length: " << r.cycle.size() - 1 << "\n";
    }
  }
  return r.outcome == PathOutcome::kConverged ? kOk : kNegative;
}

int Graph(const Options& o, std::ostream& out, std::ostream& err) {
  const ContestGame game = LoadGame(o.game_path);
  const Caps caps = ResolveCaps(o);
  Timer timer;
  const ImprovementGraph graph = BuildImprovementGraph(
      game, o.anonymous ? GraphMode::kAnonymous : GraphMode::kProfile,
      caps.max_nodes, o.workers);
  const GraphAnalysis analysis = AnalyzeGraph(graph);
  std::optional<NoSwitchReport> lemma;
  if (o.no_switch) lemma = CheckNoSwitchLemma(game, caps.max_nodes);
  if (!o.dot_path.empty()) {
    std::ofstream dot(o.dot_path);
    if (!dot) throw InputError("cannot write " + o.dot_path);
    dot << ToDot(graph, analysis);
  }
  std::vector<std::string> sinks;
  for (std::size_t s : analysis.sinks) sinks.push_back(graph.Label(s));
  std::vector<std::string> cycle;
  for (std::size_t v : analysis.cycle) cycle.push_back(graph.Label(v));
  if (o.format == "json") {
    json doc{{"nodes", graph.nodes.size()},
             {"edges", graph.edge_count()},
             {"acyclic", analysis.acyclic},
             {"sinks", sinks},
             {"cycle", cycle}};
    if (lemma) {
      json v = json::array();
      for (const auto& x : lemma->violations) {
        v.push_back({{"state", x.state},
                     {"from", x.from_quality},
                     {"to", x.to_quality},
                     {"gain", x.gain.ToString()}});
      }
      doc["no_switch"] = {{"holds", lemma->holds},
                          {"violations", v},
                          {"quiet_states_hold", lemma->quiet_states_hold}};
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "nodes: " << graph.nodes.size() << "\n";
    out << "edges: " << graph.edge_count() << "\n";
    out << "acyclic: " << (analysis.acyclic ? "yes" : "no") << "\n";
    out << "sinks (" << sinks.size() << "): " << Join(sinks) << "\n";
    if (!analysis.acyclic) {
      out << "cycle: ";
      for (std::size_t j = 0; j < cycle.size(); ++j) {
        out << (j ? " -> " : "") << cycle[j];
      }
      out << "\n";
    }
    if (lemma) {
      out << "no-switch lemma: " << (lemma->holds ? "holds" : "violated")
          << " (" << lemma->edges_checked << " edges, "
          << lemma->violations.size() << " upward)\n";
      for (const auto& x : lemma->violations) {
        out << "  " << x.state << ": " << x.from_quality << " -> "
            << x.to_quality << " gains " << x.gain.ToString() << "\n";
      }
    }
  }
  timer.Report(err);
  if (lemma && !lemma->holds) return kNegative;
  return analysis.acyclic ? kOk : kNegative;
}

int Concavity(const Options& o, std::ostream& out) {
  const ContestGame game = LoadGame(o.game_path);
  const Caps caps = ResolveCaps(o);
  std::string form = o.form;
  if (form == "auto") {
    form = IsDeclaredPlayerInvariant(game.payment_function()) ? "invariant"
                                                               : "specific";
  }
  if (form != "specific" && form != "invariant") {
    throw InputError("--form must be specific, invariant or auto");
  }
  const ConcavityReport r =
      form == "invariant"
          ? IsThreeDiscreteConcaveInvariant(game, caps.max_nodes)
          : IsThreeDiscreteConcaveSpecific(game, caps.max_nodes);
  if (o.format == "json") {
    json doc{{"form", form},
             {"holds", r.holds},
             {"triples_checked", r.triples_checked}};
    if (r.violation) {
      const auto& v = *r.violation;
      doc["violation"] = {{"player", v.player + 1},
                          {"loads", Ints(v.loads.counts())},
                          {"q_i", v.q_i},
                          {"q_k", v.q_k},
                          {"q", v.q},
                          {"lhs", v.lhs.ToString()},
                          {"rhs", v.rhs.ToString()}};
    }
    out << doc.dump(2) << "\n";
  } else {
    out << form << " three-discrete-concavity: "
        << (r.holds ? "holds" : "fails") << " (" << r.triples_checked
        << " triples checked)\n";
    if (r.violation) {
      const auto& v = *r.violation;
      out << "violation: player " << v.player + 1 << " at "
          << FormatLoads(v.loads) << ", (q_i, q_k, q) = (" << v.q_i << ", "
          << v.q_k << ", " << v.q << "): " << v.lhs.ToString() << " > "
          << v.rhs.ToString() << "\n";
    }
  }
  return r.holds ? kOk : kNegative;
}

int Instance(const Options& o, std::ostream& out) {
  const auto id = ParseInstanceId(o.instance);
  if (!id) {
    std::string names;
    for (const auto& name : InstanceNames()) names += " " + name;
    throw InputError("unknown instance \"" + o.instance + "\"; known:" + names);
  }
  InstanceParams params;
  params.k = o.k;
  params.n = o.n;
  params.q = o.q;
  const NamedInstance inst = Build(*id, params);
  if (!o.emit_path.empty()) {
    std::ofstream file(o.emit_path);
    if (!file) throw InputError("cannot write " + o.emit_path);
    file << EmitGame(inst.game);
  }
  if (!o.verify) {
    if (o.emit_path.empty()) out << EmitGame(inst.game);
    return kOk;
  }
  const CertificateReport report = VerifyCertificate(inst, ResolveCaps(o));
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back(
          {{"claim", c.claim}, {"passed", c.passed}, {"detail", c.detail}});
    }
    out << json{{"instance", inst.name},
                {"passed", report.passed},
                {"checks", checks}}
               .dump(2)
        << "\n";
  } else {
    out << "instance " << inst.name << ": "
        << (report.passed ? "certificate holds" : "certificate FAILS")
        << "\n";
    for (const auto& c : report.checks) {
      out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.claim << " ("
          << c.detail << ")\n";
    }
  }
  return report.passed ? kOk : kNegative;
}

int ClassifyCommand(const Options& o, std::ostream& out) {
  const ContestGame game = LoadGame(o.game_path);
  const Caps caps = ResolveCaps(o);
  const Classification c = Classify(game, caps.max_profiles);
  const NormalizationReport norm = CheckNormalization(game, caps.max_profiles);
  if (o.format == "json") {
    out << json{{"payment", PaymentKindName(game.payment_function())},
                {"oblivious", c.oblivious},
                {"player_invariant", c.player_invariant},
                {"normalized", norm.holds},
                {"max_total_payment", norm.max_total.ToString()},
                {"warnings", game.warnings()}}
               .dump(2)
        << "\n";
  } else {
    out << "payment: " << PaymentKindName(game.payment_function()) << "\n";
    out << "oblivious: " << (c.oblivious ? "yes" : "no") << "\n";
    out << "player-invariant: " << (c.player_invariant ? "yes" : "no")
        << "\n";
    out << "normalized: " << (norm.holds ? "yes" : "no")
        << " (max total payment " << norm.max_total.ToString() << ")\n";
    for (const auto& w : game.warnings()) out << "warning: " << w << "\n";
  }
  return kOk;
}

void AddCommon(CLI::App* cmd, Options& o, bool needs_game = true) {
  if (needs_game) {
    cmd->add_option("--game", o.game_path, "game file (JSON)")->required();
  }
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-profiles", o.max_profiles, "profile cap");
  cmd->add_option("--max-nodes", o.max_nodes, "graph node cap");
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Pure Nash equilibria of discrete contest games", "contestq"};
  app.require_subcommand(1);
  Options o;

  CLI::App* solve = app.add_subcommand("solve", "find a pure Nash equilibrium");
  AddCommon(solve, o);
  solve->add_option("--method", o.method, "brute|contiguous|all-at-one|potential")
      ->check(CLI::IsMember({"brute", "contiguous", "all-at-one", "potential"}));
  solve->add_option("--variant", o.variant, "contiguous solver: specific|invariant|auto");
  solve->add_option("--start", o.start, "start profile for --method potential");
  solve->add_flag("--all", o.all, "brute force: list every PNE");
  solve->add_option("--workers", o.workers, "worker threads");

  CLI::App* verify = app.add_subcommand("verify", "check whether a profile is a PNE");
  AddCommon(verify, o);
  verify->add_option("--profile", o.profile, "profile 1,2,.. or loads L:a,b,..");
  verify->add_option("--profile-file", o.profile_file, "JSON profile file");

  CLI::App* dynamics = app.add_subcommand("dynamics", "run an improvement path");
  AddCommon(dynamics, o);
  dynamics->add_option("--start", o.start, "start profile (default all ones)");
  dynamics->add_option("--policy", o.policy, "first|best|random");
  dynamics->add_option("--seed", o.seed, "seed for --policy random");
  dynamics->add_option("--max-steps", o.max_steps, "step limit");

  CLI::App* graph = app.add_subcommand("graph", "analyze the improvement graph");
  AddCommon(graph, o);
  graph->add_flag("--anonymous", o.anonymous, "quotient by player permutation");
  graph->add_option("--dot", o.dot_path, "write the graph in DOT format");
  graph->add_flag("--no-switch", o.no_switch, "check that improvements only go down");
  graph->add_option("--workers", o.workers, "worker threads");

  CLI::App* concavity = app.add_subcommand("concavity", "check three-discrete-concavity");
  AddCommon(concavity, o);
  concavity->add_option("--form", o.form, "specific|invariant|auto");

  CLI::App* instance = app.add_subcommand("instance", "built-in instances");
  AddCommon(instance, o, false);
  instance->add_option("id", o.instance, "instance name")->required();
  instance->add_option("--k", o.k, "parameter k of ce2");
  instance->add_option("--n", o.n, "players of fip-* and high-skill");
  instance->add_option("--q", o.q, "qualities of fip-*");
  instance->add_option("--emit", o.emit_path, "write the game file");
  instance->add_flag("--verify", o.verify, "check the instance's certificate");

  CLI::App* classify = app.add_subcommand("classify", "classify the payment function");
  AddCommon(classify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (solve->parsed()) return Solve(o, out, err);
    if (verify->parsed()) return Verify(o, out);
    if (dynamics->parsed()) return Dynamics(o, out);
    if (graph->parsed()) return Graph(o, out, err);
    if (concavity->parsed()) return Concavity(o, out);
    if (instance->parsed()) return Instance(o, out);
    if (classify->parsed()) return ClassifyCommand(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace contestq
