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

#include "contestq/game_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "contestq/errors.hpp"
#include "overloaded.hpp"

namespace contestq {
namespace {

using internal::Overloaded;
using nlohmann::json;

void AllowOnly(const json& obj, std::initializer_list<const char*> keys,
               const std::string& where) {
  if (!obj.is_object()) throw InputError(where + " must be an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) {
      throw InputError("unknown key \"" + key + "\" in " + where);
    }
  }
}

const json& Require(const json& obj, const char* key,
                    const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw InputError(where + " is missing \"" + key + "\"");
  }
  return *it;
}

Rational ToRational(const json& v, const std::string& where) {
  if (v.is_string()) return Rational::Parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw InputError(where + ": expected a rational string such as \"3/19\"");
}

int ToInt(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<int>();
}

std::vector<Rational> ToRationals(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array");
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(ToRational(x, where));
  return out;
}

std::vector<int> ToInts(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(ToInt(x, where));
  return out;
}

std::vector<std::vector<Rational>> ToMatrix(const json& v,
                                            const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array");
  std::vector<std::vector<Rational>> out;
  for (const auto& row : v) out.push_back(ToRationals(row, where));
  return out;
}

CostFunction ParseCost(const json& obj) {
  const std::string where = "cost";
  if (!obj.is_object()) throw InputError("cost must be an object");
  const std::string kind = Require(obj, "kind", where).get<std::string>();
  if (kind == "product") {
    AllowOnly(obj, {"kind"}, where);
    return CostFunction::Product();
  }
  if (kind == "table") {
    AllowOnly(obj, {"kind", "values"}, where);
    return CostFunction::Table(
        ToMatrix(Require(obj, "values", where), "cost.values"));
  }
  throw InputError("unknown cost kind \"" + kind + "\"");
}

PaymentFunction ParsePayment(const json& obj) {
  const std::string where = "payment";
  if (!obj.is_object()) throw InputError("payment must be an object");
  const json& type_value = Require(obj, "type", where);
  if (!type_value.is_string()) throw InputError("payment.type must be a string");
  const std::string type = type_value.get<std::string>();
  if (type == "proportional") {
    AllowOnly(obj, {"type"}, where);
    return Proportional{};
  }
  if (type == "equal_sharing") {
    AllowOnly(obj, {"type"}, where);
    return EqualSharing{};
  }
  if (type == "ktop") {
    AllowOnly(obj, {"type", "K"}, where);
    return KTop{ToInt(Require(obj, "K", where), "payment.K")};
  }
  if (type == "oblivious") {
    AllowOnly(obj, {"type", "table"}, where);
    const json& t = Require(obj, "table", where);
    if (!t.is_array()) throw InputError("payment.table: expected an array");
    ObliviousTable table;
    for (const auto& per_player : t) {
      table.values.push_back(ToMatrix(per_player, "payment.table"));
    }
    return table;
  }
  if (type == "player_invariant") {
    AllowOnly(obj, {"type", "table"}, where);
    const json& t = Require(obj, "table", where);
    if (!t.is_array()) throw InputError("payment.table: expected an array");
    PlayerInvariantTable table;
    for (const auto& row : t) {
      const std::string w = "payment.table entry";
      AllowOnly(row, {"quality", "loads", "value"}, w);
      const int q = ToInt(Require(row, "quality", w), w);
      auto key = ToInts(Require(row, "loads", w), w);
      if (!table.values
               .emplace(std::make_pair(q, std::move(key)),
                        ToRational(Require(row, "value", w), w))
               .second) {
        throw InputError("duplicate player_invariant entry");
      }
    }
    return table;
  }
  if (type == "player_specific") {
    AllowOnly(obj, {"type", "table"}, where);
    const json& t = Require(obj, "table", where);
    if (!t.is_array() || t.empty()) {
      throw InputError("payment.table: expected a non-empty array");
    }
    PlayerSpecificTable table;
    table.form = t.front().contains("profile")
                     ? PlayerSpecificTable::KeyForm::kProfile
                     : PlayerSpecificTable::KeyForm::kLoads;
    for (const auto& row : t) {
      const std::string w = "payment.table entry";
      const bool by_profile =
          table.form == PlayerSpecificTable::KeyForm::kProfile;
      if (by_profile) {
        AllowOnly(row, {"player", "profile", "value"}, w);
      } else {
        AllowOnly(row, {"player", "loads", "quality", "value"}, w);
      }
      const int player = ToInt(Require(row, "player", w), w) - 1;
      auto key = ToInts(Require(row, by_profile ? "profile" : "loads", w), w);
      const int q = by_profile ? 0 : ToInt(Require(row, "quality", w), w);
      if (!table.values
               .emplace(std::make_tuple(player, std::move(key), q),
                        ToRational(Require(row, "value", w), w))
               .second) {
        throw InputError("duplicate player_specific entry");
      }
    }
    return table;
  }
  throw InputError("unknown payment type \"" + type + "\"");
}

json FromRationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.ToString());
  return out;
}

json EmitPayment(const PaymentFunction& payment) {
  return std::visit(
      Overloaded{
          [](const Proportional&) { return json{{"type", "proportional"}}; },
          [](const EqualSharing&) { return json{{"type", "equal_sharing"}}; },
          [](const KTop& k) { return json{{"type", "ktop"}, {"K", k.k}}; },
          [](const ObliviousTable& t) {
            json table = json::array();
            for (const auto& per_player : t.values) {
              json rows = json::array();
              for (const auto& row : per_player) rows.push_back(FromRationals(row));
              table.push_back(rows);
            }
            return json{{"type", "oblivious"}, {"table", table}};
          },
          [](const PlayerInvariantTable& t) {
            json table = json::array();
            for (const auto& [key, value] : t.values) {
              table.push_back({{"quality", key.first},
                               {"loads", key.second},
                               {"value", value.ToString()}});
            }
            return json{{"type", "player_invariant"}, {"table", table}};
          },
          [](const PlayerSpecificTable& t) {
            json table = json::array();
            for (const auto& [key, value] : t.values) {
              const auto& [player, vec, q] = key;
              if (t.form == PlayerSpecificTable::KeyForm::kProfile) {
                table.push_back({{"player", player + 1},
                                 {"profile", vec},
                                 {"value", value.ToString()}});
              } else {
                table.push_back({{"player", player + 1},
                                 {"loads", vec},
                                 {"quality", q},
                                 {"value", value.ToString()}});
              }
            }
            return json{{"type", "player_specific"}, {"table", table}};
          },
      },
      payment);
}

std::vector<int> ParseIntList(std::string_view text, const char* what) {
  std::vector<int> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw InputError(std::string("malformed ") + what + " \"" +
                       std::string(text) + "\"");
    }
    out.push_back(value);
  }
  if (out.empty() || (!text.empty() && text.back() == ',')) {
    throw InputError(std::string("malformed ") + what + " \"" +
                     std::string(text) + "\"");
  }
  return out;
}

}  // namespace

ContestGame ParseGame(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("game file is not valid JSON: ") + e.what());
  }
  const std::string where = "game";
  AllowOnly(doc,
            {"n", "Q", "skills", "efforts", "participation", "cost", "payment"},
            where);
  const int n = ToInt(Require(doc, "n", where), "n");
  const int num_q = ToInt(Require(doc, "Q", where), "Q");
  std::vector<Rational> skills =
      ToRationals(Require(doc, "skills", where), "skills");
  std::vector<Rational> efforts =
      ToRationals(Require(doc, "efforts", where), "efforts");
  if (static_cast<int>(skills.size()) != n) {
    throw InputError("skills has " + std::to_string(skills.size()) +
                     " entries, n is " + std::to_string(n));
  }
  if (static_cast<int>(efforts.size()) != num_q) {
    throw InputError("efforts has " + std::to_string(efforts.size()) +
                     " entries, Q is " + std::to_string(num_q));
  }
  const json& part = Require(doc, "participation", where);
  Participation participation;
  if (part == "voluntary") {
    participation = Participation::kVoluntary;
  } else if (part == "mandatory") {
    participation = Participation::kMandatory;
  } else {
    throw InputError("participation must be \"voluntary\" or \"mandatory\"");
  }
  return ContestGame(std::move(skills), std::move(efforts), participation,
                     ParseCost(Require(doc, "cost", where)),
                     ParsePayment(Require(doc, "payment", where)));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ContestGame LoadGame(const std::string& path) {
  return ParseGame(ReadFile(path));
}

std::string EmitGame(const ContestGame& game) {
  json doc;
  doc["n"] = game.num_players();
  doc["Q"] = game.num_qualities();
  doc["skills"] = FromRationals(game.skills());
  doc["efforts"] = FromRationals(game.efforts());
  doc["participation"] = game.participation() == Participation::kVoluntary
                             ? "voluntary"
                             : "mandatory";
  if (game.cost_function().kind == CostFunction::Kind::kProduct) {
    doc["cost"] = {{"kind", "product"}};
  } else {
    json rows = json::array();
    for (const auto& row : game.cost_function().table) {
      rows.push_back(FromRationals(row));
    }
    doc["cost"] = {{"kind", "table"}, {"values", rows}};
  }
  doc["payment"] = EmitPayment(game.payment_function());
  return doc.dump(2) + "\n";
}

Profile ParseProfile(std::string_view text) {
  return Profile(ParseIntList(text, "profile"));
}

LoadVector ParseLoads(std::string_view text) {
  if (text.substr(0, 2) != "L:") {
    throw InputError("load vectors are written L:a,b,...");
  }
  std::vector<int> counts = ParseIntList(text.substr(2), "load vector");
  for (int c : counts) {
    if (c < 0) throw InputError("negative load in " + std::string(text));
  }
  return LoadVector(std::move(counts));
}

std::variant<Profile, LoadVector> ParseState(std::string_view text) {
  if (text.substr(0, 2) == "L:") return ParseLoads(text);
  return ParseProfile(text);
}

Profile ParseProfileJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("profile file is not valid JSON: ") +
                     e.what());
  }
  const json* arr = &doc;
  if (doc.is_object()) {
    auto it = doc.find("profile");
    if (it == doc.end() || it->is_null()) {
      throw InputError("profile file has no \"profile\" array");
    }
    arr = &*it;
  }
  return Profile(ToInts(*arr, "profile"));
}

}  // namespace contestq
