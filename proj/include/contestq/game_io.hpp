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

#ifndef CONTESTQ_GAME_IO_HPP_
#define CONTESTQ_GAME_IO_HPP_

#include <string>
#include <string_view>
#include <variant>

#include "contestq/game.hpp"
#include "contestq/profile.hpp"

namespace contestq {

// Game files are JSON objects:
//
//   {"n": 2, "Q": 3, "skills": ["1/3", "1/3"], "efforts": ["1", "2", "3"],
//    "participation": "mandatory",
//    "cost": {"kind": "product"},
//    "payment": {"type": "proportional"}}
//
// Numbers are rationals written as "p/q" strings (JSON integers are also
// accepted).  Payment objects:
//   {"type": "proportional"} | {"type": "equal_sharing"} |
//   {"type": "ktop", "K": k} |
//   {"type": "oblivious", "table": [[[P_i(q, load=1), ...], ...], ...]} |
//   {"type": "player_invariant",
//    "table": [{"quality": q, "loads": [...], "value": v}, ...]} |
//   {"type": "player_specific",
//    "table": [{"player": i, "profile": [...], "value": v}, ...]}
//   where player-specific rows may instead carry "loads" and "quality".
// Players and qualities are 1-indexed.  Unknown keys are input errors.
ContestGame ParseGame(std::string_view text);
ContestGame LoadGame(const std::string& path);
std::string EmitGame(const ContestGame& game);

// "1,2,3" -> profile.
Profile ParseProfile(std::string_view text);
// "L:2,1,0" -> load vector.
LoadVector ParseLoads(std::string_view text);
// Either form, dispatching on the "L:" prefix.
std::variant<Profile, LoadVector> ParseState(std::string_view text);

// A JSON array of qualities, or an object with a "profile" array (the shape
// printed by `solve --format json`).
Profile ParseProfileJson(std::string_view text);

std::string ReadFile(const std::string& path);

}  // namespace contestq

#endif  // CONTESTQ_GAME_IO_HPP_
