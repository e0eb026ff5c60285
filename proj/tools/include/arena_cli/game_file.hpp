// Copyright 2026 The Arena Authors
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

#ifndef ARENA_CLI_GAME_FILE_HPP_
#define ARENA_CLI_GAME_FILE_HPP_

#include <optional>
#include <string>

#include "arena/game.hpp"
#include "arena/network.hpp"
#include "arena/protocols.hpp"
#include "json.hpp"

namespace arena::cli {

using Json = nlohmann::json;

// JSON game files. Rationals are "p/q" strings (plain integers accepted on
// input); player ids are 1-based; strategy indices are 0-based.
//
// Explicit form:
//   {"players": n,
//    "resources": [{"id": "e1", "cost": {"anonymous": ["0/1", ...]}},
//                  {"id": "e2", "cost": {"table": [{"set": [1, 2], "cost": "4/1"}]}}],
//    "strategies": [[["e1"], ["e2"]], ...]}
// Network form:
//   {"players": n,
//    "network": {"vertices": ["s", "t"],
//                "edges": [{"id": "e1", "from": "s", "to": "t", "cost": {...}}],
//                "terminals": [["s", "t"], ...],
//                "forced": [null, [["e1", "e4"]], ...]}}
// Table entries left out default to 0; the result must still be monotone.
struct LoadedGame {
  GameModel game;
  std::optional<NetworkModel> network;
};

// Throws ValidationError on any schema or semantic problem.
LoadedGame parse_game(const Json& doc);
LoadedGame load_game_file(const std::string& path);

Json serialize(const GameModel& model);
Json serialize(const NetworkModel& network);

Json serialize_cost(const SetCostFunction& f);
SetCostFunction parse_cost(const Json& doc, int arity);

// {"lambda": {"1": "1/1", ...} or ["1/1", ...], "blocks": [[1, 2], [3]]}
WeightSystem parse_weight_system(const Json& doc);
Json serialize(const WeightSystem& w);

// {"entries": [{"cost": {...}?, "users": [1, 2], "shares": {"1": "0/1"},
//               "residual": 2}]}
TableRule parse_table_rule(const Json& doc, int players);

// "shapley", "gws:<weight file>", "table:<table file>". `players` sizes the
// table protocol's cost functions.
Protocol parse_protocol_spec(const std::string& spec, int players);

Json read_json_file(const std::string& path);

Json profile_json(const StrategyProfile& profile);

}  // namespace arena::cli

#endif  // ARENA_CLI_GAME_FILE_HPP_
