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

#include "arena_cli/game_file.hpp"

#include <fstream>
#include <sstream>

#include "arena/errors.hpp"

namespace arena::cli {

namespace {

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ValidationError("expected a rational string \"p/q\", got " + j.dump());
}

int player_from(const Json& j, int players) {
  if (!j.is_number_integer()) throw ValidationError("player id must be an integer: " + j.dump());
  const long long id = j.get<long long>();
  if (id < 1 || id > players) {
    throw ValidationError("player id " + std::to_string(id) + " outside 1.." +
                          std::to_string(players));
  }
  return static_cast<int>(id - 1);
}

PlayerSet player_set_from(const Json& j, int players) {
  if (!j.is_array()) throw ValidationError("player set must be an array: " + j.dump());
  PlayerSet s;
  for (const auto& id : j) s = s.with(player_from(id, players));
  return s;
}

// Object keys naming players, e.g. "2" in {"2": "1/3"}.
int player_from_key(const std::string& key, int players) {
  std::size_t pos = 0;
  int id = 0;
  try {
    id = std::stoi(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || id < 1 || id > players) {
    throw ValidationError("expected a player id in 1.." + std::to_string(players) + ", got '" +
                          key + "'");
  }
  return id - 1;
}

Json player_set_json(PlayerSet s) {
  Json out = Json::array();
  for (int i : s.members()) out.push_back(i + 1);
  return out;
}

const Json& require(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ValidationError(std::string("missing key '") + key + "'");
  }
  return obj.at(key);
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

SetCostFunction parse_cost(const Json& doc, int arity) {
  return guarded([&] {
    if (doc.contains("anonymous")) {
      std::vector<Rational> values;
      for (const auto& v : doc.at("anonymous")) values.push_back(rational_from(v));
      if (static_cast<int>(values.size()) != arity + 1) {
        throw ValidationError("anonymous cost needs " + std::to_string(arity + 1) +
                              " values, got " + std::to_string(values.size()));
      }
      return SetCostFunction::anonymous(std::move(values));
    }
    if (doc.contains("table")) {
      std::vector<Rational> table(std::size_t{1} << arity);
      std::vector<bool> seen(table.size(), false);
      for (const auto& entry : doc.at("table")) {
        const PlayerSet s = player_set_from(require(entry, "set"), arity);
        if (seen[s.bits()]) throw ValidationError("cost table lists " + s.to_string() + " twice");
        seen[s.bits()] = true;
        table[s.bits()] = rational_from(require(entry, "cost"));
      }
      return SetCostFunction::from_table(arity, std::move(table));
    }
    throw ValidationError("cost must have an 'anonymous' or 'table' key");
  });
}

Json serialize_cost(const SetCostFunction& f) {
  if (is_anonymous(f)) {
    Json values = Json::array();
    for (int k = 0; k <= f.arity(); ++k) {
      values.push_back(to_string(f(PlayerSet::full(k))));
    }
    return {{"anonymous", values}};
  }
  Json table = Json::array();
  for (std::size_t mask = 1; mask < f.table().size(); ++mask) {
    if (f.table()[mask] == 0) continue;
    const PlayerSet s(static_cast<PlayerSet::Mask>(mask));
    table.push_back({{"set", player_set_json(s)}, {"cost", to_string(f.table()[mask])}});
  }
  return {{"table", table}};
}

namespace {

LoadedGame parse_explicit(const Json& doc) {
  const Json& players_j = require(doc, "players");
  if (!players_j.is_number_integer()) throw ValidationError("'players' must be an integer");
  const int n = players_j.get<int>();
  if (n < 1 || n > kMaxPlayers) {
    throw ValidationError("player count " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxPlayers) + "]");
  }
  std::vector<Resource> resources;
  for (const auto& r : require(doc, "resources")) {
    resources.push_back({require(r, "id").get<std::string>(), parse_cost(require(r, "cost"), n)});
  }
  auto index_of = [&](const std::string& id) {
    for (std::size_t r = 0; r < resources.size(); ++r) {
      if (resources[r].id == id) return r;
    }
    throw ValidationError("strategy names unknown resource '" + id + "'");
  };
  std::vector<std::vector<Strategy>> sets;
  for (const auto& player : require(doc, "strategies")) {
    std::vector<Strategy> set;
    for (const auto& strategy : player) {
      Strategy s;
      for (const auto& id : strategy) s.push_back(index_of(id.get<std::string>()));
      set.push_back(std::move(s));
    }
    sets.push_back(std::move(set));
  }
  return {GameModel(n, std::move(resources), std::move(sets)), std::nullopt};
}

LoadedGame parse_network(const Json& doc) {
  const Json& net = doc.at("network");
  const Json& terminals_j = require(net, "terminals");
  const int n = doc.contains("players") ? doc.at("players").get<int>()
                                        : static_cast<int>(terminals_j.size());
  if (static_cast<int>(terminals_j.size()) != n) {
    throw ValidationError("'players' does not match the number of terminal pairs");
  }
  if (n < 1 || n > kMaxPlayers) {
    throw ValidationError("player count " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxPlayers) + "]");
  }
  std::vector<std::string> vertices;
  for (const auto& v : require(net, "vertices")) vertices.push_back(v.get<std::string>());
  auto vertex = [&](const Json& name) {
    const auto s = name.get<std::string>();
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (vertices[v] == s) return v;
    }
    throw ValidationError("unknown vertex '" + s + "'");
  };
  std::vector<NetworkEdge> edges;
  for (const auto& e : require(net, "edges")) {
    edges.push_back({require(e, "id").get<std::string>(), vertex(require(e, "from")),
                     vertex(require(e, "to")), parse_cost(require(e, "cost"), n)});
  }
  auto edge = [&](const Json& id) {
    const auto s = id.get<std::string>();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (edges[k].id == s) return k;
    }
    throw ValidationError("forced strategy names unknown edge '" + s + "'");
  };
  std::vector<Terminals> terminals;
  for (const auto& t : terminals_j) {
    if (!t.is_array() || t.size() != 2) throw ValidationError("terminal must be [source, target]");
    terminals.push_back({vertex(t[0]), vertex(t[1])});
  }
  std::vector<std::optional<std::vector<std::vector<std::size_t>>>> forced(n);
  if (net.contains("forced")) {
    const Json& f = net.at("forced");
    if (!f.is_array() || static_cast<int>(f.size()) != n) {
      throw ValidationError("'forced' needs one entry per player");
    }
    for (int i = 0; i < n; ++i) {
      if (f[i].is_null()) continue;
      std::vector<std::vector<std::size_t>> paths;
      for (const auto& path : f[i]) {
        std::vector<std::size_t> p;
        for (const auto& id : path) p.push_back(edge(id));
        paths.push_back(std::move(p));
      }
      forced[i] = std::move(paths);
    }
  }
  NetworkModel nm(std::move(vertices), std::move(edges), std::move(terminals), std::move(forced));
  GameModel game = to_game(nm);
  return {std::move(game), std::move(nm)};
}

}  // namespace

LoadedGame parse_game(const Json& doc) {
  return guarded([&] {
    if (!doc.is_object()) throw ValidationError("game file must be a JSON object");
    return doc.contains("network") ? parse_network(doc) : parse_explicit(doc);
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

LoadedGame load_game_file(const std::string& path) { return parse_game(read_json_file(path)); }

Json serialize(const GameModel& model) {
  Json resources = Json::array();
  for (const auto& r : model.resources()) {
    resources.push_back({{"id", r.id}, {"cost", serialize_cost(r.cost)}});
  }
  Json strategies = Json::array();
  for (const auto& set : model.strategy_sets()) {
    Json player = Json::array();
    for (const auto& s : set) {
      Json ids = Json::array();
      for (std::size_t r : s) ids.push_back(model.resources()[r].id);
      player.push_back(ids);
    }
    strategies.push_back(player);
  }
  return {{"players", model.players()}, {"resources", resources}, {"strategies", strategies}};
}

Json serialize(const NetworkModel& network) {
  Json edges = Json::array();
  for (const auto& e : network.edges()) {
    edges.push_back({{"id", e.id},
                     {"from", network.vertices()[e.from]},
                     {"to", network.vertices()[e.to]},
                     {"cost", serialize_cost(e.cost)}});
  }
  Json terminals = Json::array();
  for (const auto& t : network.terminals()) {
    terminals.push_back({network.vertices()[t.source], network.vertices()[t.target]});
  }
  Json forced = Json::array();
  bool any_forced = false;
  for (const auto& f : network.forced()) {
    if (!f) {
      forced.push_back(nullptr);
      continue;
    }
    any_forced = true;
    Json paths = Json::array();
    for (const auto& path : *f) {
      Json ids = Json::array();
      for (std::size_t e : path) ids.push_back(network.edges()[e].id);
      paths.push_back(ids);
    }
    forced.push_back(paths);
  }
  Json net = {{"vertices", network.vertices()}, {"edges", edges}, {"terminals", terminals}};
  if (any_forced) net["forced"] = forced;
  return {{"players", network.players()}, {"network", net}};
}

WeightSystem parse_weight_system(const Json& doc) {
  return guarded([&] {
    const Json& lambda_j = require(doc, "lambda");
    std::vector<Rational> lambda;
    if (lambda_j.is_array()) {
      for (const auto& v : lambda_j) lambda.push_back(rational_from(v));
    } else if (lambda_j.is_object()) {
      lambda.assign(lambda_j.size(), Rational(0));
      for (const auto& [key, value] : lambda_j.items()) {
        lambda[player_from_key(key, static_cast<int>(lambda.size()))] = rational_from(value);
      }
    } else {
      throw ValidationError("'lambda' must be an array or an object");
    }
    const int n = static_cast<int>(lambda.size());
    std::vector<PlayerSet> blocks;
    for (const auto& b : require(doc, "blocks")) blocks.push_back(player_set_from(b, n));
    return WeightSystem(std::move(lambda), std::move(blocks));
  });
}

Json serialize(const WeightSystem& w) {
  Json lambda = Json::object();
  for (int i = 0; i < w.players(); ++i) lambda[std::to_string(i + 1)] = to_string(w.lambda()[i]);
  Json blocks = Json::array();
  for (const auto& b : w.blocks()) blocks.push_back(player_set_json(b));
  return {{"lambda", lambda}, {"blocks", blocks}};
}

TableRule parse_table_rule(const Json& doc, int players) {
  return guarded([&] {
    TableRule rule;
    for (const auto& e : require(doc, "entries")) {
      TableEntry entry;
      if (e.contains("cost")) entry.cost = parse_cost(e.at("cost"), players);
      entry.users = player_set_from(require(e, "users"), players);
      if (e.contains("shares")) {
        for (const auto& [key, value] : e.at("shares").items()) {
          entry.fixed.emplace_back(player_from_key(key, players), rational_from(value));
        }
      }
      if (e.contains("residual")) entry.residual = player_from(e.at("residual"), players);
      rule.entries.push_back(std::move(entry));
    }
    return rule;
  });
}

Protocol parse_protocol_spec(const std::string& spec, int players) {
  if (spec == "shapley") return Protocol::shapley();
  if (spec.rfind("gws:", 0) == 0) {
    WeightSystem w = parse_weight_system(read_json_file(spec.substr(4)));
    if (w.players() != players) {
      throw ValidationError("weight system covers " + std::to_string(w.players()) +
                            " players, game has " + std::to_string(players));
    }
    return Protocol::weighted_shapley(std::move(w));
  }
  if (spec.rfind("table:", 0) == 0) {
    return Protocol::table(parse_table_rule(read_json_file(spec.substr(6)), players));
  }
  throw ValidationError("unknown protocol '" + spec + "'");
}

Json profile_json(const StrategyProfile& profile) { return profile.choice; }

}  // namespace arena::cli
