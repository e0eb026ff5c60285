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

#include "arena/network.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "arena/errors.hpp"

namespace arena {

std::vector<std::vector<std::size_t>> enumerate_paths(const Digraph& g, std::size_t s,
                                                      std::size_t t, std::size_t cap) {
  if (s >= g.vertex_count || t >= g.vertex_count) {
    throw std::out_of_range("path endpoint outside the graph");
  }
  std::vector<std::vector<std::size_t>> out_arcs(g.vertex_count);
  for (std::size_t a = 0; a < g.arcs.size(); ++a) out_arcs[g.arcs[a].from].push_back(a);

  std::vector<std::vector<std::size_t>> paths;
  if (s == t) {
    paths.emplace_back();
    return paths;
  }
  std::vector<bool> on_path(g.vertex_count, false);
  std::vector<std::size_t> walk;
  // Explicit stack of (vertex, next outgoing arc position).
  std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
  on_path[s] = true;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next == out_arcs[v].size()) {
      on_path[v] = false;
      stack.pop_back();
      if (!walk.empty()) walk.pop_back();
      continue;
    }
    const std::size_t a = out_arcs[v][next++];
    const std::size_t w = g.arcs[a].to;
    if (on_path[w]) continue;
    if (w == t) {
      walk.push_back(a);
      paths.push_back(walk);
      walk.pop_back();
      if (paths.size() > cap) {
        throw CapExceeded("more than " + std::to_string(cap) + " simple paths");
      }
      continue;
    }
    walk.push_back(a);
    on_path[w] = true;
    stack.emplace_back(w, 0);
  }
  return paths;
}

NetworkModel::NetworkModel(
    std::vector<std::string> vertices, std::vector<NetworkEdge> edges,
    std::vector<Terminals> terminals,
    std::vector<std::optional<std::vector<std::vector<std::size_t>>>> forced)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      terminals_(std::move(terminals)),
      forced_(std::move(forced)) {
  std::set<std::string> names(vertices_.begin(), vertices_.end());
  if (names.size() != vertices_.size()) throw ValidationError("duplicate vertex name");
  std::set<std::string> ids;
  for (const auto& e : edges_) {
    if (!ids.insert(e.id).second) throw ValidationError("duplicate edge id '" + e.id + "'");
    if (e.from >= vertices_.size() || e.to >= vertices_.size()) {
      throw ValidationError("edge '" + e.id + "' has an unknown endpoint");
    }
    if (e.cost.arity() != players()) {
      throw ValidationError("edge '" + e.id + "' cost arity does not match player count");
    }
  }
  if (terminals_.empty()) throw ValidationError("network has no players");
  for (const auto& term : terminals_) {
    if (term.source >= vertices_.size() || term.target >= vertices_.size()) {
      throw ValidationError("terminal names an unknown vertex");
    }
  }
  if (forced_.empty()) forced_.resize(terminals_.size());
  if (forced_.size() != terminals_.size()) {
    throw ValidationError("forced list count does not match player count");
  }
  for (auto& f : forced_) {
    if (!f) continue;
    for (auto& path : *f) std::sort(path.begin(), path.end());
  }
  for (int i = 0; i < players(); ++i) {
    const auto paths = strategies(i);
    if (paths.empty()) {
      throw ValidationError("player " + std::to_string(i + 1) + " has no path from '" +
                            vertices_[terminals_[i].source] + "' to '" +
                            vertices_[terminals_[i].target] + "'");
    }
    if (forced_[i]) {
      const auto all = NetworkModel(vertices_, edges_, terminals_, {}).strategies(i);
      for (const auto& path : *forced_[i]) {
        if (std::find(all.begin(), all.end(), path) == all.end()) {
          throw ValidationError("forced strategy of player " + std::to_string(i + 1) +
                                " is not one of her paths");
        }
      }
    }
  }
}

Digraph NetworkModel::graph() const {
  Digraph g{vertices_.size(), {}};
  g.arcs.reserve(edges_.size());
  for (const auto& e : edges_) g.arcs.push_back({e.from, e.to});
  return g;
}

std::size_t NetworkModel::vertex_index(const std::string& name) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) throw ValidationError("unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t NetworkModel::edge_index(const std::string& id) const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].id == id) return e;
  }
  throw ValidationError("unknown edge '" + id + "'");
}

std::vector<Strategy> NetworkModel::strategies(int player) const {
  if (!forced_.empty() && forced_[player]) return *forced_[player];
  auto paths = enumerate_paths(graph(), terminals_[player].source, terminals_[player].target);
  for (auto& p : paths) std::sort(p.begin(), p.end());
  return paths;
}

GameModel to_game(const NetworkModel& nm) {
  std::vector<Resource> resources;
  resources.reserve(nm.edges().size());
  for (const auto& e : nm.edges()) resources.push_back({e.id, e.cost});
  std::vector<std::vector<Strategy>> sets;
  for (int i = 0; i < nm.players(); ++i) sets.push_back(nm.strategies(i));
  return GameModel(nm.players(), std::move(resources), std::move(sets));
}

}  // namespace arena
