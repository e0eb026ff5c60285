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

#ifndef ARENA_NETWORK_HPP_
#define ARENA_NETWORK_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arena/cost_function.hpp"
#include "arena/game.hpp"

namespace arena {

struct Arc {
  std::size_t from;
  std::size_t to;
};

struct Digraph {
  std::size_t vertex_count = 0;
  std::vector<Arc> arcs;
};

inline constexpr std::size_t kMaxPaths = 100'000;

// All simple directed s-t paths as arc-index sequences in walk order. DFS
// tries outgoing arcs by increasing arc index, so the order is deterministic.
// Returns an empty list when t is unreachable; throws CapExceeded past
// `cap` paths and std::out_of_range for unknown vertices.
std::vector<std::vector<std::size_t>> enumerate_paths(const Digraph& g, std::size_t s,
                                                      std::size_t t,
                                                      std::size_t cap = kMaxPaths);

struct NetworkEdge {
  std::string id;
  std::size_t from;
  std::size_t to;
  SetCostFunction cost;

  bool operator==(const NetworkEdge&) const = default;
};

struct Terminals {
  std::size_t source;
  std::size_t target;

  bool operator==(const Terminals&) const = default;
};

// A directed network whose edges are the resources. Each player routes from
// her source to her target; a forced list restricts her to the given paths
// (each an edge-index set). Validated on construction.
class NetworkModel {
 public:
  NetworkModel(std::vector<std::string> vertices, std::vector<NetworkEdge> edges,
               std::vector<Terminals> terminals,
               std::vector<std::optional<std::vector<std::vector<std::size_t>>>> forced = {});

  int players() const { return static_cast<int>(terminals_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<NetworkEdge>& edges() const { return edges_; }
  const std::vector<Terminals>& terminals() const { return terminals_; }
  const std::vector<std::optional<std::vector<std::vector<std::size_t>>>>& forced() const {
    return forced_;
  }
  Digraph graph() const;

  std::size_t vertex_index(const std::string& name) const;
  std::size_t edge_index(const std::string& id) const;

  // Strategy set of a player: her forced list, or every simple path, each
  // as a sorted edge-index set.
  std::vector<Strategy> strategies(int player) const;

  bool operator==(const NetworkModel&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<NetworkEdge> edges_;
  std::vector<Terminals> terminals_;
  std::vector<std::optional<std::vector<std::vector<std::size_t>>>> forced_;
};

// Edges become resources (same ids, same order); strategy sets come from
// NetworkModel::strategies.
GameModel to_game(const NetworkModel& nm);

}  // namespace arena

#endif  // ARENA_NETWORK_HPP_
