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

#include <algorithm>
#include <random>
#include <set>

#include "arena/errors.hpp"
#include "arena/gadgets.hpp"
#include "arena/network.hpp"
#include "arena/protocols.hpp"
#include "gtest/gtest.h"
#include "support/fixtures.hpp"

namespace arena {
namespace {

using testing::q;

NetworkEdge free_edge(std::string id, std::size_t from, std::size_t to, int players = 1) {
  return {std::move(id), from, to, SetCostFunction::zero(players)};
}

// Layers of `width` vertices between s and t, fully connected layer to layer.
Digraph layered(int layers, int width) {
  Digraph g;
  g.vertex_count = 2 + static_cast<std::size_t>(layers * width);
  auto at = [&](int l, int k) { return static_cast<std::size_t>(1 + l * width + k); };
  for (int k = 0; k < width; ++k) g.arcs.push_back({0, at(0, k)});
  for (int l = 0; l + 1 < layers; ++l) {
    for (int a = 0; a < width; ++a) {
      for (int b = 0; b < width; ++b) g.arcs.push_back({at(l, a), at(l + 1, b)});
    }
  }
  for (int k = 0; k < width; ++k) g.arcs.push_back({at(layers - 1, k), g.vertex_count - 1});
  return g;
}

TEST(EnumeratePathsTest, ParallelEdges) {
  const Digraph g{2, {{0, 1}, {0, 1}}};
  EXPECT_EQ(enumerate_paths(g, 0, 1), (std::vector<std::vector<std::size_t>>{{0}, {1}}));
}

TEST(EnumeratePathsTest, SourceEqualsTarget) {
  const Digraph g{2, {{0, 1}}};
  EXPECT_EQ(enumerate_paths(g, 1, 1), (std::vector<std::vector<std::size_t>>{{}}));
}

TEST(EnumeratePathsTest, UnreachableTarget) {
  const Digraph g{3, {{0, 1}, {2, 1}}};
  EXPECT_TRUE(enumerate_paths(g, 0, 2).empty());
  EXPECT_THROW(enumerate_paths(g, 0, 7), std::out_of_range);
}

TEST(EnumeratePathsTest, CyclesAreNotRevisited) {
  // 0 -> 1 -> 2 -> 1 cycle plus 2 -> 3.
  const Digraph g{4, {{0, 1}, {1, 2}, {2, 1}, {2, 3}}};
  EXPECT_EQ(enumerate_paths(g, 0, 3), (std::vector<std::vector<std::size_t>>{{0, 1, 3}}));
}

TEST(EnumeratePathsTest, CountsAndWalkOrder) {
  const Digraph g = layered(3, 3);
  const auto paths = enumerate_paths(g, 0, g.vertex_count - 1);
  EXPECT_EQ(paths.size(), 27U);
  std::set<std::vector<std::size_t>> distinct(paths.begin(), paths.end());
  EXPECT_EQ(distinct.size(), paths.size());
  for (const auto& p : paths) {
    ASSERT_FALSE(p.empty());
    EXPECT_EQ(g.arcs[p.front()].from, 0U);
    EXPECT_EQ(g.arcs[p.back()].to, g.vertex_count - 1);
    std::set<std::size_t> seen{0};
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k > 0) EXPECT_EQ(g.arcs[p[k - 1]].to, g.arcs[p[k]].from);
      EXPECT_TRUE(seen.insert(g.arcs[p[k]].to).second);
    }
  }
}

TEST(EnumeratePathsTest, RandomGraphsProduceSimpleConnectedWalks) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 50; ++round) {
    Digraph g;
    g.vertex_count = 2 + rng() % 6;
    const std::size_t arcs = rng() % 16;
    for (std::size_t a = 0; a < arcs; ++a) {
      g.arcs.push_back({rng() % g.vertex_count, rng() % g.vertex_count});
    }
    for (const auto& p : enumerate_paths(g, 0, 1)) {
      std::set<std::size_t> visited{0};
      std::size_t at = 0;
      for (std::size_t a : p) {
        ASSERT_EQ(g.arcs[a].from, at);
        at = g.arcs[a].to;
        ASSERT_TRUE(visited.insert(at).second);
      }
      EXPECT_EQ(at, 1U);
    }
  }
}

TEST(EnumeratePathsTest, CapIsEnforced) {
  const Digraph g = layered(4, 4);  // 256 paths
  EXPECT_EQ(enumerate_paths(g, 0, g.vertex_count - 1, 256).size(), 256U);
  EXPECT_THROW(enumerate_paths(g, 0, g.vertex_count - 1, 255), CapExceeded);
}

TEST(NetworkModelTest, TwoParallelEdgesGiveTwoStrategies) {
  const NetworkModel nm({"s", "t"}, {free_edge("a", 0, 1), free_edge("b", 0, 1)}, {{0, 1}});
  EXPECT_EQ(nm.strategies(0), (std::vector<Strategy>{{0}, {1}}));
  EXPECT_EQ(nm.edge_index("b"), 1U);
  EXPECT_EQ(nm.vertex_index("t"), 1U);
  EXPECT_THROW(nm.edge_index("c"), ValidationError);
  EXPECT_THROW(nm.vertex_index("x"), ValidationError);
}

TEST(NetworkModelTest, ValidationFailures) {
  EXPECT_THROW(NetworkModel({"s", "s"}, {}, {{0, 1}}), ValidationError);
  EXPECT_THROW(NetworkModel({"s", "t"}, {free_edge("a", 0, 1), free_edge("a", 0, 1)}, {{0, 1}}),
               ValidationError);
  EXPECT_THROW(NetworkModel({"s", "t"}, {free_edge("a", 0, 5)}, {{0, 1}}), ValidationError);
  EXPECT_THROW(NetworkModel({"s", "t"}, {free_edge("a", 0, 1, 2)}, {{0, 1}}), ValidationError);
  EXPECT_THROW(NetworkModel({"s", "t"}, {free_edge("a", 0, 1)}, {}), ValidationError);
  EXPECT_THROW(NetworkModel({"s", "t"}, {free_edge("a", 0, 1)}, {{0, 4}}), ValidationError);
  // No path from t to s.
  EXPECT_THROW(NetworkModel({"s", "t"}, {free_edge("a", 0, 1)}, {{1, 0}}), ValidationError);
}

TEST(NetworkModelTest, ForcedStrategiesMustBePaths) {
  const std::vector<NetworkEdge> edges{free_edge("a", 0, 1), free_edge("b", 1, 2),
                                       free_edge("c", 0, 2)};
  const NetworkModel ok({"s", "m", "t"}, edges, {{0, 2}}, {std::vector<Strategy>{{1, 0}}});
  EXPECT_EQ(ok.strategies(0), (std::vector<Strategy>{{0, 1}}));
  EXPECT_THROW(NetworkModel({"s", "m", "t"}, edges, {{0, 2}}, {std::vector<Strategy>{{0}}}),
               ValidationError);
  EXPECT_THROW(NetworkModel({"s", "m", "t"}, edges, {{0, 2}}, {std::nullopt, std::nullopt}),
               ValidationError);
}

TEST(NetworkModelTest, ToGameLoadsMatchEdgeLoads) {
  const NetworkModel nm = build_pos_linear(4, q("1/2"));
  const GameModel game = to_game(nm);
  ASSERT_EQ(game.resources().size(), nm.edges().size());
  const StrategyProfile profile{{1, 0, 0, 0}};
  const auto loads = resource_loads(game, profile);
  for (std::size_t e = 0; e < nm.edges().size(); ++e) {
    std::size_t walkers = 0;
    for (int i = 0; i < nm.players(); ++i) {
      const Strategy path = nm.strategies(i)[profile.choice[i]];
      walkers += std::count(path.begin(), path.end(), e);
    }
    EXPECT_EQ(static_cast<std::size_t>(loads[e].size()), walkers) << nm.edges()[e].id;
  }
}

TEST(GadgetNetworkTest, LinearGadgetPathCounts) {
  const NetworkModel nm = build_pos_linear(3, q("1/2"));
  const auto e = [&](const char* id) { return nm.edge_index(id); };
  std::vector<Strategy> free_paths{{e("e2")}, {e("e1"), e("e3")}};
  for (auto& p : free_paths) std::sort(p.begin(), p.end());
  EXPECT_EQ(nm.strategies(0), free_paths);
  Strategy forced{e("e1"), e("e4")};
  std::sort(forced.begin(), forced.end());
  for (int i = 1; i < 3; ++i) EXPECT_EQ(nm.strategies(i), std::vector<Strategy>{forced});
  // Without forcing, s still reaches t only through m.
  const NetworkModel open(nm.vertices(), nm.edges(), nm.terminals());
  EXPECT_EQ(open.strategies(1).size(), 1U);
  EXPECT_EQ(open.strategies(0).size(), 2U);
}

TEST(GadgetNetworkTest, HarmonicGadgetBPlayersHaveTwoPaths) {
  const auto gadget = build_pos_nharmonic(6, q("1/4"), WeightSystem::uniform(6));
  const NetworkModel& nm = gadget.network;
  for (int b : gadget.b_order) EXPECT_EQ(nm.strategies(b).size(), 2U);
  for (int a : gadget.a_players) EXPECT_EQ(nm.strategies(a).size(), 1U);
}

TEST(GadgetNetworkTest, ThreeRouteNetworkHasFourPaths) {
  const auto gadget = build_poa_unbounded(2, Protocol::shapley());
  ASSERT_EQ(gadget.which_case, 1);
  for (int i = 0; i < 2; ++i) EXPECT_EQ(gadget.network.strategies(i).size(), 4U);
}

}  // namespace
}  // namespace arena
