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

#ifndef ARENA_RANDOM_GAMES_HPP_
#define ARENA_RANDOM_GAMES_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "arena/cost_function.hpp"
#include "arena/game.hpp"

namespace arena {

// Which family random cost functions are drawn from.
enum class CostFamily { kArbitrary, kSubmodular, kSupermodular };

std::string_view to_string(CostFamily family);
// Throws ValidationError for unknown names.
CostFamily parse_cost_family(std::string_view name);

// Random non-decreasing cost with small rational values.
//   kArbitrary:    C(S) = max_{i in S} C(S - i) + random increment
//   kSubmodular:   weighted coverage, C(S) = weight of the union of the
//                  elements covered by the players in S
//   kSupermodular: non-negative random dividends on every non-empty set
SetCostFunction random_cost(std::mt19937_64& rng, int arity, CostFamily family);

struct RandomGameLimits {
  int max_players = 4;
  int max_resources = 4;
  int max_strategies = 4;
};

// Every resource gets a cost from `family`; each player draws 1..max
// non-empty resource subsets.
GameModel random_game(std::mt19937_64& rng, CostFamily family,
                      const RandomGameLimits& limits = {});

struct CorpusGame {
  CostFamily family;
  GameModel model;
};

// `count` games seeded from `seed`; families cycle arbitrary, submodular,
// supermodular unless `only` is given.
std::vector<CorpusGame> random_corpus(std::uint64_t seed, std::size_t count,
                                      std::optional<CostFamily> only = std::nullopt,
                                      const RandomGameLimits& limits = {});

}  // namespace arena

#endif  // ARENA_RANDOM_GAMES_HPP_
