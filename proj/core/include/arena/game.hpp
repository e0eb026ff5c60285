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

#ifndef ARENA_GAME_HPP_
#define ARENA_GAME_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "arena/cost_function.hpp"
#include "arena/player_set.hpp"
#include "arena/rational.hpp"

namespace arena {

struct Resource {
  std::string id;
  SetCostFunction cost;

  bool operator==(const Resource&) const = default;
};

// Sorted, duplicate-free resource indices.
using Strategy = std::vector<std::size_t>;

// Players choose strategies (subsets of resources); each resource's cost
// depends on its set of users. Validated on construction.
class GameModel {
 public:
  GameModel(int players, std::vector<Resource> resources,
            std::vector<std::vector<Strategy>> strategy_sets);

  int players() const { return players_; }
  const std::vector<Resource>& resources() const { return resources_; }
  const std::vector<std::vector<Strategy>>& strategy_sets() const {
    return strategy_sets_;
  }
  const std::vector<Strategy>& strategies(int player) const {
    return strategy_sets_[player];
  }
  const Strategy& strategy(int player, std::size_t index) const {
    return strategy_sets_[player][index];
  }

  // Throws ValidationError for unknown ids.
  std::size_t resource_index(const std::string& id) const;

  // Number of strategy profiles, saturating at SIZE_MAX.
  std::size_t profile_count() const;

  bool operator==(const GameModel&) const = default;

 private:
  int players_;
  std::vector<Resource> resources_;
  std::vector<std::vector<Strategy>> strategy_sets_;
};

// One strategy index per player.
struct StrategyProfile {
  std::vector<std::size_t> choice;

  bool operator==(const StrategyProfile&) const = default;
  auto operator<=>(const StrategyProfile&) const = default;
};

// Throws ValidationError if the profile does not fit the model.
void validate_profile(const GameModel& model, const StrategyProfile& profile);

// User set of every resource, indexed like model.resources().
std::vector<PlayerSet> resource_loads(const GameModel& model,
                                      const StrategyProfile& profile);

PlayerSet users_of(const GameModel& model, const StrategyProfile& profile,
                   const std::string& resource_id);

Rational social_cost(const GameModel& model, const StrategyProfile& profile);

std::string to_string(const StrategyProfile& profile);

}  // namespace arena

#endif  // ARENA_GAME_HPP_
