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

#include "arena/game.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "arena/errors.hpp"

namespace arena {

GameModel::GameModel(int players, std::vector<Resource> resources,
                     std::vector<std::vector<Strategy>> strategy_sets)
    : players_(players),
      resources_(std::move(resources)),
      strategy_sets_(std::move(strategy_sets)) {
  if (players_ < 1 || players_ > kMaxPlayers) {
    throw ValidationError("player count " + std::to_string(players_) +
                          " outside [1, " + std::to_string(kMaxPlayers) + "]");
  }
  std::set<std::string> ids;
  for (const auto& r : resources_) {
    if (!ids.insert(r.id).second) throw ValidationError("duplicate resource id '" + r.id + "'");
    if (r.cost.arity() != players_) {
      throw ValidationError("resource '" + r.id + "' has cost arity " +
                            std::to_string(r.cost.arity()) + ", expected " +
                            std::to_string(players_));
    }
  }
  if (static_cast<int>(strategy_sets_.size()) != players_) {
    throw ValidationError("expected " + std::to_string(players_) + " strategy sets, got " +
                          std::to_string(strategy_sets_.size()));
  }
  for (int i = 0; i < players_; ++i) {
    if (strategy_sets_[i].empty()) {
      throw ValidationError("player " + std::to_string(i + 1) + " has no strategies");
    }
    for (auto& s : strategy_sets_[i]) {
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw ValidationError("player " + std::to_string(i + 1) +
                              " has a strategy listing a resource twice");
      }
      if (!s.empty() && s.back() >= resources_.size()) {
        throw ValidationError("player " + std::to_string(i + 1) +
                              " has a strategy with an undeclared resource");
      }
    }
  }
}

std::size_t GameModel::resource_index(const std::string& id) const {
  for (std::size_t r = 0; r < resources_.size(); ++r) {
    if (resources_[r].id == id) return r;
  }
  throw ValidationError("unknown resource id '" + id + "'");
}

std::size_t GameModel::profile_count() const {
  std::size_t total = 1;
  for (const auto& set : strategy_sets_) {
    if (total > std::numeric_limits<std::size_t>::max() / set.size()) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= set.size();
  }
  return total;
}

void validate_profile(const GameModel& model, const StrategyProfile& profile) {
  if (static_cast<int>(profile.choice.size()) != model.players()) {
    throw ValidationError("profile has " + std::to_string(profile.choice.size()) +
                          " entries for " + std::to_string(model.players()) + " players");
  }
  for (int i = 0; i < model.players(); ++i) {
    if (profile.choice[i] >= model.strategies(i).size()) {
      throw ValidationError("player " + std::to_string(i + 1) + " strategy index " +
                            std::to_string(profile.choice[i]) + " out of range");
    }
  }
}

std::vector<PlayerSet> resource_loads(const GameModel& model,
                                      const StrategyProfile& profile) {
  std::vector<PlayerSet> loads(model.resources().size());
  for (int i = 0; i < model.players(); ++i) {
    for (std::size_t r : model.strategy(i, profile.choice[i])) loads[r] = loads[r].with(i);
  }
  return loads;
}

PlayerSet users_of(const GameModel& model, const StrategyProfile& profile,
                   const std::string& resource_id) {
  const std::size_t r = model.resource_index(resource_id);
  validate_profile(model, profile);
  PlayerSet users;
  for (int i = 0; i < model.players(); ++i) {
    const auto& s = model.strategy(i, profile.choice[i]);
    if (std::binary_search(s.begin(), s.end(), r)) users = users.with(i);
  }
  return users;
}

Rational social_cost(const GameModel& model, const StrategyProfile& profile) {
  validate_profile(model, profile);
  const auto loads = resource_loads(model, profile);
  Rational total = 0;
  for (std::size_t r = 0; r < loads.size(); ++r) total += model.resources()[r].cost(loads[r]);
  return total;
}

std::string to_string(const StrategyProfile& profile) {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.choice.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(profile.choice[i]);
  }
  return out + ")";
}

}  // namespace arena
