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

#ifndef ARENA_BOUNDS_HPP_
#define ARENA_BOUNDS_HPP_

#include <string>
#include <vector>

#include "arena/equilibrium.hpp"
#include "arena/random_games.hpp"

namespace arena {

// One checked inequality, e.g. "pos <= H_n".
struct BoundCheck {
  std::string name;
  Rational limit;
  PriceRatio measured;
  bool holds = false;
};

// Shapley upper bounds that apply to a game whose costs all come from
// `family` (n = number of players):
//   every family  PoS <= n H_n
//   submodular    PoS <= H_n and PoA <= n
//   supermodular  PoS <= n
// A game without equilibria fails every check.
std::vector<BoundCheck> check_shapley_bounds(const GameModel& model, CostFamily family);

}  // namespace arena

#endif  // ARENA_BOUNDS_HPP_
