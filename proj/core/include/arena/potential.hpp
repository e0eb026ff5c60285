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

#ifndef ARENA_POTENTIAL_HPP_
#define ARENA_POTENTIAL_HPP_

#include <optional>
#include <vector>

#include "arena/game.hpp"
#include "arena/player_set.hpp"
#include "arena/rational.hpp"

namespace arena {

// alpha(k, t) = (t-1)! (k-t)! / k!, the coefficient of C(T) for |T| = t in the
// potential of a resource with k users; alpha(k, 0) = 0. Requires
// 0 <= t <= k <= kMaxPlayers, otherwise throws std::out_of_range.
const Rational& alpha(int k, int t);

// H_k = 1 + 1/2 + ... + 1/k, H_0 = 0. Requires 0 <= k <= 10^6.
Rational harmonic(long k);

// Rosenthal-style exact potential of the Shapley game:
//   Phi(P) = sum_r sum_{T subseteq P^r} alpha(|P^r|, |T|) C^r(T).
// With `live`, only players in the mask count as present (partial profiles);
// choices of other players are ignored.
Rational potential(const GameModel& model, const StrategyProfile& profile,
                   std::optional<PlayerSet> live = std::nullopt);

// The same potential built as a sum of Shapley shares, adding users one by
// one in the given order. `order` must be a permutation of all players.
Rational potential_by_permutation(const GameModel& model, const StrategyProfile& profile,
                                  const std::vector<int>& order);

}  // namespace arena

#endif  // ARENA_POTENTIAL_HPP_
