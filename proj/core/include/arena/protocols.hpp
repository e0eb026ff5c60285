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

#ifndef ARENA_PROTOCOLS_HPP_
#define ARENA_PROTOCOLS_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arena/cost_function.hpp"
#include "arena/game.hpp"
#include "arena/player_set.hpp"
#include "arena/rational.hpp"

namespace arena {

// Positive player weights plus an ordered partition of the players.
class WeightSystem {
 public:
  // Throws ValidationError unless every weight is positive and the blocks are
  // non-empty, pairwise disjoint and cover {0, ..., lambda.size()-1}.
  WeightSystem(std::vector<Rational> lambda, std::vector<PlayerSet> blocks);

  // Unit weights, one block holding everybody.
  static WeightSystem uniform(int players);

  int players() const { return static_cast<int>(lambda_.size()); }
  const std::vector<Rational>& lambda() const { return lambda_; }
  const std::vector<PlayerSet>& blocks() const { return blocks_; }
  // Index of the block containing the player.
  int block_of(int player) const { return block_of_[player]; }

  bool operator==(const WeightSystem&) const = default;

 private:
  std::vector<Rational> lambda_;
  std::vector<PlayerSet> blocks_;
  std::vector<int> block_of_;
};

// Shapley value of player i in the cooperative cost game (users, f):
// the subset form of the average marginal cost over arrival orders.
// Returns 0 when i is not a user. Throws std::invalid_argument when users or
// i fall outside the arity of f.
Rational shapley_share(const SetCostFunction& f, PlayerSet users, int i);

// Shares of all arity() players; non-users get 0.
std::vector<Rational> shapley_shares(const SetCostFunction& f, PlayerSet users);

// Literal average over all |users|! arrival orders. Only for cross-checking;
// throws CapExceeded above 8 users.
Rational shapley_share_by_permutations(const SetCostFunction& f, PlayerSet users, int i);

// Generalized weighted Shapley share: every dividend d(T), T subseteq users,
// is split among the members of T that sit in the earliest block meeting T,
// in proportion to their weights.
Rational gws_share(const SetCostFunction& f, PlayerSet users, int i, const WeightSystem& w);

std::vector<Rational> gws_shares(const SetCostFunction& f, PlayerSet users,
                                 const WeightSystem& w);

// An explicit share rule for one (cost function, user set) pair. When `cost`
// is empty the entry matches any cost function. Listed players pay their
// fixed amounts; the residual player, if any, pays C(users) minus the fixed
// total; everyone else pays 0. Entries may deliberately break budget
// balance: nothing here is validated against the cost.
struct TableEntry {
  std::optional<SetCostFunction> cost;
  PlayerSet users;
  std::vector<std::pair<int, Rational>> fixed;
  std::optional<int> residual;
};

// First matching entry wins; unmatched inputs fall back to Shapley.
struct TableRule {
  std::vector<TableEntry> entries;
};

struct ShapleyRule {};

struct WeightedShapleyRule {
  WeightSystem weights;
};

// A uniform cost-sharing protocol: shares depend only on the cost function
// and the set of users of a resource.
class Protocol {
 public:
  using Rule = std::variant<ShapleyRule, WeightedShapleyRule, TableRule>;

  static Protocol shapley() { return Protocol(ShapleyRule{}); }
  static Protocol weighted_shapley(WeightSystem w) {
    return Protocol(WeightedShapleyRule{std::move(w)});
  }
  static Protocol table(TableRule t) { return Protocol(std::move(t)); }

  explicit Protocol(Rule rule) : rule_(std::move(rule)) {}

  Rational share(const SetCostFunction& f, PlayerSet users, int i) const;
  std::vector<Rational> shares(const SetCostFunction& f, PlayerSet users) const;

  bool is_shapley() const { return std::holds_alternative<ShapleyRule>(rule_); }
  const Rule& rule() const { return rule_; }
  // "shapley", "gws" or "table".
  std::string name() const;

 private:
  Rule rule_;
};

// Sum of player i's shares over the resources of her chosen strategy.
Rational private_cost(const GameModel& model, const Protocol& p,
                      const StrategyProfile& profile, int i);

// Exhaustive over every user set S: shares of S sum to C(S) and non-users
// pay nothing.
bool check_budget_balance(const Protocol& p, const SetCostFunction& f);

// For every S and i != j in S: share_i(S) <= share_i(S - {j}). Meaningful for
// constant cost functions, where every uniform protocol must satisfy it.
bool check_share_monotonicity(const Protocol& p, const SetCostFunction& f);

}  // namespace arena

#endif  // ARENA_PROTOCOLS_HPP_
