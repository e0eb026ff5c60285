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

#include "arena/protocols.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

#include "arena/errors.hpp"

namespace arena {

namespace {

void check_arity(const SetCostFunction& f, PlayerSet users, int i) {
  if (!users.subset_of(PlayerSet::full(f.arity()))) {
    throw std::invalid_argument("user set " + users.to_string() + " exceeds cost arity " +
                                std::to_string(f.arity()));
  }
  if (i < 0 || i >= f.arity()) {
    throw std::invalid_argument("player " + std::to_string(i + 1) +
                                " outside cost arity " + std::to_string(f.arity()));
  }
}

// weights[t] = t! (k - t - 1)! / k! for a coalition of k users.
std::vector<Rational> shapley_weights(int k) {
  std::vector<Rational> w(static_cast<std::size_t>(std::max(k, 1)));
  for (int t = 0; t < k; ++t) {
    w[t] = Rational(factorial(t) * factorial(k - t - 1), factorial(k));
    w[t].canonicalize();
  }
  return w;
}

Rational shapley_with_weights(const SetCostFunction& f, PlayerSet users, int i,
                              const std::vector<Rational>& weights) {
  Rational total = 0;
  const PlayerSet others = users.without(i);
  for_each_subset(others, [&](PlayerSet t) {
    total += weights[t.size()] * (f(t.with(i)) - f(t));
  });
  return total;
}

}  // namespace

WeightSystem::WeightSystem(std::vector<Rational> lambda, std::vector<PlayerSet> blocks)
    : lambda_(std::move(lambda)), blocks_(std::move(blocks)) {
  const int n = static_cast<int>(lambda_.size());
  if (n < 1 || n > kMaxPlayers) {
    throw ValidationError("weight system must cover 1 to " + std::to_string(kMaxPlayers) +
                          " players");
  }
  for (int i = 0; i < n; ++i) {
    lambda_[i].canonicalize();
    if (lambda_[i] <= 0) {
      throw ValidationError("weight of player " + std::to_string(i + 1) + " is not positive");
    }
  }
  block_of_.assign(n, -1);
  PlayerSet seen;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw ValidationError("weight system has an empty block");
    if (!(blocks_[b] & seen).empty()) {
      throw ValidationError("weight system blocks overlap");
    }
    if (!blocks_[b].subset_of(PlayerSet::full(n))) {
      throw ValidationError("weight system block names an unknown player");
    }
    seen = seen | blocks_[b];
    for (int i : blocks_[b].members()) block_of_[i] = static_cast<int>(b);
  }
  if (seen != PlayerSet::full(n)) {
    throw ValidationError("weight system blocks do not cover every player");
  }
}

WeightSystem WeightSystem::uniform(int players) {
  return WeightSystem(std::vector<Rational>(players, Rational(1)), {PlayerSet::full(players)});
}

Rational shapley_share(const SetCostFunction& f, PlayerSet users, int i) {
  check_arity(f, users, i);
  if (!users.contains(i)) return 0;
  return shapley_with_weights(f, users, i, shapley_weights(users.size()));
}

std::vector<Rational> shapley_shares(const SetCostFunction& f, PlayerSet users) {
  std::vector<Rational> out(f.arity());
  if (users.empty()) {
    check_arity(f, users, 0);
    return out;
  }
  const auto weights = shapley_weights(users.size());
  for (int i : users.members()) {
    check_arity(f, users, i);
    out[i] = shapley_with_weights(f, users, i, weights);
  }
  return out;
}

Rational shapley_share_by_permutations(const SetCostFunction& f, PlayerSet users, int i) {
  check_arity(f, users, i);
  if (users.size() > 8) {
    throw CapExceeded("permutation Shapley limited to 8 users, got " +
                      std::to_string(users.size()));
  }
  if (!users.contains(i)) return 0;
  std::vector<int> order = users.members();
  Rational total = 0;
  do {
    PlayerSet before;
    for (int j : order) {
      if (j == i) break;
      before = before.with(j);
    }
    total += f(before.with(i)) - f(before);
  } while (std::next_permutation(order.begin(), order.end()));
  return total / Rational(factorial(users.size()));
}

Rational gws_share(const SetCostFunction& f, PlayerSet users, int i, const WeightSystem& w) {
  check_arity(f, users, i);
  if (w.players() != f.arity()) {
    throw std::invalid_argument("weight system covers " + std::to_string(w.players()) +
                                " players, cost arity is " + std::to_string(f.arity()));
  }
  if (!users.contains(i)) return 0;
  const auto& d = f.dividends();
  const PlayerSet my_block = w.blocks()[w.block_of(i)];
  Rational total = 0;
  // Only T containing i can have i in its leading part.
  for_each_subset(users.without(i), [&](PlayerSet rest) {
    const PlayerSet t = rest.with(i);
    const Rational& dividend = d[t.bits()];
    if (dividend == 0) return;
    // i is in the leading part iff no earlier block meets T.
    for (int b = 0; b < w.block_of(i); ++b) {
      if (!(w.blocks()[b] & t).empty()) return;
    }
    const PlayerSet lead = t & my_block;
    Rational weight_sum = 0;
    for (int j : lead.members()) weight_sum += w.lambda()[j];
    total += w.lambda()[i] / weight_sum * dividend;
  });
  return total;
}

std::vector<Rational> gws_shares(const SetCostFunction& f, PlayerSet users,
                                 const WeightSystem& w) {
  std::vector<Rational> out(f.arity());
  for (int i : users.members()) out[i] = gws_share(f, users, i, w);
  return out;
}

namespace {

const TableEntry* find_entry(const TableRule& rule, const SetCostFunction& f, PlayerSet users) {
  for (const auto& e : rule.entries) {
    if (e.users == users && (!e.cost || *e.cost == f)) return &e;
  }
  return nullptr;
}

Rational table_share(const TableEntry& e, const SetCostFunction& f, int i) {
  Rational fixed_total = 0;
  std::optional<Rational> own;
  for (const auto& [player, amount] : e.fixed) {
    fixed_total += amount;
    if (player == i) own = amount;
  }
  if (own) return *own;
  if (e.residual && *e.residual == i) return f(e.users) - fixed_total;
  return 0;
}

}  // namespace

Rational Protocol::share(const SetCostFunction& f, PlayerSet users, int i) const {
  return std::visit(
      [&](const auto& r) -> Rational {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, ShapleyRule>) {
          return shapley_share(f, users, i);
        } else if constexpr (std::is_same_v<R, WeightedShapleyRule>) {
          return gws_share(f, users, i, r.weights);
        } else {
          check_arity(f, users, i);
          if (const TableEntry* e = find_entry(r, f, users)) return table_share(*e, f, i);
          return shapley_share(f, users, i);
        }
      },
      rule_);
}

std::vector<Rational> Protocol::shares(const SetCostFunction& f, PlayerSet users) const {
  if (is_shapley()) return shapley_shares(f, users);
  std::vector<Rational> out(f.arity());
  for (int i = 0; i < f.arity(); ++i) out[i] = share(f, users, i);
  return out;
}

std::string Protocol::name() const {
  switch (rule_.index()) {
    case 0: return "shapley";
    case 1: return "gws";
    default: return "table";
  }
}

Rational private_cost(const GameModel& model, const Protocol& p,
                      const StrategyProfile& profile, int i) {
  validate_profile(model, profile);
  const auto loads = resource_loads(model, profile);
  Rational total = 0;
  for (std::size_t r : model.strategy(i, profile.choice[i])) {
    total += p.share(model.resources()[r].cost, loads[r], i);
  }
  return total;
}

bool check_budget_balance(const Protocol& p, const SetCostFunction& f) {
  const PlayerSet all = PlayerSet::full(f.arity());
  bool ok = true;
  for_each_subset(all, [&](PlayerSet s) {
    if (!ok) return;
    const auto shares = p.shares(f, s);
    Rational sum = 0;
    for (int i = 0; i < f.arity(); ++i) {
      if (s.contains(i)) {
        sum += shares[i];
      } else if (shares[i] != 0) {
        ok = false;
      }
    }
    if (sum != f(s)) ok = false;
  });
  return ok;
}

bool check_share_monotonicity(const Protocol& p, const SetCostFunction& f) {
  const PlayerSet all = PlayerSet::full(f.arity());
  bool ok = true;
  for_each_subset(all, [&](PlayerSet s) {
    if (!ok || s.size() < 2) return;
    const auto shares = p.shares(f, s);
    for (int j : s.members()) {
      const auto smaller = p.shares(f, s.without(j));
      for (int i : s.without(j).members()) {
        if (shares[i] > smaller[i]) ok = false;
      }
    }
  });
  return ok;
}

}  // namespace arena
