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

#ifndef ARENA_TESTS_SUPPORT_ORACLES_HPP_
#define ARENA_TESTS_SUPPORT_ORACLES_HPP_

// Brute-force reference implementations used only by tests. They follow the
// textbook definitions directly and share no code paths with the library
// beyond the value types.

#include <algorithm>
#include <numeric>
#include <vector>

#include "arena/cost_function.hpp"
#include "arena/game.hpp"
#include "arena/protocols.hpp"

namespace arena::testing {

// Compares marginals over every pair of masks (X, Y) with X subseteq Y,
// scanning all 4^n pairs rather than enumerating submasks.
inline CostClass brute_classify(const SetCostFunction& f) {
  const int n = f.arity();
  const unsigned size = 1U << n;
  bool sub = true;
  bool super = true;
  for (unsigned x = 0; x < size; ++x) {
    for (unsigned y = 0; y < size; ++y) {
      if ((x & ~y) != 0) continue;
      for (int i = 0; i < n; ++i) {
        const unsigned bit = 1U << i;
        if (y & bit) continue;
        const Rational mx = f.table()[x | bit] - f.table()[x];
        const Rational my = f.table()[y | bit] - f.table()[y];
        if (mx < my) sub = false;
        if (mx > my) super = false;
      }
    }
  }
  if (sub && super) return CostClass::kModular;
  if (sub) return CostClass::kSubmodular;
  if (super) return CostClass::kSupermodular;
  return CostClass::kNeither;
}

// d(T) by the explicit alternating sum over U subseteq T.
inline Rational dividend_by_definition(const SetCostFunction& f, unsigned t) {
  Rational d = 0;
  for (unsigned u = 0; u < (1U << f.arity()); ++u) {
    if ((u & ~t) != 0) continue;
    const int sign = (std::popcount(t) - std::popcount(u)) % 2 == 0 ? 1 : -1;
    d += sign * f.table()[u];
  }
  return d;
}

// Generalized weighted Shapley share straight from the definition.
inline Rational gws_by_definition(const SetCostFunction& f, unsigned users, int i,
                                  const WeightSystem& w) {
  if (!((users >> i) & 1U)) return 0;
  Rational total = 0;
  for (unsigned t = 1; t < (1U << f.arity()); ++t) {
    if ((t & ~users) != 0) continue;
    unsigned lead = 0;
    for (const auto& block : w.blocks()) {
      lead = t & block.bits();
      if (lead != 0) break;
    }
    if (!((lead >> i) & 1U)) continue;
    Rational weight_sum = 0;
    for (int j = 0; j < f.arity(); ++j) {
      if ((lead >> j) & 1U) weight_sum += w.lambda()[j];
    }
    total += w.lambda()[i] / weight_sum * dividend_by_definition(f, t);
  }
  return total;
}

// Private cost of player i after switching to `strategy`, recomputed from
// scratch.
inline Rational cost_after_deviation(const GameModel& model, const Protocol& p,
                                     StrategyProfile profile, int i, std::size_t strategy) {
  profile.choice[i] = strategy;
  return private_cost(model, p, profile, i);
}

// Pure Nash check by recomputing every deviation from scratch.
inline bool brute_is_pne(const GameModel& model, const Protocol& p,
                         const StrategyProfile& profile) {
  for (int i = 0; i < model.players(); ++i) {
    const Rational current = private_cost(model, p, profile, i);
    for (std::size_t s = 0; s < model.strategies(i).size(); ++s) {
      if (cost_after_deviation(model, p, profile, i, s) < current) return false;
    }
  }
  return true;
}

// Every profile of the model in lexicographic order.
inline std::vector<StrategyProfile> all_profiles(const GameModel& model) {
  std::vector<StrategyProfile> out;
  StrategyProfile p{std::vector<std::size_t>(model.players(), 0)};
  while (true) {
    out.push_back(p);
    int i = model.players() - 1;
    while (i >= 0 && ++p.choice[i] == model.strategies(i).size()) {
      p.choice[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace arena::testing

#endif  // ARENA_TESTS_SUPPORT_ORACLES_HPP_
