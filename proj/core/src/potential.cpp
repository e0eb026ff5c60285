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

#include "arena/potential.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "arena/errors.hpp"
#include "arena/protocols.hpp"

namespace arena {

namespace {

class AlphaTable {
 public:
  AlphaTable() {
    rows_.resize(kMaxPlayers + 1);
    for (int k = 0; k <= kMaxPlayers; ++k) {
      rows_[k].resize(static_cast<std::size_t>(k) + 1);
      for (int t = 1; t <= k; ++t) {
        rows_[k][t] = Rational(factorial(t - 1) * factorial(k - t), factorial(k));
        rows_[k][t].canonicalize();
      }
    }
  }
  const Rational& at(int k, int t) const { return rows_[k][t]; }

 private:
  std::vector<std::vector<Rational>> rows_;
};

const AlphaTable& alpha_table() {
  static const AlphaTable table;
  return table;
}

// sum_{l=lo}^{hi-1} 1/l as an uncanonicalized fraction.
void harmonic_range(long lo, long hi, Integer& num, Integer& den) {
  if (hi - lo == 1) {
    num = 1;
    den = static_cast<unsigned long>(lo);
    return;
  }
  const long mid = lo + (hi - lo) / 2;
  Integer n1, d1, n2, d2;
  harmonic_range(lo, mid, n1, d1);
  harmonic_range(mid, hi, n2, d2);
  num = n1 * d2 + n2 * d1;
  den = d1 * d2;
}

}  // namespace

const Rational& alpha(int k, int t) {
  if (k < 0 || k > kMaxPlayers || t < 0 || t > k) {
    throw std::out_of_range("alpha(" + std::to_string(k) + ", " + std::to_string(t) +
                            ") out of range");
  }
  return alpha_table().at(k, t);
}

Rational harmonic(long k) {
  if (k < 0 || k > 1'000'000) {
    throw std::out_of_range("harmonic(" + std::to_string(k) + ") out of range");
  }
  if (k == 0) return 0;
  Integer num, den;
  harmonic_range(1, k + 1, num, den);
  Rational h(num, den);
  h.canonicalize();
  return h;
}

Rational potential(const GameModel& model, const StrategyProfile& profile,
                   std::optional<PlayerSet> live) {
  validate_profile(model, profile);
  auto loads = resource_loads(model, profile);
  Rational total = 0;
  for (std::size_t r = 0; r < loads.size(); ++r) {
    const PlayerSet users = live ? (loads[r] & *live) : loads[r];
    if (users.empty()) continue;
    const auto& cost = model.resources()[r].cost;
    const int k = users.size();
    for_each_subset(users, [&](PlayerSet t) {
      if (!t.empty()) total += alpha(k, t.size()) * cost(t);
    });
  }
  return total;
}

Rational potential_by_permutation(const GameModel& model, const StrategyProfile& profile,
                                  const std::vector<int>& order) {
  validate_profile(model, profile);
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < model.players(); ++i) {
    if (static_cast<int>(sorted.size()) != model.players() || sorted[i] != i) {
      throw ValidationError("order is not a permutation of the players");
    }
  }
  const auto loads = resource_loads(model, profile);
  Rational total = 0;
  for (std::size_t r = 0; r < loads.size(); ++r) {
    const auto& cost = model.resources()[r].cost;
    PlayerSet arrived;
    for (int i : order) {
      if (!loads[r].contains(i)) continue;
      arrived = arrived.with(i);
      total += shapley_share(cost, arrived, i);
    }
  }
  return total;
}

}  // namespace arena
