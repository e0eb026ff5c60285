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

#include "arena/equilibrium.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "arena/errors.hpp"
#include "arena/potential.hpp"

namespace arena {

namespace {

// Advances to the next profile in lexicographic order; false after the last.
bool next_profile(const GameModel& model, StrategyProfile& profile) {
  for (int i = model.players() - 1; i >= 0; --i) {
    if (++profile.choice[i] < model.strategies(i).size()) return true;
    profile.choice[i] = 0;
  }
  return false;
}

// Private cost of player i if she switched to `strategy`, with `loads` the
// resource loads of the current profile (which may or may not include i).
Rational deviation_cost(const GameModel& model, const Protocol& p,
                        const std::vector<PlayerSet>& loads, int i, std::size_t strategy) {
  Rational total = 0;
  for (std::size_t r : model.strategy(i, strategy)) {
    total += p.share(model.resources()[r].cost, loads[r].with(i), i);
  }
  return total;
}

std::vector<PlayerSet> loads_without(const GameModel& model, const StrategyProfile& profile,
                                     int i, std::vector<PlayerSet> loads) {
  for (std::size_t r : model.strategy(i, profile.choice[i])) loads[r] = loads[r].without(i);
  return loads;
}

bool is_pure_nash_unchecked(const GameModel& model, const Protocol& p,
                            const StrategyProfile& profile) {
  const auto loads = resource_loads(model, profile);
  for (int i = 0; i < model.players(); ++i) {
    if (model.strategies(i).size() < 2) continue;
    const auto others = loads_without(model, profile, i, loads);
    const Rational current = deviation_cost(model, p, others, i, profile.choice[i]);
    for (std::size_t s = 0; s < model.strategies(i).size(); ++s) {
      if (s != profile.choice[i] && deviation_cost(model, p, others, i, s) < current) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::size_t max_profiles() {
  if (const char* env = std::getenv("ARENA_MAX_PROFILES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxProfiles;
}

void check_profile_cap(const GameModel& model) {
  const std::size_t count = model.profile_count();
  if (count > max_profiles()) {
    throw CapExceeded("model has " + std::to_string(count) + " profiles, limit is " +
                      std::to_string(max_profiles()));
  }
}

StrategyProfile profile_at(const GameModel& model, std::size_t rank) {
  StrategyProfile profile{std::vector<std::size_t>(model.players())};
  for (int i = model.players() - 1; i >= 0; --i) {
    const std::size_t radix = model.strategies(i).size();
    profile.choice[i] = rank % radix;
    rank /= radix;
  }
  return profile;
}

bool is_pure_nash(const GameModel& model, const Protocol& p, const StrategyProfile& profile) {
  validate_profile(model, profile);
  return is_pure_nash_unchecked(model, p, profile);
}

std::size_t best_response(const GameModel& model, const Protocol& p,
                          const StrategyProfile& profile, int i) {
  validate_profile(model, profile);
  const auto others = loads_without(model, profile, i, resource_loads(model, profile));
  const std::size_t current = profile.choice[i];
  Rational best_cost = deviation_cost(model, p, others, i, current);
  std::size_t best = current;
  for (std::size_t s = 0; s < model.strategies(i).size(); ++s) {
    if (s == current) continue;
    Rational c = deviation_cost(model, p, others, i, s);
    if (c < best_cost) {
      best_cost = std::move(c);
      best = s;
    }
  }
  return best;
}

BrdResult best_response_dynamics(const GameModel& model, const Protocol& p,
                                 const StrategyProfile& start, const BrdOptions& opts) {
  validate_profile(model, start);
  std::size_t max_steps = opts.max_steps;
  if (max_steps == 0) {
    const std::size_t count = model.profile_count();
    max_steps = count > std::numeric_limits<std::size_t>::max() / 10
                    ? std::numeric_limits<std::size_t>::max()
                    : 10 * count;
  }
  std::optional<std::mt19937_64> rng;
  if (opts.random_schedule_seed) rng.emplace(*opts.random_schedule_seed);

  BrdResult result{start, false, {}, 0};
  std::vector<int> order(model.players());
  std::iota(order.begin(), order.end(), 0);
  std::size_t steps = 0;
  while (true) {
    if (rng) std::shuffle(order.begin(), order.end(), *rng);
    ++result.sweeps;
    bool changed = false;
    for (int i : order) {
      const std::size_t from = result.profile.choice[i];
      const std::size_t to = best_response(model, p, result.profile, i);
      if (to == from) continue;
      BrdStep step{i, from, to, private_cost(model, p, result.profile, i), 0, std::nullopt};
      result.profile.choice[i] = to;
      step.cost_after = private_cost(model, p, result.profile, i);
      if (p.is_shapley()) step.potential = potential(model, result.profile);
      result.trace.push_back(std::move(step));
      changed = true;
      if (++steps >= max_steps) {
        result.converged = is_pure_nash_unchecked(model, p, result.profile);
        return result;
      }
    }
    if (!changed) {
      result.converged = true;
      return result;
    }
  }
}

std::vector<StrategyProfile> enumerate_pne(const GameModel& model, const Protocol& p,
                                           unsigned threads) {
  check_profile_cap(model);
  const std::size_t total = model.profile_count();
  const auto scan = [&](std::size_t lo, std::size_t hi) {
    std::vector<StrategyProfile> found;
    if (lo >= hi) return found;
    StrategyProfile profile = profile_at(model, lo);
    for (std::size_t rank = lo; rank < hi; ++rank) {
      if (is_pure_nash_unchecked(model, p, profile)) found.push_back(profile);
      next_profile(model, profile);
    }
    return found;
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::size_t>(total, 64))));
  if (threads == 1) return scan(0, total);

  std::vector<std::vector<StrategyProfile>> parts(threads);
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t lo = std::min(total, w * chunk);
      const std::size_t hi = std::min(total, lo + chunk);
      workers.emplace_back([&, w, lo, hi] { parts[w] = scan(lo, hi); });
    }
  }
  std::vector<StrategyProfile> merged;
  for (auto& part : parts) {
    merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  return merged;
}

Optimum social_optimum(const GameModel& model) {
  check_profile_cap(model);
  StrategyProfile profile{std::vector<std::size_t>(model.players(), 0)};
  Optimum best{profile, social_cost(model, profile)};
  while (next_profile(model, profile)) {
    Rational c = social_cost(model, profile);
    if (c < best.cost) best = {profile, std::move(c)};
  }
  return best;
}

StrategyProfile potential_minimizer(const GameModel& model) {
  check_profile_cap(model);
  StrategyProfile profile{std::vector<std::size_t>(model.players(), 0)};
  StrategyProfile best = profile;
  Rational best_value = potential(model, profile);
  while (next_profile(model, profile)) {
    Rational v = potential(model, profile);
    if (v < best_value) {
      best_value = std::move(v);
      best = profile;
    }
  }
  return best;
}

PriceRatio PriceRatio::of(const Rational& equilibrium_cost, const Rational& optimum_cost) {
  if (optimum_cost == 0) return equilibrium_cost == 0 ? finite(1) : infinite();
  return finite(equilibrium_cost / optimum_cost);
}

std::string PriceRatio::to_string() const {
  switch (kind) {
    case Kind::kFinite: return arena::to_string(value);
    case Kind::kInfinite: return "inf";
    case Kind::kUndefined: return "undefined";
  }
  return "undefined";
}

AnalysisReport analyze(const GameModel& model, const Protocol& p, unsigned threads) {
  AnalysisReport report;
  report.protocol = p.name();
  report.pne = enumerate_pne(model, p, threads);
  report.optimum = social_optimum(model);
  for (const auto& profile : report.pne) {
    report.pne_costs.push_back(social_cost(model, profile));
    if (p.is_shapley()) report.pne_potentials.push_back(potential(model, profile));
  }
  if (report.pne.empty()) {
    report.poa = PriceRatio::undefined();
    report.pos = PriceRatio::undefined();
    return report;
  }
  const auto [lo, hi] = std::minmax_element(report.pne_costs.begin(), report.pne_costs.end());
  report.poa = PriceRatio::of(*hi, report.optimum.cost);
  report.pos = PriceRatio::of(*lo, report.optimum.cost);
  return report;
}

PriceRatio price_of_anarchy(const GameModel& model, const Protocol& p) {
  return analyze(model, p).poa;
}

PriceRatio price_of_stability(const GameModel& model, const Protocol& p) {
  return analyze(model, p).pos;
}

}  // namespace arena
