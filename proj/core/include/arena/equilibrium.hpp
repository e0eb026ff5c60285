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

#ifndef ARENA_EQUILIBRIUM_HPP_
#define ARENA_EQUILIBRIUM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arena/game.hpp"
#include "arena/protocols.hpp"
#include "arena/rational.hpp"

namespace arena {

// Default limit on the number of enumerated profiles; ARENA_MAX_PROFILES
// overrides it.
inline constexpr std::size_t kDefaultMaxProfiles = 10'000'000;

std::size_t max_profiles();

// Throws CapExceeded if the model has more than max_profiles() profiles.
void check_profile_cap(const GameModel& model);

// The profile at a lexicographic rank (player 0 most significant).
StrategyProfile profile_at(const GameModel& model, std::size_t rank);

// True if no player has a strictly cheaper unilateral deviation.
bool is_pure_nash(const GameModel& model, const Protocol& p, const StrategyProfile& profile);

// i's cheapest strategy with everyone else fixed. Ties keep the current
// strategy if it is among the cheapest, else the lowest index wins.
std::size_t best_response(const GameModel& model, const Protocol& p,
                          const StrategyProfile& profile, int i);

struct BrdStep {
  int player;
  std::size_t from;
  std::size_t to;
  Rational cost_before;  // the mover's private cost before and after
  Rational cost_after;
  std::optional<Rational> potential;  // only under Shapley
};

struct BrdResult {
  StrategyProfile profile;
  bool converged = false;
  std::vector<BrdStep> trace;
  std::size_t sweeps = 0;
};

struct BrdOptions {
  // Strategy changes allowed before giving up; 0 means 10 * profile count.
  std::size_t max_steps = 0;
  // When set, every sweep visits the players in a fresh random order drawn
  // from this seed; otherwise sweeps go by player index.
  std::optional<std::uint64_t> random_schedule_seed;
};

// Sweeps of best responses until a full sweep changes nothing.
BrdResult best_response_dynamics(const GameModel& model, const Protocol& p,
                                 const StrategyProfile& start, const BrdOptions& opts = {});

// All pure Nash equilibria in lexicographic order. With threads > 1 the
// profile space is split into contiguous ranges and merged in order, so the
// result does not depend on the thread count.
std::vector<StrategyProfile> enumerate_pne(const GameModel& model, const Protocol& p,
                                           unsigned threads = 1);

struct Optimum {
  StrategyProfile profile;
  Rational cost;
};

// Lexicographically first profile of minimum social cost.
Optimum social_optimum(const GameModel& model);

// Lexicographically first global minimizer of the Shapley potential.
StrategyProfile potential_minimizer(const GameModel& model);

// A ratio of social costs with the conventions used for degenerate games:
// no equilibrium -> undefined, 0/0 -> 1, positive/0 -> infinite.
struct PriceRatio {
  enum class Kind { kFinite, kInfinite, kUndefined };
  Kind kind = Kind::kUndefined;
  Rational value;

  static PriceRatio finite(Rational v) { return {Kind::kFinite, std::move(v)}; }
  static PriceRatio infinite() { return {Kind::kInfinite, 0}; }
  static PriceRatio undefined() { return {Kind::kUndefined, 0}; }
  static PriceRatio of(const Rational& equilibrium_cost, const Rational& optimum_cost);

  bool is_finite() const { return kind == Kind::kFinite; }
  // "p/q", "inf" or "undefined".
  std::string to_string() const;
};

struct AnalysisReport {
  std::string protocol;
  std::vector<StrategyProfile> pne;
  std::vector<Rational> pne_costs;
  // Shapley potential of each equilibrium; empty for other protocols.
  std::vector<Rational> pne_potentials;
  Optimum optimum;
  PriceRatio poa;
  PriceRatio pos;
};

// One pass over the profile space computing everything above.
AnalysisReport analyze(const GameModel& model, const Protocol& p, unsigned threads = 1);

PriceRatio price_of_anarchy(const GameModel& model, const Protocol& p);
PriceRatio price_of_stability(const GameModel& model, const Protocol& p);

}  // namespace arena

#endif  // ARENA_EQUILIBRIUM_HPP_
