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

#include <algorithm>
#include <cstdlib>
#include <random>

#include "arena/equilibrium.hpp"
#include "arena/errors.hpp"
#include "arena/gadgets.hpp"
#include "arena/network.hpp"
#include "arena/potential.hpp"
#include "arena/random_games.hpp"
#include "gtest/gtest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace arena {
namespace {

using testing::q;
using testing::qs;

// Two players, two resources; the table protocol sends the whole pair cost
// to player 2, so player 1 chases player 2 and player 2 runs away.
GameModel chase_game() {
  const auto f = SetCostFunction::from_table(2, qs({"0", "1", "1", "2"}));
  return GameModel(2, {{"r1", f}, {"r2", f}}, {{{0}, {1}}, {{0}, {1}}});
}

Protocol chase_protocol() {
  TableRule rule;
  rule.entries.push_back({std::nullopt, PlayerSet::full(2), {{0, Rational(0)}}, 1});
  return Protocol::table(rule);
}

GameModel linear_gadget() { return to_game(build_pos_linear(2, q("1/2"))); }

TEST(BestResponseTest, KeepsAUniqueArgmin) {
  const GameModel model = linear_gadget();
  EXPECT_EQ(best_response(model, Protocol::shapley(), {{1, 0}}, 0), 1U);
}

TEST(BestResponseTest, LinearGadgetMovesToTheSharedRoute) {
  const GameModel model = linear_gadget();
  // On e2 alone player 0 pays 1; on the shared route 3/4.
  EXPECT_EQ(private_cost(model, Protocol::shapley(), {{0, 0}}, 0), 1);
  EXPECT_EQ(testing::cost_after_deviation(model, Protocol::shapley(), {{0, 0}}, 0, 1), q("3/4"));
  EXPECT_EQ(best_response(model, Protocol::shapley(), {{0, 0}}, 0), 1U);
}

TEST(BestResponseTest, TiesKeepTheCurrentStrategy) {
  const GameModel model(2, {{"a", SetCostFunction::zero(2)}, {"b", SetCostFunction::zero(2)}},
                        {{{0}, {1}, {0, 1}}, {{0}}});
  for (std::size_t s = 0; s < 3; ++s) {
    EXPECT_EQ(best_response(model, Protocol::shapley(), {{s, 0}}, 0), s);
  }
}

TEST(BestResponseTest, TiesAmongOthersPickTheLowestIndex) {
  const GameModel model(1,
                        {{"a", SetCostFunction::anonymous(qs({"0", "5"}))},
                         {"b", SetCostFunction::anonymous(qs({"0", "1"}))},
                         {"c", SetCostFunction::anonymous(qs({"0", "1"}))}},
                        {{{0}, {1}, {2}}});
  EXPECT_EQ(best_response(model, Protocol::shapley(), {{0}}, 0), 1U);
}

TEST(DynamicsTest, StartingAtEquilibriumChangesNothing) {
  const auto r = best_response_dynamics(linear_gadget(), Protocol::shapley(), {{1, 0}});
  EXPECT_TRUE(r.converged);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(r.sweeps, 1U);
}

TEST(DynamicsTest, LinearGadgetReachesTheUniqueEquilibrium) {
  const GameModel model = to_game(build_pos_linear(4, q("1/4")));
  const auto r = best_response_dynamics(model, Protocol::shapley(), {{0, 0, 0, 0}});
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.profile, (StrategyProfile{{1, 0, 0, 0}}));
  ASSERT_EQ(r.trace.size(), 1U);
  EXPECT_EQ(r.trace[0].player, 0);
  EXPECT_LT(*r.trace[0].potential, potential(model, {{0, 0, 0, 0}}));
}

TEST(DynamicsTest, ShapleyConvergesWithStrictlyDecreasingPotential) {
  std::mt19937_64 rng(21);
  for (int g = 0; g < 100; ++g) {
    const GameModel model = random_game(rng, static_cast<CostFamily>(g % 3));
    const auto profiles = testing::all_profiles(model);
    const auto& start = profiles[rng() % profiles.size()];
    BrdOptions opts;
    opts.max_steps = profiles.size();
    if (g % 2) opts.random_schedule_seed = g;
    const auto r = best_response_dynamics(model, Protocol::shapley(), start, opts);
    ASSERT_TRUE(r.converged);
    EXPECT_TRUE(testing::brute_is_pne(model, Protocol::shapley(), r.profile));
    Rational last = potential(model, start);
    for (const auto& step : r.trace) {
      ASSERT_TRUE(step.potential.has_value());
      EXPECT_LT(*step.potential, last);
      EXPECT_LT(step.cost_after, step.cost_before);
      EXPECT_EQ(last - *step.potential, step.cost_before - step.cost_after);
      last = *step.potential;
    }
  }
}

TEST(DynamicsTest, RandomScheduleIsReproducible) {
  std::mt19937_64 rng(22);
  const GameModel model = random_game(rng, CostFamily::kArbitrary);
  BrdOptions opts;
  opts.random_schedule_seed = 1234;
  const StrategyProfile start{std::vector<std::size_t>(model.players(), 0)};
  const auto a = best_response_dynamics(model, Protocol::shapley(), start, opts);
  const auto b = best_response_dynamics(model, Protocol::shapley(), start, opts);
  EXPECT_EQ(a.profile, b.profile);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t k = 0; k < a.trace.size(); ++k) {
    EXPECT_EQ(a.trace[k].player, b.trace[k].player);
    EXPECT_EQ(a.trace[k].to, b.trace[k].to);
  }
}

TEST(DynamicsTest, UnstableProtocolHitsTheStepCap) {
  BrdOptions opts;
  opts.max_steps = 25;
  const auto r = best_response_dynamics(chase_game(), chase_protocol(), {{0, 0}}, opts);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.trace.size(), 25U);
  EXPECT_FALSE(r.trace.front().potential.has_value());
}

TEST(EnumeratePneTest, SingleStrategyPlayers) {
  const GameModel model(2, {{"r", SetCostFunction::anonymous(qs({"0", "3", "4"}))}},
                        {{{0}}, {{0}}});
  EXPECT_EQ(enumerate_pne(model, Protocol::shapley()),
            (std::vector<StrategyProfile>{{{0, 0}}}));
}

TEST(EnumeratePneTest, LinearGadgetHasOneEquilibrium) {
  EXPECT_EQ(enumerate_pne(linear_gadget(), Protocol::shapley()),
            (std::vector<StrategyProfile>{{{1, 0}}}));
}

TEST(EnumeratePneTest, HarmonicGadgetEquilibriaAvoidTheSharedEdge) {
  const auto gadget = build_pos_nharmonic(4, q("1/4"), WeightSystem::uniform(4));
  const GameModel model = to_game(gadget.network);
  const auto pne = enumerate_pne(model, Protocol::shapley());
  ASSERT_FALSE(pne.empty());
  for (const auto& p : pne) EXPECT_TRUE(users_of(model, p, "e3").empty());
}

TEST(EnumeratePneTest, MatchesBruteForceAndIsThreadIndependent) {
  std::mt19937_64 rng(23);
  for (int g = 0; g < 60; ++g) {
    const GameModel model = random_game(rng, static_cast<CostFamily>(g % 3));
    std::vector<StrategyProfile> expected;
    for (const auto& p : testing::all_profiles(model)) {
      if (testing::brute_is_pne(model, Protocol::shapley(), p)) expected.push_back(p);
    }
    EXPECT_EQ(enumerate_pne(model, Protocol::shapley()), expected);
    EXPECT_EQ(enumerate_pne(model, Protocol::shapley(), 4), expected);
  }
}

TEST(EnumeratePneTest, UnstableProtocolHasNone) {
  EXPECT_TRUE(enumerate_pne(chase_game(), chase_protocol()).empty());
  EXPECT_TRUE(check_budget_balance(chase_protocol(), chase_game().resources()[0].cost));
}

TEST(EnumeratePneTest, CapIsEnforcedAndOverridable) {
  const GameModel model = linear_gadget();
  ::setenv("ARENA_MAX_PROFILES", "1", 1);
  EXPECT_THROW(enumerate_pne(model, Protocol::shapley()), CapExceeded);
  EXPECT_THROW(social_optimum(model), CapExceeded);
  ::setenv("ARENA_MAX_PROFILES", "2", 1);
  EXPECT_NO_THROW(enumerate_pne(model, Protocol::shapley()));
  ::unsetenv("ARENA_MAX_PROFILES");
  EXPECT_EQ(max_profiles(), kDefaultMaxProfiles);
}

TEST(SocialOptimumTest, ZeroCosts) {
  const GameModel model(2, {{"r", SetCostFunction::zero(2)}}, {{{0}, {}}, {{0}}});
  const Optimum opt = social_optimum(model);
  EXPECT_EQ(opt.cost, 0);
  EXPECT_EQ(opt.profile, (StrategyProfile{{0, 0}}));
}

TEST(SocialOptimumTest, LinearGadgetUsesTheSingleEdge) {
  const Optimum opt = social_optimum(linear_gadget());
  EXPECT_EQ(opt.cost, 1);
  EXPECT_EQ(opt.profile, (StrategyProfile{{0, 0}}));
}

TEST(SocialOptimumTest, HarmonicGadgetRoutesBThroughTheSharedEdge) {
  const auto gadget = build_pos_nharmonic(2, q("1/4"), WeightSystem::uniform(2));
  const GameModel model = to_game(gadget.network);
  const Optimum opt = social_optimum(model);
  EXPECT_EQ(opt.cost, q("5/4"));
  EXPECT_EQ(users_of(model, opt.profile, "e2"), PlayerSet::of({gadget.b_order[0]}));
}

TEST(PotentialMinimizerTest, SingleStrategyPlayers) {
  const auto f = SetCostFunction::constant(3, q("2"));
  const GameModel model = testing::single_resource_game(f);
  const auto p = potential_minimizer(model);
  EXPECT_EQ(p, (StrategyProfile{{0, 0, 0}}));
  EXPECT_EQ(potential(model, p), 2 * harmonic(3));
}

TEST(PotentialMinimizerTest, LinearGadgetMinimizerIsTheEquilibrium) {
  EXPECT_EQ(potential_minimizer(linear_gadget()), (StrategyProfile{{1, 0}}));
}

TEST(PotentialMinimizerTest, IsAlwaysAnEquilibrium) {
  std::mt19937_64 rng(24);
  for (int g = 0; g < 100; ++g) {
    const GameModel model = random_game(rng, static_cast<CostFamily>(g % 3));
    const auto pne = enumerate_pne(model, Protocol::shapley());
    EXPECT_FALSE(pne.empty());
    EXPECT_NE(std::find(pne.begin(), pne.end(), potential_minimizer(model)), pne.end());
  }
}

TEST(PriceRatioTest, Conventions) {
  EXPECT_EQ(PriceRatio::of(0, 0).to_string(), "1/1");
  EXPECT_EQ(PriceRatio::of(3, 0).to_string(), "inf");
  EXPECT_EQ(PriceRatio::of(3, 2).to_string(), "3/2");
  EXPECT_EQ(PriceRatio::undefined().to_string(), "undefined");
}

TEST(PriceTest, SingleStrategyPlayersGiveOne) {
  const GameModel model(2, {{"r", SetCostFunction::anonymous(qs({"0", "3", "4"}))}},
                        {{{0}}, {{0}}});
  EXPECT_EQ(price_of_anarchy(model, Protocol::shapley()).to_string(), "1/1");
  EXPECT_EQ(price_of_stability(model, Protocol::shapley()).to_string(), "1/1");
}

TEST(PriceTest, NoEquilibriumIsUndefined) {
  const auto report = analyze(chase_game(), chase_protocol());
  EXPECT_EQ(report.poa.kind, PriceRatio::Kind::kUndefined);
  EXPECT_EQ(report.pos.kind, PriceRatio::Kind::kUndefined);
  EXPECT_TRUE(report.pne_potentials.empty());
}

TEST(PriceTest, LinearGadgetStability) {
  EXPECT_EQ(price_of_stability(linear_gadget(), Protocol::shapley()).value, q("3/2"));
}

TEST(PriceTest, HarmonicGadgetStability) {
  const auto gadget = build_pos_nharmonic(4, q("1/4"), WeightSystem::uniform(4));
  EXPECT_EQ(price_of_stability(to_game(gadget.network), Protocol::shapley()).value, q("18/5"));
}

TEST(PriceTest, OrderingAndSubmodularAnarchyBound) {
  std::mt19937_64 rng(25);
  for (int g = 0; g < 80; ++g) {
    const GameModel model = random_game(rng, CostFamily::kSubmodular);
    const auto report = analyze(model, Protocol::shapley());
    ASSERT_TRUE(report.poa.is_finite());
    ASSERT_TRUE(report.pos.is_finite());
    EXPECT_GE(report.poa.value, report.pos.value);
    EXPECT_GE(report.pos.value, 1);
    EXPECT_LE(report.poa.value, model.players());
  }
}

TEST(ProfileAtTest, LexicographicRanks) {
  const GameModel model(2, {{"a", SetCostFunction::zero(2)}, {"b", SetCostFunction::zero(2)}},
                        {{{0}, {1}}, {{0}, {1}, {0, 1}}});
  EXPECT_EQ(profile_at(model, 0), (StrategyProfile{{0, 0}}));
  EXPECT_EQ(profile_at(model, 2), (StrategyProfile{{0, 2}}));
  EXPECT_EQ(profile_at(model, 3), (StrategyProfile{{1, 0}}));
  EXPECT_EQ(profile_at(model, 5), (StrategyProfile{{1, 2}}));
}

}  // namespace
}  // namespace arena
