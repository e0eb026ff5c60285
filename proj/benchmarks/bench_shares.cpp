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

#include <random>

#include "arena/potential.hpp"
#include "arena/protocols.hpp"
#include "arena/random_games.hpp"
#include "benchmark/benchmark.h"

namespace {

using namespace arena;

void BM_ShapleyShares(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const SetCostFunction f = random_cost(rng, n, CostFamily::kArbitrary);
  for (auto _ : state) {
    auto shares = shapley_shares(f, PlayerSet::full(n));
    benchmark::DoNotOptimize(shares);
  }
}
BENCHMARK(BM_ShapleyShares)->DenseRange(2, 12, 2);

void BM_ShapleyByPermutations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const SetCostFunction f = random_cost(rng, n, CostFamily::kArbitrary);
  for (auto _ : state) {
    Rational s = shapley_share_by_permutations(f, PlayerSet::full(n), 0);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ShapleyByPermutations)->DenseRange(2, 8, 2);

void BM_GwsShares(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const SetCostFunction f = random_cost(rng, n, CostFamily::kSubmodular);
  std::vector<Rational> lambda;
  for (int i = 0; i < n; ++i) lambda.emplace_back(i + 1);
  const WeightSystem w(lambda, {PlayerSet::full(n)});
  for (auto _ : state) {
    auto shares = gws_shares(f, PlayerSet::full(n), w);
    benchmark::DoNotOptimize(shares);
  }
}
BENCHMARK(BM_GwsShares)->DenseRange(2, 12, 2);

void BM_Dividends(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const SetCostFunction f = random_cost(rng, n, CostFamily::kSupermodular);
  for (auto _ : state) {
    // Fresh copy of the table so the cached transform is recomputed.
    const SetCostFunction g = SetCostFunction::from_table(n, f.table());
    benchmark::DoNotOptimize(g.dividends());
  }
}
BENCHMARK(BM_Dividends)->DenseRange(4, 14, 2);

void BM_Harmonic(benchmark::State& state) {
  for (auto _ : state) {
    Rational h = harmonic(state.range(0));
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_Harmonic)->Arg(100)->Arg(10'000)->Arg(100'000);

}  // namespace
