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
#include "arena/gadgets.hpp"
#include "arena/random_games.hpp"
#include "benchmark/benchmark.h"

namespace {

using namespace arena;

void BM_EnumeratePneHarmonic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  const auto gadget = build_pos_nharmonic(n, Rational(1, 4), WeightSystem::uniform(n));
  const GameModel model = to_game(gadget.network);
  for (auto _ : state) {
    auto pne = enumerate_pne(model, Protocol::shapley(), threads);
    benchmark::DoNotOptimize(pne);
  }
}
BENCHMARK(BM_EnumeratePneHarmonic)
    ->Args({4, 1})
    ->Args({6, 1})
    ->Args({8, 1})
    ->Args({8, 4})
    ->Unit(benchmark::kMillisecond);

void BM_AnalyzeCorpus(benchmark::State& state) {
  const auto corpus = random_corpus(7, 100);
  for (auto _ : state) {
    for (const auto& g : corpus) {
      auto report = analyze(g.model, Protocol::shapley());
      benchmark::DoNotOptimize(report);
    }
  }
}
BENCHMARK(BM_AnalyzeCorpus)->Unit(benchmark::kMillisecond);

void BM_BestResponseDynamics(benchmark::State& state) {
  const auto corpus = random_corpus(8, 100);
  for (auto _ : state) {
    for (const auto& g : corpus) {
      StrategyProfile start{std::vector<std::size_t>(g.model.players(), 0)};
      auto r = best_response_dynamics(g.model, Protocol::shapley(), start);
      benchmark::DoNotOptimize(r);
    }
  }
}
BENCHMARK(BM_BestResponseDynamics)->Unit(benchmark::kMillisecond);

void BM_PoaGadget(benchmark::State& state) {
  for (auto _ : state) {
    auto g = build_poa_unbounded(Rational(state.range(0)), Protocol::shapley());
    auto v = verify_gadget(g.network, Protocol::shapley(), g.promised_ratio,
                           GadgetKind::kPoaUnbounded);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_PoaGadget)->Arg(2)->Arg(100);

}  // namespace
