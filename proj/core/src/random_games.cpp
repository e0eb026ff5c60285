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

#include "arena/random_games.hpp"

#include <algorithm>
#include <set>

#include "arena/errors.hpp"

namespace arena {

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// p/q with p in [0, max_num] and q in [1, 4].
Rational small_rational(std::mt19937_64& rng, int max_num) {
  Rational r(uniform_int(rng, 0, max_num), uniform_int(rng, 1, 4));
  r.canonicalize();
  return r;
}

}  // namespace

std::string_view to_string(CostFamily family) {
  switch (family) {
    case CostFamily::kArbitrary: return "arbitrary";
    case CostFamily::kSubmodular: return "submodular";
    case CostFamily::kSupermodular: return "supermodular";
  }
  return "arbitrary";
}

CostFamily parse_cost_family(std::string_view name) {
  if (name == "arbitrary") return CostFamily::kArbitrary;
  if (name == "submodular") return CostFamily::kSubmodular;
  if (name == "supermodular") return CostFamily::kSupermodular;
  throw ValidationError("unknown cost class '" + std::string(name) + "'");
}

SetCostFunction random_cost(std::mt19937_64& rng, int arity, CostFamily family) {
  const std::size_t size = std::size_t{1} << arity;
  std::vector<Rational> table(size);
  switch (family) {
    case CostFamily::kArbitrary: {
      for (std::size_t mask = 1; mask < size; ++mask) {
        Rational base = 0;
        for (int i = 0; i < arity; ++i) {
          if (mask & (std::size_t{1} << i)) {
            base = std::max(base, table[mask ^ (std::size_t{1} << i)]);
          }
        }
        table[mask] = base + small_rational(rng, 6);
      }
      break;
    }
    case CostFamily::kSubmodular: {
      const int elements = uniform_int(rng, 1, 6);
      std::vector<Rational> weight(elements);
      for (auto& w : weight) w = small_rational(rng, 6);
      std::vector<std::uint32_t> covers(arity);
      for (auto& c : covers) {
        c = static_cast<std::uint32_t>(uniform_int(rng, 0, (1 << elements) - 1));
      }
      for (std::size_t mask = 1; mask < size; ++mask) {
        std::uint32_t covered = 0;
        for (int i = 0; i < arity; ++i) {
          if (mask & (std::size_t{1} << i)) covered |= covers[i];
        }
        for (int e = 0; e < elements; ++e) {
          if (covered & (1U << e)) table[mask] += weight[e];
        }
      }
      break;
    }
    case CostFamily::kSupermodular: {
      std::vector<Rational> dividend(size);
      for (std::size_t mask = 1; mask < size; ++mask) {
        // Sparse: roughly half the dividends vanish.
        if (uniform_int(rng, 0, 1) == 1) dividend[mask] = small_rational(rng, 4);
      }
      for (std::size_t mask = 1; mask < size; ++mask) {
        for_each_subset(PlayerSet(static_cast<PlayerSet::Mask>(mask)),
                        [&](PlayerSet t) { table[mask] += dividend[t.bits()]; });
      }
      break;
    }
  }
  return SetCostFunction::from_table(arity, std::move(table));
}

GameModel random_game(std::mt19937_64& rng, CostFamily family, const RandomGameLimits& limits) {
  const int n = uniform_int(rng, 1, limits.max_players);
  const int m = uniform_int(rng, 1, limits.max_resources);
  std::vector<Resource> resources;
  for (int r = 0; r < m; ++r) {
    resources.push_back({"r" + std::to_string(r + 1), random_cost(rng, n, family)});
  }
  std::vector<std::vector<Strategy>> sets(n);
  for (int i = 0; i < n; ++i) {
    const int want = uniform_int(rng, 1, std::min(limits.max_strategies, (1 << m) - 1));
    std::set<Strategy> seen;
    while (static_cast<int>(seen.size()) < want) {
      const int mask = uniform_int(rng, 1, (1 << m) - 1);
      Strategy s;
      for (int r = 0; r < m; ++r) {
        if (mask & (1 << r)) s.push_back(static_cast<std::size_t>(r));
      }
      if (seen.insert(s).second) sets[i].push_back(std::move(s));
    }
  }
  return GameModel(n, std::move(resources), std::move(sets));
}

std::vector<CorpusGame> random_corpus(std::uint64_t seed, std::size_t count,
                                      std::optional<CostFamily> only,
                                      const RandomGameLimits& limits) {
  std::mt19937_64 rng(seed);
  static constexpr CostFamily kCycle[] = {CostFamily::kArbitrary, CostFamily::kSubmodular,
                                          CostFamily::kSupermodular};
  std::vector<CorpusGame> out;
  out.reserve(count);
  for (std::size_t g = 0; g < count; ++g) {
    const CostFamily family = only ? *only : kCycle[g % 3];
    out.push_back({family, random_game(rng, family, limits)});
  }
  return out;
}

}  // namespace arena
