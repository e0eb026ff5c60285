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

#ifndef ARENA_TESTS_SUPPORT_FIXTURES_HPP_
#define ARENA_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "arena/cost_function.hpp"
#include "arena/game.hpp"

namespace arena::testing {

inline Rational q(const std::string& text) { return parse_rational(text); }

inline std::vector<Rational> qs(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(parse_rational(t));
  return out;
}

// {empty: 0, {1}: 1, {2}: 3, {1,2}: 4} -- player labels 1-based, bits 0-based.
inline SetCostFunction asymmetric_pair() {
  return SetCostFunction::from_table(2, qs({"0", "1", "3", "4"}));
}

// One resource that every player must use.
inline GameModel single_resource_game(const SetCostFunction& f) {
  std::vector<std::vector<Strategy>> sets(f.arity(), std::vector<Strategy>{{0}});
  return GameModel(f.arity(), {{"r", f}}, std::move(sets));
}

}  // namespace arena::testing

#endif  // ARENA_TESTS_SUPPORT_FIXTURES_HPP_
