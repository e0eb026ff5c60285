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

#ifndef ARENA_COST_FUNCTION_HPP_
#define ARENA_COST_FUNCTION_HPP_

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "arena/player_set.hpp"
#include "arena/rational.hpp"

namespace arena {

enum class CostClass { kModular, kSubmodular, kSupermodular, kNeither };

std::string_view to_string(CostClass c);

// A non-decreasing set function C: 2^N -> Q>=0 with C(empty) = 0, where
// N = {0, ..., arity-1}. Always held as an explicit table of 2^arity values
// indexed by bitmask; functions built from a cardinality vector remember it
// so they serialize back in that form.
//
// Immutable and cheap to copy (shared storage). Construction validates
// eagerly and throws ValidationError.
class SetCostFunction {
 public:
  // table[mask] = C(mask); table.size() must be 2^arity.
  static SetCostFunction from_table(int arity, std::vector<Rational> table);
  // C(S) = values[|S|]; arity = values.size() - 1.
  static SetCostFunction anonymous(std::vector<Rational> values);
  // Identically zero.
  static SetCostFunction zero(int arity);
  // 0 on the empty set, c on every non-empty set.
  static SetCostFunction constant(int arity, const Rational& c);

  int arity() const { return arity_; }
  const Rational& operator()(PlayerSet s) const { return data_[s.bits()]; }
  const std::vector<Rational>& table() const;

  // Cardinality vector if the function was built anonymously.
  const std::optional<std::vector<Rational>>& anonymous_values() const;

  // Harsanyi dividends d(T) = sum_{U subseteq T} (-1)^{|T|-|U|} C(U), indexed
  // by bitmask. Computed once by Moebius inversion; thread-safe.
  const std::vector<Rational>& dividends() const;

  // Structural equality of the value tables.
  bool operator==(const SetCostFunction& other) const;

 private:
  struct Impl;
  explicit SetCostFunction(std::shared_ptr<const Impl> impl);

  std::shared_ptr<const Impl> impl_;
  int arity_ = 0;
  const Rational* data_ = nullptr;
};

// Exhaustive check of the marginal inequalities over every X subseteq Y and
// i not in Y.
CostClass classify(const SetCostFunction& f);

bool is_anonymous(const SetCostFunction& f);

}  // namespace arena

#endif  // ARENA_COST_FUNCTION_HPP_
