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

#include "arena/cost_function.hpp"

#include <mutex>
#include <string>

#include "arena/errors.hpp"

namespace arena {

struct SetCostFunction::Impl {
  int arity = 0;
  std::vector<Rational> table;
  std::optional<std::vector<Rational>> anonymous;

  mutable std::once_flag dividends_once;
  mutable std::vector<Rational> dividends;
};

namespace {

void validate_table(int arity, const std::vector<Rational>& table) {
  if (arity < 0 || arity > kMaxPlayers) {
    throw ValidationError("cost function arity " + std::to_string(arity) +
                          " outside [0, " + std::to_string(kMaxPlayers) + "]");
  }
  const std::size_t size = std::size_t{1} << arity;
  if (table.size() != size) {
    throw ValidationError("cost table has " + std::to_string(table.size()) +
                          " entries, expected " + std::to_string(size));
  }
  if (table[0] != 0) throw ValidationError("cost of the empty set must be 0");
  for (std::size_t mask = 0; mask < size; ++mask) {
    if (table[mask] < 0) {
      throw ValidationError("negative cost on " +
                            PlayerSet(static_cast<PlayerSet::Mask>(mask)).to_string());
    }
    for (int i = 0; i < arity; ++i) {
      const std::size_t bigger = mask | (std::size_t{1} << i);
      if (bigger != mask && table[bigger] < table[mask]) {
        throw ValidationError(
            "cost function decreases from " +
            PlayerSet(static_cast<PlayerSet::Mask>(mask)).to_string() + " to " +
            PlayerSet(static_cast<PlayerSet::Mask>(bigger)).to_string());
      }
    }
  }
}

}  // namespace

SetCostFunction::SetCostFunction(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)), arity_(impl_->arity), data_(impl_->table.data()) {}

const std::vector<Rational>& SetCostFunction::table() const { return impl_->table; }

const std::optional<std::vector<Rational>>& SetCostFunction::anonymous_values() const {
  return impl_->anonymous;
}

SetCostFunction SetCostFunction::from_table(int arity, std::vector<Rational> table) {
  for (auto& v : table) v.canonicalize();
  validate_table(arity, table);
  auto impl = std::make_shared<Impl>();
  impl->arity = arity;
  impl->table = std::move(table);
  return SetCostFunction(std::move(impl));
}

SetCostFunction SetCostFunction::anonymous(std::vector<Rational> values) {
  if (values.empty()) throw ValidationError("anonymous cost vector is empty");
  const int arity = static_cast<int>(values.size()) - 1;
  if (arity > kMaxPlayers) {
    throw ValidationError("anonymous cost vector longer than " +
                          std::to_string(kMaxPlayers + 1));
  }
  for (auto& v : values) v.canonicalize();
  std::vector<Rational> table(std::size_t{1} << arity);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = values[std::popcount(static_cast<PlayerSet::Mask>(mask))];
  }
  validate_table(arity, table);
  auto impl = std::make_shared<Impl>();
  impl->arity = arity;
  impl->table = std::move(table);
  impl->anonymous = std::move(values);
  return SetCostFunction(std::move(impl));
}

SetCostFunction SetCostFunction::zero(int arity) {
  return anonymous(std::vector<Rational>(static_cast<std::size_t>(arity) + 1));
}

SetCostFunction SetCostFunction::constant(int arity, const Rational& c) {
  std::vector<Rational> values(static_cast<std::size_t>(arity) + 1, c);
  values[0] = 0;
  return anonymous(std::move(values));
}

const std::vector<Rational>& SetCostFunction::dividends() const {
  std::call_once(impl_->dividends_once, [this] {
    // In-place Moebius transform over the subset lattice.
    std::vector<Rational> d = impl_->table;
    const std::size_t size = d.size();
    for (int i = 0; i < impl_->arity; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      for (std::size_t mask = 0; mask < size; ++mask) {
        if (mask & bit) d[mask] -= d[mask ^ bit];
      }
    }
    impl_->dividends = std::move(d);
  });
  return impl_->dividends;
}

bool SetCostFunction::operator==(const SetCostFunction& other) const {
  return impl_ == other.impl_ ||
         (impl_->arity == other.impl_->arity && impl_->table == other.impl_->table);
}

std::string_view to_string(CostClass c) {
  switch (c) {
    case CostClass::kModular: return "modular";
    case CostClass::kSubmodular: return "submodular";
    case CostClass::kSupermodular: return "supermodular";
    case CostClass::kNeither: return "neither";
  }
  return "neither";
}

CostClass classify(const SetCostFunction& f) {
  const int n = f.arity();
  const std::size_t size = std::size_t{1} << n;
  // marginal[mask * n + i] = C(mask + i) - C(mask) for i not in mask.
  std::vector<Rational> marginal(size * static_cast<std::size_t>(n));
  for (std::size_t mask = 0; mask < size; ++mask) {
    for (int i = 0; i < n; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (!(mask & bit)) marginal[mask * n + i] = f.table()[mask | bit] - f.table()[mask];
    }
  }
  bool sub = true;
  bool super = true;
  for (std::size_t y = 0; y < size && (sub || super); ++y) {
    for_each_subset(PlayerSet(static_cast<PlayerSet::Mask>(y)), [&](PlayerSet x) {
      if (!sub && !super) return;
      for (int i = 0; i < n; ++i) {
        if (y & (std::size_t{1} << i)) continue;
        const int cmp = ::cmp(marginal[x.bits() * n + i], marginal[y * n + i]);
        if (cmp < 0) sub = false;
        if (cmp > 0) super = false;
      }
    });
  }
  if (sub && super) return CostClass::kModular;
  if (sub) return CostClass::kSubmodular;
  if (super) return CostClass::kSupermodular;
  return CostClass::kNeither;
}

bool is_anonymous(const SetCostFunction& f) {
  const auto& table = f.table();
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    const int k = std::popcount(static_cast<PlayerSet::Mask>(mask));
    if (table[mask] != table[(std::size_t{1} << k) - 1]) return false;
  }
  return true;
}

}  // namespace arena
