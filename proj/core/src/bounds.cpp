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

#include "arena/bounds.hpp"

#include "arena/potential.hpp"

namespace arena {

namespace {

BoundCheck check(std::string name, const Rational& limit, const PriceRatio& measured) {
  const bool holds = measured.is_finite() && measured.value <= limit;
  return {std::move(name), limit, measured, holds};
}

}  // namespace

std::vector<BoundCheck> check_shapley_bounds(const GameModel& model, CostFamily family) {
  const AnalysisReport report = analyze(model, Protocol::shapley());
  const int n = model.players();
  const Rational h = harmonic(n);
  std::vector<BoundCheck> out;
  out.push_back(check("pos <= n*H_n", n * h, report.pos));
  if (family == CostFamily::kSubmodular) {
    out.push_back(check("pos <= H_n", h, report.pos));
    out.push_back(check("poa <= n", Rational(n), report.poa));
  }
  if (family == CostFamily::kSupermodular) {
    out.push_back(check("pos <= n", Rational(n), report.pos));
  }
  return out;
}

}  // namespace arena
