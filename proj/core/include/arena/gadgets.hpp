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

#ifndef ARENA_GADGETS_HPP_
#define ARENA_GADGETS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arena/equilibrium.hpp"
#include "arena/network.hpp"
#include "arena/protocols.hpp"
#include "arena/rational.hpp"

namespace arena {

enum class GadgetKind { kPosLinear, kPosNHarmonic, kPoaUnbounded };

std::string_view to_string(GadgetKind kind);
// Throws ValidationError for unknown names.
GadgetKind parse_gadget_kind(std::string_view name);

// Price of stability n - eps under Shapley sharing.
//
// Vertices s, s_i, m, t. Edges e1: m->t (0 below n users, n - eps with all
// n), e2: s_i->t (cost = number of users), e3: s_i->m and e4: s->m (free).
// Player 0 routes s_i->t; players 1..n-1 route s->t and are forced onto
// {e1, e4}. Requires n >= 2 and 0 < eps < 1.
NetworkModel build_pos_linear(int n, const Rational& eps);

// Closed form n - eps.
Rational pos_linear_expected(int n, const Rational& eps);

struct NHarmonicGadget {
  NetworkModel network;
  std::vector<int> a_players;
  // b_order[j-1] is the player routed through spine edge e_j.
  std::vector<int> b_order;
};

// Price of stability (n/2 + 1) H_{n/2} / (1 + eps) under generalized weighted
// Shapley sharing with weight system w.
//
// With k = n/2: a spine s_A -> e_1 -> ... -> e_k -> t_A, where e_j costs
// (k+1)/j once k+1 players use it and 0 before, and a shared edge e_{k+1}
// costing 1 + eps for any non-empty user set. Players are ranked by block,
// then by descending weight, then by index; the first k form A (routing
// s_A -> t_A), the rest form B. B players are peeled off by largest share on
// e_{k+1}: the heaviest payer among the remaining ones gets the highest free
// spine slot. B player for slot j routes s_Bj -> t_Bj either over e_j or over
// e_{k+1}. Requires n even, n >= 2, 0 < eps < 1/2.
//
// Throws ValidationError if the protocol's shares on e_{k+1} are not
// monotone, which every uniform protocol must satisfy on constant costs.
NHarmonicGadget build_pos_nharmonic(int n, const Rational& eps, const WeightSystem& w);

Rational pos_nharmonic_expected(int n, const Rational& eps);

struct UnboundedPoaGadget {
  NetworkModel network;
  int which_case = 1;  // 1: three-route network, 2: two-route network
  Rational q;          // pair cost on the supermodular edges
  std::optional<Rational> z;  // direct-arc unit cost, case 2 only
  // Lower bound the construction certifies: (4a + 2) / 4 in case 1,
  // q / (z + 1) in case 2. Both are >= a.
  Rational promised_ratio;
};

// Supermodular two-player edge cost: singletons 1, pair q.
SetCostFunction pair_cost(const Rational& q);

// Smallest share any player pays on pair_cost(q) when both use it.
Rational min_pair_share(const Protocol& p, const Rational& q);

// Unbounded price of anarchy for a given protocol.
//
// Probes q = 2, 4, 8, ... up to q_probe_max (default 2^20 * a). If some q
// makes both players pay at least 4a on the pair edge, emits the case-1
// network on s, v1, v2, t: e1: s->v1 and e2: v2->t with pair_cost(q), unit
// edges s->v2 and v1->t, a free edge v1->v2 and a direct arc s->t with unit
// cost 4a. Otherwise a cheap player exists whose pair share stays below an
// integer z; then q = max(a (z+1), 2) and the case-2 network on s1, s2, t
// has e1: s2->t with pair_cost(q), a free edge s1->s2, and a direct arc
// s1->t with unit cost z. The cheap player starts at s1, the other at s2.
UnboundedPoaGadget build_poa_unbounded(const Rational& a, const Protocol& p,
                                       std::optional<Rational> q_probe_max = std::nullopt);

struct GadgetVerification {
  GadgetKind kind;
  Rational expected;
  AnalysisReport report;
  // The measured ratio: PoS for the two stability gadgets, PoA otherwise.
  PriceRatio measured;
  // PoS == expected for the stability gadgets; PoA >= expected otherwise.
  bool verified = false;
  std::string detail;  // lists the equilibria on mismatch
};

GadgetVerification verify_gadget(const NetworkModel& g, const Protocol& p,
                                 const Rational& expected, GadgetKind kind);

}  // namespace arena

#endif  // ARENA_GADGETS_HPP_
