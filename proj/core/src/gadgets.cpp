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

#include "arena/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arena/errors.hpp"
#include "arena/potential.hpp"

namespace arena {

namespace {

// C(S) = unit * |S|.
SetCostFunction linear_cost(int arity, const Rational& unit) {
  std::vector<Rational> v(static_cast<std::size_t>(arity) + 1);
  for (int k = 0; k <= arity; ++k) v[k] = unit * k;
  return SetCostFunction::anonymous(std::move(v));
}

// 0 below `threshold` users, `value` from there on.
SetCostFunction threshold_cost(int arity, int threshold, const Rational& value) {
  std::vector<Rational> v(static_cast<std::size_t>(arity) + 1);
  for (int k = threshold; k <= arity; ++k) v[k] = value;
  return SetCostFunction::anonymous(std::move(v));
}

// Small builder that names vertices and edges as it goes.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(int players) : players_(players) {}

  std::size_t vertex(const std::string& name) {
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (vertices_[v] == name) return v;
    }
    vertices_.push_back(name);
    return vertices_.size() - 1;
  }

  std::size_t edge(const std::string& id, const std::string& from, const std::string& to,
                   SetCostFunction cost) {
    edges_.push_back({id, vertex(from), vertex(to), std::move(cost)});
    return edges_.size() - 1;
  }

  std::size_t free_edge(const std::string& from, const std::string& to) {
    return edge(from + "->" + to, from, to, SetCostFunction::zero(players_));
  }

  NetworkModel build(const std::vector<std::pair<std::string, std::string>>& terminals,
                     std::vector<std::optional<std::vector<std::vector<std::size_t>>>> forced = {}) {
    std::vector<Terminals> t;
    for (const auto& [s, d] : terminals) t.push_back({vertex(s), vertex(d)});
    return NetworkModel(vertices_, edges_, std::move(t), std::move(forced));
  }

 private:
  int players_;
  std::vector<std::string> vertices_;
  std::vector<NetworkEdge> edges_;
};

}  // namespace

std::string_view to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kPosLinear: return "pos_linear";
    case GadgetKind::kPosNHarmonic: return "pos_nharmonic";
    case GadgetKind::kPoaUnbounded: return "poa_unbounded";
  }
  return "pos_linear";
}

GadgetKind parse_gadget_kind(std::string_view name) {
  if (name == "pos_linear") return GadgetKind::kPosLinear;
  if (name == "pos_nharmonic") return GadgetKind::kPosNHarmonic;
  if (name == "poa_unbounded") return GadgetKind::kPoaUnbounded;
  throw ValidationError("unknown gadget kind '" + std::string(name) + "'");
}

NetworkModel build_pos_linear(int n, const Rational& eps) {
  if (n < 2 || n > kMaxPlayers) {
    throw ValidationError("pos_linear needs 2 <= n <= " + std::to_string(kMaxPlayers));
  }
  if (eps <= 0 || eps >= 1) throw ValidationError("pos_linear needs 0 < eps < 1");
  NetworkBuilder b(n);
  b.vertex("s");
  b.vertex("s_i");
  b.vertex("m");
  b.vertex("t");
  const std::size_t e1 = b.edge("e1", "m", "t", threshold_cost(n, n, Rational(n) - eps));
  b.edge("e2", "s_i", "t", linear_cost(n, 1));
  b.edge("e3", "s_i", "m", SetCostFunction::zero(n));
  const std::size_t e4 = b.edge("e4", "s", "m", SetCostFunction::zero(n));

  std::vector<std::pair<std::string, std::string>> terminals{{"s_i", "t"}};
  std::vector<std::optional<std::vector<std::vector<std::size_t>>>> forced{std::nullopt};
  for (int i = 1; i < n; ++i) {
    terminals.emplace_back("s", "t");
    forced.push_back(std::vector<std::vector<std::size_t>>{{e1, e4}});
  }
  return b.build(terminals, std::move(forced));
}

Rational pos_linear_expected(int n, const Rational& eps) { return Rational(n) - eps; }

NHarmonicGadget build_pos_nharmonic(int n, const Rational& eps, const WeightSystem& w) {
  if (n < 2 || n % 2 != 0 || n > kMaxPlayers) {
    throw ValidationError("pos_nharmonic needs an even n in [2, " +
                          std::to_string(kMaxPlayers) + "]");
  }
  if (eps <= 0 || eps * 2 >= 1) throw ValidationError("pos_nharmonic needs 0 < eps < 1/2");
  if (w.players() != n) throw ValidationError("weight system does not cover n players");
  const int k = n / 2;
  const Protocol protocol = Protocol::weighted_shapley(w);
  const SetCostFunction shared = SetCostFunction::constant(n, 1 + eps);
  if (!check_share_monotonicity(protocol, shared)) {
    throw ValidationError("protocol shares on the constant edge are not monotone");
  }

  // Rank by block, then heavier first, then index.
  std::vector<int> ranked(n);
  std::iota(ranked.begin(), ranked.end(), 0);
  std::stable_sort(ranked.begin(), ranked.end(), [&](int x, int y) {
    if (w.block_of(x) != w.block_of(y)) return w.block_of(x) < w.block_of(y);
    return w.lambda()[x] > w.lambda()[y];
  });
  std::vector<int> a_players(ranked.begin(), ranked.begin() + k);
  std::vector<int> b_order(k);
  std::vector<int> remaining(ranked.begin() + k, ranked.end());
  std::sort(remaining.begin(), remaining.end());
  for (int slot = k; slot >= 1; --slot) {
    const auto shares = protocol.shares(shared, PlayerSet::of(remaining));
    int pick = remaining.front();
    for (int b : remaining) {
      if (shares[b] > shares[pick]) pick = b;
    }
    b_order[slot - 1] = pick;
    remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
  }

  NetworkBuilder b(n);
  auto spine = [](int idx) { return "u" + std::to_string(idx); };
  b.free_edge("s_A", spine(1));
  for (int j = 1; j <= k; ++j) {
    b.edge("e" + std::to_string(j), spine(2 * j - 1), spine(2 * j),
           threshold_cost(n, k + 1, Rational(k + 1, j)));
    if (j < k) b.free_edge(spine(2 * j), spine(2 * j + 1));
  }
  b.free_edge(spine(2 * k), "t_A");
  for (int j = 1; j <= k; ++j) {
    const std::string sb = "s_B" + std::to_string(j);
    const std::string tb = "t_B" + std::to_string(j);
    b.free_edge(sb, spine(2 * j - 1));
    b.free_edge(sb, "hub_in");
    b.free_edge(spine(2 * j), tb);
    b.free_edge("hub_out", tb);
  }
  b.edge("e" + std::to_string(k + 1), "hub_in", "hub_out", shared);

  std::vector<std::pair<std::string, std::string>> terminals(n);
  for (int a : a_players) terminals[a] = {"s_A", "t_A"};
  for (int j = 1; j <= k; ++j) {
    terminals[b_order[j - 1]] = {"s_B" + std::to_string(j), "t_B" + std::to_string(j)};
  }
  return {b.build(terminals), std::move(a_players), std::move(b_order)};
}

Rational pos_nharmonic_expected(int n, const Rational& eps) {
  const int k = n / 2;
  return Rational(k + 1) * harmonic(k) / (1 + eps);
}

SetCostFunction pair_cost(const Rational& q) {
  return SetCostFunction::from_table(2, {0, 1, 1, q});
}

Rational min_pair_share(const Protocol& p, const Rational& q) {
  const auto shares = p.shares(pair_cost(q), PlayerSet::full(2));
  return std::min(shares[0], shares[1]);
}

UnboundedPoaGadget build_poa_unbounded(const Rational& a, const Protocol& p,
                                       std::optional<Rational> q_probe_max) {
  if (a < 1) throw ValidationError("poa_unbounded needs a >= 1");
  const Rational q_max = q_probe_max ? *q_probe_max : a * (1 << 20);

  Rational max_seen = 0;
  for (Rational q = 2; q <= q_max; q *= 2) {
    const Rational m = min_pair_share(p, q);
    if (m >= 4 * a) {
      NetworkBuilder b(2);
      b.vertex("s");
      b.vertex("v1");
      b.vertex("v2");
      b.vertex("t");
      b.edge("e1", "s", "v1", pair_cost(q));
      b.edge("v1->v2", "v1", "v2", SetCostFunction::zero(2));
      b.edge("s->v2", "s", "v2", linear_cost(2, 1));
      b.edge("v1->t", "v1", "t", linear_cost(2, 1));
      b.edge("e2", "v2", "t", pair_cost(q));
      b.edge("direct", "s", "t", linear_cost(2, 4 * a));
      return {b.build({{"s", "t"}, {"s", "t"}}), 1, q, std::nullopt, (4 * a + 2) / 4};
    }
    max_seen = std::max(max_seen, m);
  }

  // The minimum share looked bounded over the probed range.
  Rational z = Rational(std::max(Integer(1), ceil(max_seen)));
  Rational q;
  int cheap = 0;
  for (int round = 0; round < 64; ++round) {
    q = std::max(Rational(a * (z + 1)), Rational(2));
    const auto shares = p.shares(pair_cost(q), PlayerSet::full(2));
    cheap = shares[1] < shares[0] ? 1 : 0;
    if (shares[cheap] <= z) break;
    z = ceil(shares[cheap]);
  }
  NetworkBuilder b(2);
  b.vertex("s1");
  b.vertex("s2");
  b.vertex("t");
  b.edge("e1", "s2", "t", pair_cost(q));
  b.edge("s1->s2", "s1", "s2", SetCostFunction::zero(2));
  b.edge("direct", "s1", "t", linear_cost(2, z));
  std::vector<std::pair<std::string, std::string>> terminals(2);
  terminals[cheap] = {"s1", "t"};
  terminals[1 - cheap] = {"s2", "t"};
  return {b.build(terminals), 2, q, z, q / (z + 1)};
}

GadgetVerification verify_gadget(const NetworkModel& g, const Protocol& p,
                                 const Rational& expected, GadgetKind kind) {
  GadgetVerification v{kind, expected, analyze(to_game(g), p), {}, false, {}};
  if (kind == GadgetKind::kPoaUnbounded) {
    v.measured = v.report.poa;
    v.verified = v.measured.kind == PriceRatio::Kind::kInfinite ||
                 (v.measured.is_finite() && v.measured.value >= expected);
  } else {
    v.measured = v.report.pos;
    v.verified = v.measured.is_finite() && v.measured.value == expected;
  }
  if (!v.verified) {
    std::ostringstream os;
    os << to_string(kind) << ": expected " << to_string(expected) << ", measured "
       << v.measured.to_string() << "; equilibria:";
    for (std::size_t i = 0; i < v.report.pne.size(); ++i) {
      os << " " << to_string(v.report.pne[i]) << "=" << to_string(v.report.pne_costs[i]);
    }
    if (v.report.pne.empty()) os << " none";
    v.detail = os.str();
  }
  return v;
}

}  // namespace arena
