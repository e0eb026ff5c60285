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

#include "arena_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "arena/bounds.hpp"
#include "arena/equilibrium.hpp"
#include "arena/errors.hpp"
#include "arena/gadgets.hpp"
#include "arena/potential.hpp"
#include "arena/random_games.hpp"
#include "arena_cli/game_file.hpp"

namespace arena::cli {

namespace {

StrategyProfile parse_profile(const std::string& text) {
  StrategyProfile profile;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v < 0) {
      throw ValidationError("profile entries must be non-negative integers, got '" + item + "'");
    }
    profile.choice.push_back(static_cast<std::size_t>(v));
  }
  return profile;
}

std::uint64_t parse_seed(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty()) throw ValidationError("bad seed '" + text + "'");
  return v;
}

Json price_json(const PriceRatio& r) { return r.to_string(); }

Json report_json(const AnalysisReport& report) {
  Json pne = Json::array();
  for (std::size_t i = 0; i < report.pne.size(); ++i) {
    Json entry = {{"profile", profile_json(report.pne[i])},
                  {"cost", to_string(report.pne_costs[i])}};
    pne.push_back(entry);
  }
  Json potential = nullptr;
  if (report.protocol == "shapley") {
    potential = Json::array();
    for (const auto& v : report.pne_potentials) potential.push_back(to_string(v));
  }
  return {{"protocol", report.protocol},
          {"pne", pne},
          {"optimum",
           {{"profile", profile_json(report.optimum.profile)},
            {"cost", to_string(report.optimum.cost)}}},
          {"poa", price_json(report.poa)},
          {"pos", price_json(report.pos)},
          {"potential", potential}};
}

void print_report_table(const AnalysisReport& report, std::ostream& err) {
  err << "protocol   " << report.protocol << "\n";
  err << "equilibria " << report.pne.size() << "\n";
  for (std::size_t i = 0; i < report.pne.size(); ++i) {
    err << "  " << to_string(report.pne[i]) << "  cost " << to_string(report.pne_costs[i]);
    if (!report.pne_potentials.empty()) {
      err << "  potential " << to_string(report.pne_potentials[i]);
    }
    err << "\n";
  }
  err << "optimum    " << to_string(report.optimum.profile) << "  cost "
      << to_string(report.optimum.cost) << "\n";
  err << "PoA        " << report.poa.to_string() << "\n";
  err << "PoS        " << report.pos.to_string() << "\n";
}

int cmd_analyze(const std::string& file, const std::string& protocol_spec, unsigned threads,
                std::ostream& out, std::ostream& err) {
  const LoadedGame loaded = load_game_file(file);
  const Protocol protocol = parse_protocol_spec(protocol_spec, loaded.game.players());
  const AnalysisReport report = analyze(loaded.game, protocol, threads);
  out << report_json(report).dump(2) << "\n";
  print_report_table(report, err);
  return kExitOk;
}

int cmd_shares(const std::string& file, const std::string& profile_text,
               const std::string& protocol_spec, std::ostream& out, std::ostream& err) {
  const LoadedGame loaded = load_game_file(file);
  const GameModel& model = loaded.game;
  const Protocol protocol = parse_protocol_spec(protocol_spec, model.players());
  const StrategyProfile profile = parse_profile(profile_text);
  validate_profile(model, profile);
  const auto loads = resource_loads(model, profile);

  Json resources = Json::array();
  std::vector<Rational> private_costs(model.players());
  for (std::size_t r = 0; r < loads.size(); ++r) {
    const auto& res = model.resources()[r];
    Json shares = Json::object();
    const auto row = protocol.shares(res.cost, loads[r]);
    for (int i : loads[r].members()) {
      shares[std::to_string(i + 1)] = to_string(row[i]);
      private_costs[i] += row[i];
    }
    Json users = Json::array();
    for (int i : loads[r].members()) users.push_back(i + 1);
    resources.push_back({{"id", res.id},
                         {"users", users},
                         {"cost", to_string(res.cost(loads[r]))},
                         {"shares", shares}});
    err << res.id << "  users " << loads[r].to_string() << "  cost "
        << to_string(res.cost(loads[r]));
    for (int i : loads[r].members()) err << "  p" << i + 1 << "=" << to_string(row[i]);
    err << "\n";
  }
  Json players = Json::array();
  for (int i = 0; i < model.players(); ++i) {
    players.push_back({{"id", i + 1}, {"private_cost", to_string(private_costs[i])}});
  }
  out << Json{{"protocol", protocol.name()},
              {"profile", profile_json(profile)},
              {"resources", resources},
              {"players", players},
              {"social_cost", to_string(social_cost(model, profile))}}
             .dump(2)
      << "\n";
  return kExitOk;
}

struct GadgetArgs {
  std::string kind;
  int n = 0;
  std::string eps;
  std::string a = "2";
  std::string protocol = "shapley";
  std::string q_max;
  std::string out_file;
};

int cmd_gadget(const GadgetArgs& args, std::ostream& out, std::ostream& err) {
  const GadgetKind kind = parse_gadget_kind(args.kind);
  Json info = {{"kind", std::string(to_string(kind))}};
  std::optional<NetworkModel> network;
  std::optional<Protocol> protocol;
  Rational expected;
  switch (kind) {
    case GadgetKind::kPosLinear: {
      const int n = args.n ? args.n : 2;
      const Rational eps = parse_rational(args.eps.empty() ? "1/2" : args.eps);
      network = build_pos_linear(n, eps);
      protocol = parse_protocol_spec(args.protocol, n);
      expected = pos_linear_expected(n, eps);
      info["n"] = n;
      info["eps"] = to_string(eps);
      break;
    }
    case GadgetKind::kPosNHarmonic: {
      const int n = args.n ? args.n : 4;
      const Rational eps = parse_rational(args.eps.empty() ? "1/4" : args.eps);
      protocol = parse_protocol_spec(args.protocol, n);
      WeightSystem w = WeightSystem::uniform(n);
      if (const auto* rule = std::get_if<WeightedShapleyRule>(&protocol->rule())) {
        w = rule->weights;
      } else if (!protocol->is_shapley()) {
        throw ValidationError("pos_nharmonic needs the shapley or a gws protocol");
      }
      auto gadget = build_pos_nharmonic(n, eps, w);
      network = std::move(gadget.network);
      protocol = Protocol::weighted_shapley(w);
      expected = pos_nharmonic_expected(n, eps);
      info["n"] = n;
      info["eps"] = to_string(eps);
      Json order = Json::array();
      for (int b : gadget.b_order) order.push_back(b + 1);
      Json a_players = Json::array();
      for (int p : gadget.a_players) a_players.push_back(p + 1);
      info["a_players"] = a_players;
      info["b_order"] = order;
      break;
    }
    case GadgetKind::kPoaUnbounded: {
      const Rational a = parse_rational(args.a);
      protocol = parse_protocol_spec(args.protocol, 2);
      std::optional<Rational> q_max;
      if (!args.q_max.empty()) q_max = parse_rational(args.q_max);
      auto gadget = build_poa_unbounded(a, *protocol, q_max);
      network = std::move(gadget.network);
      expected = gadget.promised_ratio;
      info["a"] = to_string(a);
      info["case"] = gadget.which_case;
      info["q"] = to_string(gadget.q);
      info["z"] = gadget.z ? Json(to_string(*gadget.z)) : Json(nullptr);
      break;
    }
  }
  const GadgetVerification v = verify_gadget(*network, *protocol, expected, kind);
  info["protocol"] = protocol->name();
  info["expected"] = to_string(expected);
  info["measured"] = v.measured.to_string();
  info["verified"] = v.verified;
  info["report"] = report_json(v.report);
  if (!args.out_file.empty()) {
    std::ofstream f(args.out_file);
    if (!f) throw ValidationError("cannot write '" + args.out_file + "'");
    f << serialize(*network).dump(2) << "\n";
    info["game_file"] = args.out_file;
  }
  out << info.dump(2) << "\n";
  err << to_string(kind) << ": expected " << to_string(expected)
      << (kind == GadgetKind::kPoaUnbounded ? " (lower bound)" : "") << ", measured "
      << v.measured.to_string() << (v.verified ? "  verified" : "  NOT VERIFIED") << "\n";
  if (!v.verified) err << v.detail << "\n";
  return v.verified ? kExitOk : kExitFailed;
}

struct DynamicsArgs {
  std::string file;
  std::string protocol = "shapley";
  std::string start;
  std::size_t max_steps = 0;
  std::string schedule = "round-robin";
  bool strict = false;
};

int cmd_dynamics(const DynamicsArgs& args, std::ostream& out, std::ostream& err) {
  const LoadedGame loaded = load_game_file(args.file);
  const GameModel& model = loaded.game;
  const Protocol protocol = parse_protocol_spec(args.protocol, model.players());

  StrategyProfile start{std::vector<std::size_t>(model.players(), 0)};
  if (args.start.rfind("random:", 0) == 0) {
    std::mt19937_64 rng(parse_seed(args.start.substr(7)));
    for (int i = 0; i < model.players(); ++i) {
      start.choice[i] =
          std::uniform_int_distribution<std::size_t>(0, model.strategies(i).size() - 1)(rng);
    }
  } else if (!args.start.empty()) {
    start = parse_profile(args.start);
  }
  validate_profile(model, start);

  BrdOptions opts;
  opts.max_steps = args.max_steps;
  if (args.schedule.rfind("random:", 0) == 0) {
    opts.random_schedule_seed = parse_seed(args.schedule.substr(7));
  } else if (args.schedule != "round-robin") {
    throw ValidationError("unknown schedule '" + args.schedule + "'");
  }
  const BrdResult result = best_response_dynamics(model, protocol, start, opts);

  Json steps = Json::array();
  for (const auto& s : result.trace) {
    steps.push_back({{"player", s.player + 1},
                     {"from", s.from},
                     {"to", s.to},
                     {"cost_before", to_string(s.cost_before)},
                     {"cost_after", to_string(s.cost_after)},
                     {"potential", s.potential ? Json(to_string(*s.potential)) : Json(nullptr)}});
  }
  Json doc = {{"protocol", protocol.name()},
              {"start", profile_json(start)},
              {"final", profile_json(result.profile)},
              {"converged", result.converged},
              {"sweeps", result.sweeps},
              {"steps", steps}};
  if (protocol.is_shapley()) doc["start_potential"] = to_string(potential(model, start));
  out << doc.dump(2) << "\n";

  err << "start " << to_string(start);
  if (protocol.is_shapley()) err << "  potential " << to_string(potential(model, start));
  err << "\n";
  for (const auto& s : result.trace) {
    err << "  player " << s.player + 1 << ": " << s.from << " -> " << s.to << "  cost "
        << to_string(s.cost_before) << " -> " << to_string(s.cost_after);
    if (s.potential) err << "  potential " << to_string(*s.potential);
    err << "\n";
  }
  err << (result.converged ? "converged" : "did not converge") << " at "
      << to_string(result.profile) << " after " << result.trace.size() << " changes\n";
  if (args.strict && !result.converged) return kExitCapExceeded;
  return kExitOk;
}

int cmd_verify_bounds(std::uint64_t seed, std::size_t count, const std::string& cls,
                      std::ostream& out, std::ostream& err) {
  const CostFamily family = parse_cost_family(cls);
  const auto corpus = random_corpus(seed, count, family);
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // checked, violated
  Json violations = Json::array();
  for (std::size_t g = 0; g < corpus.size(); ++g) {
    for (const auto& c : check_shapley_bounds(corpus[g].model, family)) {
      auto& [checked, violated] = tally[c.name];
      ++checked;
      if (!c.holds) {
        ++violated;
        violations.push_back({{"game", g},
                              {"bound", c.name},
                              {"limit", to_string(c.limit)},
                              {"measured", c.measured.to_string()},
                              {"model", serialize(corpus[g].model)}});
      }
    }
  }
  Json checks = Json::object();
  for (const auto& [name, counts] : tally) {
    checks[name] = {{"checked", counts.first}, {"violated", counts.second}};
    err << name << ": " << counts.first << " games, " << counts.second << " violations\n";
  }
  out << Json{{"seed", seed},
              {"count", count},
              {"class", cls},
              {"checks", checks},
              {"violations", violations}}
             .dump(2)
      << "\n";
  return violations.empty() ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cost-sharing game analysis with exact rational arithmetic", "arena"};
  app.require_subcommand(1);

  std::string protocol = "shapley";
  std::string file;

  auto* analyze_cmd = app.add_subcommand("analyze", "Equilibria, optimum, PoA and PoS");
  unsigned threads = 1;
  analyze_cmd->add_option("file", file, "Game file")->required();
  analyze_cmd->add_option("--protocol", protocol, "shapley | gws:<file> | table:<file>");
  analyze_cmd->add_option("--threads", threads, "Worker threads for enumeration");

  auto* shares_cmd = app.add_subcommand("shares", "Per-resource cost shares of one profile");
  std::string profile_text;
  shares_cmd->add_option("file", file, "Game file")->required();
  shares_cmd->add_option("--profile", profile_text, "Strategy indices, e.g. 0,1,0")->required();
  shares_cmd->add_option("--protocol", protocol, "shapley | gws:<file> | table:<file>");

  auto* gadget_cmd = app.add_subcommand("gadget", "Build and verify a lower-bound game");
  GadgetArgs gadget;
  gadget_cmd->add_option("kind", gadget.kind, "pos_linear | pos_nharmonic | poa_unbounded")
      ->required();
  gadget_cmd->add_option("--n", gadget.n, "Players");
  gadget_cmd->add_option("--eps", gadget.eps, "Epsilon as p/q");
  gadget_cmd->add_option("--a", gadget.a, "Target PoA (poa_unbounded)");
  gadget_cmd->add_option("--protocol", gadget.protocol, "shapley | gws:<file> | table:<file>");
  gadget_cmd->add_option("--q-max", gadget.q_max, "Largest probed pair cost (poa_unbounded)");
  gadget_cmd->add_option("--out", gadget.out_file, "Write the game file here");

  auto* dynamics_cmd = app.add_subcommand("dynamics", "Best-response dynamics trace");
  DynamicsArgs dyn;
  dynamics_cmd->add_option("file", dyn.file, "Game file")->required();
  dynamics_cmd->add_option("--protocol", dyn.protocol, "shapley | gws:<file> | table:<file>");
  dynamics_cmd->add_option("--start", dyn.start, "Strategy indices or random:<seed>");
  dynamics_cmd->add_option("--max-steps", dyn.max_steps, "Strategy changes before giving up");
  dynamics_cmd->add_option("--schedule", dyn.schedule, "round-robin | random:<seed>");
  dynamics_cmd->add_flag("--strict", dyn.strict, "Exit 3 when the dynamics do not converge");

  auto* bounds_cmd = app.add_subcommand("verify-bounds", "Shapley upper bounds on random games");
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::string cls = "arbitrary";
  bounds_cmd->add_option("--seed", seed, "Corpus seed");
  bounds_cmd->add_option("--count", count, "Number of games");
  bounds_cmd->add_option("--class", cls, "submodular | supermodular | arbitrary");

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(file, protocol, threads, out, err);
    if (*shares_cmd) return cmd_shares(file, profile_text, protocol, out, err);
    if (*gadget_cmd) return cmd_gadget(gadget, out, err);
    if (*dynamics_cmd) return cmd_dynamics(dyn, out, err);
    if (*bounds_cmd) return cmd_verify_bounds(seed, count, cls, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace arena::cli
