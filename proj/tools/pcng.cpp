// pcng: command-line front end for the payment channel network game.
//
// Exit codes: 0 success, 1 other failure, 2 malformed input, 3 resource cap
// exceeded, 4 analytic verdict unknown without a brute-force fallback.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "pcng/closed_form.hpp"
#include "pcng/dynamics.hpp"
#include "pcng/equilibrium.hpp"
#include "pcng/game.hpp"
#include "pcng/profile_io.hpp"
#include "pcng/sweep.hpp"

using namespace pcng;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitUnknown = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

// "p/q (decimal)", or just "p" for integers.
std::string dual(const Rational& value) {
  if (value.is_integer()) return value.str();
  return value.str() + " (" + decimal(value.to_double()) + ")";
}

std::string dual(const ExtRational& value) { return value.is_infinite() ? "inf" : dual(value.value()); }

Rational parse_weight(const std::string& text, const char* name) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("--") + name + ": " + e.what());
  }
}

GameParams make_params(int n, const std::string& b, const std::string& c) {
  try {
    return GameParams(n, parse_weight(b, "b"), parse_weight(c, "c"));
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

StrategyProfile load_profile(const std::string& path) {
  try {
    return read_profile_file(path);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

TopologySpec load_topology(const std::string& text) {
  try {
    return TopologySpec::parse(text);
  } catch (const ParseError& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

int resolve_n(const TopologySpec& topology, std::optional<int> n) {
  const auto fixed = topology.fixed_size();
  if (fixed && n && *fixed != *n) {
    throw InputError(topology.name() + " has " + std::to_string(*fixed) + " players but --n is " + std::to_string(*n));
  }
  if (fixed) return *fixed;
  if (!n) throw InputError("--n is required for " + topology.name());
  return *n;
}

int enumeration_cap(std::optional<int> flag) {
  int cap = kDefaultEnumerationCap;
  if (const char* env = std::getenv("PCNG_MAX_N"); env && *env) {
    try {
      cap = std::stoi(env);
    } catch (const std::exception&) {
      throw InputError(std::string("PCNG_MAX_N is not an integer: ") + env);
    }
  }
  if (flag) cap = *flag;
  return cap;
}

void warn_if_large(int n) {
  if (n > kDefaultEnumerationCap) {
    std::cerr << "warning: exhaustive enumeration at n=" << n << " may take a very long time\n";
  }
}

std::string witness_text(const DeviationWitness& w) {
  return "player " + std::to_string(w.player) + " " + w.old_strategy.str() + " -> " + w.new_strategy.str() +
         " delta " + (w.delta ? dual(*w.delta) : std::string("-inf"));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct Common {
  std::string b = "0";
  std::string c = "1";
  std::optional<int> n;
};

void add_weights(CLI::App* cmd, Common& common) {
  cmd->add_option("-b,--b", common.b, "betweenness weight, fraction or decimal")->capture_default_str();
  cmd->add_option("-c,--c", common.c, "closeness weight, fraction or decimal")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Payment channel network creation game"};
  app.require_subcommand(1);
  int threads = 0;
  std::optional<int> max_n;
  app.add_option("--threads", threads, "worker threads, 0 = all cores");
  app.add_option("--max-n", max_n, "enumeration cap (default 6, or PCNG_MAX_N)");

  Common common;

  std::string profile_path;
  auto* cost = app.add_subcommand("cost", "per-player cost table and social cost of a profile file");
  cost->add_option("profile", profile_path, "profile file")->required();
  add_weights(cost, common);

  auto* optimum = app.add_subcommand("optimum", "closed-form social optimum");
  optimum->add_option("-n,--n", common.n, "players")->required();
  add_weights(optimum, common);

  std::string topology_text = "star";
  std::string mode = "analytic";
  auto* check = app.add_subcommand("check", "is a topology an equilibrium at (b, c)?");
  check->add_option("-t,--topology", topology_text,
                    "complete, star, path, circle, biclique:<r>:<s> or custom:<file>")
      ->capture_default_str();
  check->add_option("-n,--n", common.n, "players (implied for biclique and custom)");
  check->add_option("--mode", mode, "analytic, brute or both")
      ->check(CLI::IsMember({"analytic", "brute", "both"}))
      ->capture_default_str();
  add_weights(check, common);

  bool dedup = false;
  std::string out_path;
  auto* enumerate = app.add_subcommand("enumerate", "all equilibria for small n as a JSON report");
  enumerate->add_option("-n,--n", common.n, "players")->required();
  enumerate->add_flag("--dedup", dedup, "one profile per graph isomorphism class");
  enumerate->add_option("-o,--out", out_path, "write the report here instead of stdout");
  add_weights(enumerate, common);

  auto* poa = app.add_subcommand("poa", "price of anarchy and price of stability");
  poa->add_option("-n,--n", common.n, "players")->required();
  add_weights(poa, common);

  std::string b_min = "0";
  std::string b_max = "3/2";
  std::string c_min = "0";
  std::string c_max = "3/2";
  int resolution = 100;
  bool all_players = false;
  auto* sweep = app.add_subcommand("sweep", "exact equilibrium region and grid for a topology");
  sweep->add_option("-t,--topology", topology_text, "topology")->capture_default_str();
  sweep->add_option("-n,--n", common.n, "players (implied for biclique and custom)");
  sweep->add_option("--b-min", b_min)->capture_default_str();
  sweep->add_option("--b-max", b_max)->capture_default_str();
  sweep->add_option("--c-min", c_min)->capture_default_str();
  sweep->add_option("--c-max", c_max)->capture_default_str();
  sweep->add_option("-r,--resolution", resolution, "cells per axis")->capture_default_str();
  sweep->add_flag("--all-players", all_players, "enumerate every player, not one per symmetry class");
  sweep->add_option("-o,--out", out_path, "writes <out>.csv and <out>.region");

  std::string schedule_name = "round-robin";
  std::uint64_t seed = 0;
  std::size_t max_iters = 1000;
  auto* dynamics = app.add_subcommand("dynamics", "best-response dynamics from a profile file");
  dynamics->add_option("profile", profile_path, "initial profile file")->required();
  dynamics->add_option("--schedule", schedule_name, "round-robin, largest-improvement or random")
      ->capture_default_str();
  dynamics->add_option("--seed", seed)->capture_default_str();
  dynamics->add_option("--max-iters", max_iters, "maximum number of moves")->capture_default_str();
  add_weights(dynamics, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    EnumerationOptions enum_options;
    enum_options.threads = threads;

    if (cost->parsed()) {
      const auto profile = load_profile(profile_path);
      const auto params = make_params(profile.n(), common.b, common.c);
      const auto net = build_network(profile);
      std::cout << "player,links,betweenness,closeness,cost\n";
      for (Player u = 0; u < profile.n(); ++u) {
        const auto c = player_cost(net, profile.strategy(u).size(), u, params);
        std::cout << u << "," << c.link_cost << "," << dual(c.betweenness_term) << "," << dual(c.closeness_term) << ","
                  << dual(c.total) << "\n";
      }
      std::cout << "social cost: " << dual(social_cost(profile, params)) << "\n";
      if (profile.has_double_initiation()) std::cout << "note: some links are initiated by both endpoints\n";
      return 0;
    }

    if (optimum->parsed()) {
      const auto params = make_params(*common.n, common.b, common.c);
      const auto report = social_optimum(params);
      std::cout << "optimum:";
      for (auto k : report.optimal_kinds) std::cout << " " << to_string(k);
      std::cout << "\ncost: " << dual(report.optimal_cost) << "\n";
      std::cout << "complete " << dual(complete_social_cost(params)) << "\n";
      std::cout << "star " << dual(star_social_cost(params)) << "\n";
      std::cout << "path " << dual(path_social_cost(params)) << "\n";
      if (report.on_complete_star_boundary) std::cout << "boundary: c = 1/2 + b\n";
      if (report.on_star_path_boundary) std::cout << "boundary: c = b\n";
      return 0;
    }

    if (check->parsed()) {
      const auto topology = load_topology(topology_text);
      const int n = resolve_n(topology, common.n);
      const auto params = make_params(n, common.b, common.c);
      std::optional<Verdict> analytic;
      if (mode != "brute") {
        const auto v = ne_predicate(topology, params);
        analytic = v.verdict;
        std::cout << "analytic: " << to_string(v.verdict) << "\n";
        for (const auto& h : v.binding_inequalities) {
          std::cout << "  " << (h.contains({params.b, params.c}) ? "holds " : "fails ") << h.str() << "  # "
                    << h.provenance << "\n";
        }
        if (!v.note.empty()) std::cout << "  note: " << v.note << "\n";
      }
      if (mode != "analytic") {
        const auto profile = topology.kind == TopologyKind::Custom ? *topology.custom : canonical_profile(topology, n);
        const auto result = is_nash(profile, params);
        std::cout << "brute force: " << (result.is_nash ? "yes" : "no") << "\n";
        if (result.witness) std::cout << "  witness: " << witness_text(*result.witness) << "\n";
        if (analytic && *analytic != Verdict::Unknown && (*analytic == Verdict::Yes) != result.is_nash) {
          std::cout << "warning: analytic and brute-force verdicts disagree\n";
        }
        return 0;
      }
      return *analytic == Verdict::Unknown ? kExitUnknown : 0;
    }

    if (enumerate->parsed()) {
      const auto params = make_params(*common.n, common.b, common.c);
      enum_options.max_n = enumeration_cap(max_n);
      enum_options.dedup_isomorphic = dedup;
      warn_if_large(params.n);
      const auto report = enumerate_nash(params, enum_options);
      const auto json = report_to_json(report) + "\n";
      if (out_path.empty()) {
        std::cout << json;
      } else {
        write_text(out_path, json);
        std::cout << "equilibria: " << report.nash_count << ", written to " << out_path << "\n";
      }
      return 0;
    }

    if (poa->parsed()) {
      const auto params = make_params(*common.n, common.b, common.c);
      enum_options.max_n = enumeration_cap(max_n);
      warn_if_large(params.n);
      const auto anarchy = price_of_anarchy(params, enum_options);
      const auto stability = price_of_stability(params, enum_options);
      std::cout << "optimum: " << dual(brute_force_optimum(params, enum_options).cost) << "\n";
      std::cout << "poa: " << (anarchy ? dual(*anarchy) : "undefined (no equilibrium)") << "\n";
      std::cout << "pos: " << (stability ? dual(*stability) : "undefined (no equilibrium)") << "\n";
      return 0;
    }

    if (sweep->parsed()) {
      const auto topology = load_topology(topology_text);
      const int n = resolve_n(topology, common.n);
      GridWindow window;
      window.lo = {parse_weight(b_min, "b-min"), parse_weight(c_min, "c-min")};
      window.hi = {parse_weight(b_max, "b-max"), parse_weight(c_max, "c-max")};
      window.resolution = resolution;
      RegionOptions region_options;
      region_options.all_players = all_players;
      ParameterMap map;
      try {
        map = sweep_grid(topology, n, window, region_options);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      std::ostringstream region;
      write_region_file(region, map);
      std::cout << region.str();
      std::size_t stable = 0;
      for (const auto& cell : map.grid) stable += cell.is_ne ? 1 : 0;
      std::cout << "# deviations " << map.raw_constraints << ", stable cells " << stable << "/" << map.grid.size()
                << "\n";
      if (!out_path.empty()) {
        std::ostringstream csv;
        write_grid_csv(csv, map);
        write_text(out_path + ".csv", csv.str());
        write_text(out_path + ".region", region.str());
      }
      return 0;
    }

    if (dynamics->parsed()) {
      const auto profile = load_profile(profile_path);
      const auto params = make_params(profile.n(), common.b, common.c);
      Schedule schedule;
      try {
        schedule = Schedule::parse(schedule_name, seed);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      if (max_iters < 1) throw InputError("--max-iters must be at least 1");
      std::cout << format_trajectory(run(profile, params, schedule, max_iters));
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << " (raise with --max-n or PCNG_MAX_N)\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
