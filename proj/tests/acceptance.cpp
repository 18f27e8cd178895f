// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Everything is exact; the only tolerances are the
// wall-clock budgets.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pcng/closed_form.hpp"
#include "pcng/equilibrium.hpp"
#include "pcng/game.hpp"
#include "pcng/graphs.hpp"
#include "pcng/region.hpp"
#include "pcng/sweep.hpp"

using namespace pcng;

namespace {

struct Result {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    if (!detail.empty()) detail += "; ";
    detail += why;
    pass = false;
  }
};

Rational q(const char* text) { return Rational::parse(text); }

std::string point(const Rational& b, const Rational& c) { return "(b=" + b.str() + ", c=" + c.str() + ")"; }

std::string system_str(const HalfPlaneSystem& s) {
  if (!feasible(s)) return "empty";
  std::string out;
  for (const auto& h : s) out += (out.empty() ? "" : " and ") + h.normalized().str();
  return out;
}

// Shape of a connected graph among the three optimum classes.
std::string shape(const PaymentNetwork& net) {
  const int n = net.n();
  if (net.edge_count() == n * (n - 1) / 2) return "complete";
  if (net.edge_count() != n - 1) return "other";
  int max_degree = 0;
  for (Player u = 0; u < n; ++u) max_degree = std::max(max_degree, net.neighbors(u).size());
  if (max_degree == n - 1) return "star";
  if (max_degree == 2) return "path";
  return "other";
}

Result identities() {
  Result r;
  std::mt19937_64 rng(1000);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto profile = oracle::random_connected_profile(n, rng, 0.05 + 0.1 * static_cast<double>(rng() % 6));
    const GameParams params(n, Rational(static_cast<std::int64_t>(rng() % 300), 1 + static_cast<std::int64_t>(rng() % 97)),
                            Rational(1 + static_cast<std::int64_t>(rng() % 300), 1 + static_cast<std::int64_t>(rng() % 97)));
    const auto net = build_network(profile);
    if (social_cost(profile, params) != social_cost_identity(net, params)) {
      r.fail("cost identity broken at trial " + std::to_string(trial));
    }
    const auto stats = graph_statistics(net);
    Rational mean;
    for (Player u = 0; u < n; ++u) mean += freeman_betweenness(net, u);
    mean /= Rational(n);
    if (ExtRational(mean) != stats.average_betweenness ||
        mean != Rational(n - 1) * (stats.average_distance.value() - 1)) {
      r.fail("betweenness/distance identity broken at trial " + std::to_string(trial));
    }
    ++checked;
  }
  if (r.pass) r.detail = std::to_string(checked) + " profiles, exact equality";
  return r;
}

Result optimum_classes() {
  Result r;
  const EdgeIndexer idx(5);
  int checked = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      // Offset grid so no point sits on c = b or c = b + 1/2.
      const Rational b = Rational(12, 100) * (2 * i + 1);
      const Rational c = Rational(12, 100) * (2 * j + 1) + Rational(5, 100);
      const GameParams params(5, b, c);
      const auto closed = social_optimum(params);
      const auto brute = brute_force_optimum(params);
      if (closed.optimal_kinds.size() != 1) {
        r.fail("boundary point " + point(b, c));
        continue;
      }
      if (brute.cost != closed.optimal_cost) r.fail("cost mismatch at " + point(b, c));
      for (EdgeMask g : brute.graphs) {
        if (shape(idx.network(g)) != to_string(closed.optimal_kinds.front())) {
          r.fail("argmin outside " + to_string(closed.optimal_kinds.front()) + " at " + point(b, c));
          break;
        }
      }
      ++checked;
    }
  }
  if (r.pass) r.detail = std::to_string(checked) + " interior points, n=5";
  return r;
}

Result complete_graph_equilibria() {
  Result r;
  for (int n = 3; n <= 5; ++n) {
    for (const char* c : {"1.1", "1.5"}) {
      for (const char* b : {"0", "0.4", "2"}) {
        const GameParams params(n, q(b), q(c));
        const auto report = enumerate_nash(params);
        const std::size_t orientations = std::size_t{1} << (n * (n - 1) / 2);
        if (report.nash_count != orientations) {
          r.fail("n=" + std::to_string(n) + " " + point(params.b, params.c) + ": " +
                 std::to_string(report.nash_count) + " equilibria, expected " + std::to_string(orientations));
        }
        for (const auto& p : report.nash_profiles) {
          if (build_network(p).edge_count() != n * (n - 1) / 2) r.fail("non-complete equilibrium at n=" + std::to_string(n));
        }
      }
    }
    const GameParams cheap(n, q("0.1"), q("0.9"));
    const auto complete = canonical_profile(TopologySpec::complete(), n);
    const auto check = is_nash(complete, cheap);
    if (check.is_nash || !check.witness || !check.witness->delta) {
      r.fail("complete n=" + std::to_string(n) + " stable at c=0.9");
      continue;
    }
    const auto& w = *check.witness;
    const bool removes_one = (w.new_strategy - w.old_strategy).empty() &&
                             w.new_strategy.size() + 1 == w.old_strategy.size();
    const auto replay = player_cost(complete.with_strategy(w.player, w.new_strategy), w.player, cheap).total.value() -
                        player_cost(complete, w.player, cheap).total.value();
    if (!removes_one || *w.delta != -1 + cheap.c || replay != *w.delta) {
      r.fail("unexpected witness at n=" + std::to_string(n));
    }
  }
  if (r.pass) r.detail = "only complete graphs for c in {1.1, 1.5}; c=0.9 witness drops one link, delta -1/10";
  return r;
}

Result star_boundary() {
  Result r;
  int cells = 0;
  for (int n = 4; n <= 7; ++n) {
    const auto map = ne_region(TopologySpec::star(), n);
    const HalfPlane expected{1, -(Rational(n) - 3) / 2, -1, ""};
    if (map.halfplanes.size() != 1 || !map.halfplanes[0].normalized().same_coefficients(expected.normalized())) {
      r.fail("star n=" + std::to_string(n) + " region is " + system_str(map.halfplanes));
    }
    const auto profile = canonical_profile(TopologySpec::star(), n);
    for (int i = 1; i <= 21; ++i) {
      for (int j = 1; j <= 21; ++j) {
        const WeightPoint p{Rational(i, 14), Rational(j, 14)};
        if (expected.contains(p) != is_nash(profile, GameParams(n, p.b, p.c)).is_nash) {
          r.fail("brute force disagrees for n=" + std::to_string(n) + " at " + point(p.b, p.c));
        }
        ++cells;
      }
    }
  }
  if (r.pass) r.detail = "n=4..7 single half-plane, " + std::to_string(cells) + " grid checks";
  return r;
}

Result path_circle_catalog() {
  Result r;
  struct Entry {
    const char* label;
    TopologySpec topology;
    int n;
    HalfPlaneSystem printed;  ///< empty: never stable
  };
  const std::vector<Entry> entries{
      {"path n=4 (1 <= b+2c)", TopologySpec::path(), 4, {{-1, 1, 2, ""}}},
      {"path n=5 (1 <= 2b+4c)", TopologySpec::path(), 5, {{-1, 2, 4, ""}}},
      {"circle n=4 (c <= 1 <= b+2c)", TopologySpec::circle(), 4, {{1, 0, -1, ""}, {-1, 1, 2, ""}}},
      {"circle n=5 (b+c <= 1 <= 2b+4c)", TopologySpec::circle(), 5, {{1, -1, -1, ""}, {-1, 2, 4, ""}}},
      {"path n=6 (never)", TopologySpec::path(), 6, {}},
      {"circle n=6 (never)", TopologySpec::circle(), 6, {}},
  };
  std::string ok;
  for (const auto& e : entries) {
    const auto map = ne_region(e.topology, e.n);
    const bool same = e.printed.empty() ? map.empty : equivalent(map.halfplanes, e.printed);
    if (same) {
      ok += (ok.empty() ? "" : ", ") + std::string(e.label);
    } else {
      std::string why = std::string(e.label) + " computed " + system_str(map.halfplanes);
      if (e.printed.size() == 1) {
        const HalfPlane& h = e.printed.front();
        if (equivalent(map.halfplanes, {{-h.a0, -h.a1, -h.a2, ""}})) why += " (same boundary line, opposite side)";
      }
      r.fail(why);
    }
  }
  if (r.pass) {
    r.detail = "all six regions reproduced";
  } else {
    r.detail += "; matched: " + ok;
  }
  return r;
}

Result biclique_region() {
  Result r;
  for (const auto& [rr, ss] : {std::pair{3, 3}, std::pair{3, 4}}) {
    const auto top = TopologySpec::biclique(rr, ss);
    const Rational alpha(std::int64_t{ss} * (ss - 1), std::int64_t{rr} * (ss - 2));
    const Rational beta = (Rational(std::int64_t{ss} * (ss - 1), rr) - Rational(std::int64_t{rr - 2} * (rr - 1), ss + 1)) /
                          Rational(ss - rr + 1);
    const Rational m = std::min(alpha, beta);
    const HalfPlaneSystem printed{{1, -Rational(ss - 2, rr + 1), -1, ""},
                                  {-1, Rational(ss, rr), Rational(ss + rr - 3, ss - 1), ""},
                                  {-1, m, 1, ""}};
    const auto map = sweep_grid(top, rr + ss, GridWindow{});
    const std::string name = "K" + std::to_string(rr) + std::to_string(ss);
    if (!equivalent(map.halfplanes, printed)) r.fail(name + " region is " + system_str(map.halfplanes));
    if (biclique_alpha(rr, ss) != alpha || biclique_beta(rr, ss) != beta) r.fail(name + " alpha/beta mismatch");
    const auto corner = biclique_corner(rr, ss);
    if (!corner || Rational(ss, rr) * corner->b + Rational(ss + rr - 3, ss - 1) * corner->c != 1 ||
        m * corner->b + corner->c != 1) {
      r.fail(name + " corner does not solve the system");
    } else if (std::find(map.region_vertices.begin(), map.region_vertices.end(), *corner) == map.region_vertices.end()) {
      r.fail(name + " corner missing from polygon");
    } else {
      r.detail += (r.detail.empty() ? "" : ", ") + name + " corner " + point(corner->b, corner->c);
    }
  }
  const auto k33 = canonical_profile(TopologySpec::biclique(3, 3), 6);
  const auto region = ne_region(TopologySpec::biclique(3, 3), 6);
  int cells = 0;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      const WeightPoint p{Rational(3 * i, 20), Rational(3 * j, 20)};
      if (region.contains(p) != is_nash(k33, GameParams(6, p.b, p.c)).is_nash) {
        r.fail("K33 brute force disagrees at " + point(p.b, p.c));
      }
      ++cells;
    }
  }
  if (r.pass) r.detail += "; K33 brute force agrees on " + std::to_string(cells) + " points";
  return r;
}

Result poa_formulas() {
  Result r;
  const int n = 5;
  const Rational nn(n);
  auto complete_over = [&](const GameParams& p, const Rational& denominator) {
    return (Rational(1, 2) + (nn - 2) * p.b) * nn / denominator;
  };
  struct Sample {
    const char* b;
    const char* c;
  };
  const Sample first[] = {{"0", "1.1"}, {"0.5", "1.5"}, {"0.2", "1.01"}, {"1", "2"}, {"0.05", "3"}};
  const Sample second[] = {{"1", "1.2"}, {"0.8", "1.1"}, {"1", "1.5"}, {"0.9", "1.3"}, {"1.2", "1.25"}};
  const Sample third[] = {{"1.5", "1.2"}, {"2", "1.1"}, {"3", "2"}, {"1.3", "1.25"}, {"2.5", "1.5"}};
  int checked = 0;
  auto check = [&](const Sample& s, const Rational& expected, const char* which) {
    const GameParams p(n, q(s.b), q(s.c));
    const auto poa = price_of_anarchy(p);
    if (!poa || *poa != expected) {
      r.fail(std::string(which) + " at " + point(p.b, p.c) + ": got " + (poa ? poa->str() : "none") + ", expected " +
             expected.str());
    }
    ++checked;
  };
  for (const auto& s : first) check(s, 1, "PoA = 1");
  for (const auto& s : second) {
    const GameParams p(n, q(s.b), q(s.c));
    check(s, complete_over(p, 1 + (p.c + p.b * (nn - 1)) * (nn - 2)), "complete/star formula");
  }
  for (const auto& s : third) {
    const GameParams p(n, q(s.b), q(s.c));
    check(s, complete_over(p, 1 + (Rational(2, 3) * p.b + Rational(1, 3) * p.c) * nn * (nn - 2)),
          "complete/path formula");
  }
  if (r.pass) r.detail = std::to_string(checked) + " points at n=5, exact";
  return r;
}

Result price_of_stability_one() {
  Result r;
  for (int n : {5, 6}) {
    const GameParams p(n, Rational(1, 2 * n), Rational(1, n));
    const auto star = canonical_profile(TopologySpec::star(), n);
    const std::string tag = "n=" + std::to_string(n);
    if (!is_nash(star, p).is_nash) r.fail(tag + " star not stable");
    const auto opt = social_optimum(p);
    if (std::find(opt.optimal_kinds.begin(), opt.optimal_kinds.end(), OptimumKind::Star) == opt.optimal_kinds.end()) {
      r.fail(tag + " star not the closed-form optimum");
    }
    if (brute_force_optimum(p).cost != social_cost(star, p).value()) r.fail(tag + " star not the brute-force optimum");
    const auto pos = price_of_stability(p);
    if (!pos || *pos != 1) r.fail(tag + " PoS = " + (pos ? pos->str() : "none"));
  }
  if (r.pass) r.detail = "n=5,6 at b=1/(2n), c=1/n: star stable and optimal, PoS = 1";
  return r;
}

Result dominating_sets() {
  Result r;
  const Rational c = q("7/10");
  int graphs_checked = 0;
  for (int rest_n = 1; rest_n <= 5; ++rest_n) {
    const int n = rest_n + 1;
    const Player u = rest_n;
    const EdgeIndexer rest_idx(rest_n);
    const auto graphs = rest_n == 1 ? std::vector<EdgeMask>{0} : connected_graphs(rest_n);
    for (EdgeMask mask : graphs) {
      std::vector<PlayerSet> s(static_cast<std::size_t>(n));
      for (int e = 0; e < rest_idx.pair_count(); ++e) {
        if ((mask >> e) & 1U) s[static_cast<std::size_t>(rest_idx.pair(e).first)].insert(rest_idx.pair(e).second);
      }
      const StrategyProfile profile(s);
      auto adj = oracle::adjacency_matrix(profile);
      adj.pop_back();
      for (auto& row : adj) row.pop_back();
      std::vector<PlayerSet> expected;
      for (const auto& set : oracle::minimum_dominating_sets(adj)) {
        PlayerSet t;
        for (int v : set) t.insert(v);
        expected.push_back(t);
      }
      std::sort(expected.begin(), expected.end(), lexicographically_less);
      if (best_response(profile, u, GameParams(n, 0, c)).strategies != expected) {
        r.fail("mismatch on rest graph mask " + std::to_string(mask) + " with " + std::to_string(rest_n) + " nodes");
      }
      ++graphs_checked;
    }
  }
  if (r.pass) r.detail = std::to_string(graphs_checked) + " rest graphs with 1..5 nodes";
  return r;
}

Result entringer() {
  Result r;
  std::string extremes;
  for (int n = 2; n <= 7; ++n) {
    const EdgeIndexer idx(n);
    Rational lo(std::int64_t{1} << 40);
    Rational hi(0);
    for (EdgeMask mask : connected_graphs(n)) {
      const auto stats = graph_statistics(idx.network(mask));
      const Rational sum = stats.distance.value() + stats.edge_count;
      lo = std::min(lo, sum);
      hi = std::max(hi, sum);
    }
    const auto bounds = entringer_bounds(n);
    const auto path = graph_statistics(build_network(canonical_profile(TopologySpec::path(), n)));
    const Rational path_sum = path.distance.value() + path.edge_count;
    if (lo != bounds.lower) r.fail("n=" + std::to_string(n) + " minimum " + lo.str());
    if (hi != bounds.upper || path_sum != bounds.upper) r.fail("n=" + std::to_string(n) + " maximum " + hi.str());
    const Rational printed(std::int64_t{n} * n * n - 5 * n - 6, 6);
    if (path_sum > printed) extremes += (extremes.empty() ? "" : ", ") + std::to_string(n);
  }
  if (r.pass) {
    r.detail = "n=2..7 exact; path attains (n^3+5n-6)/6; (n^3-5n-6)/6 is exceeded by the path for n=" + extremes;
  }
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "cost and betweenness identities", 60, identities},
      {2, "social optimum classes (n=5)", 120, optimum_classes},
      {3, "complete graph equilibria", 300, complete_graph_equilibria},
      {4, "star region boundary", 300, star_boundary},
      {5, "path and circle regions", 300, path_circle_catalog},
      {6, "biclique region", 600, biclique_region},
      {7, "price of anarchy formulas", 300, poa_formulas},
      {8, "price of stability one", 300, price_of_stability_one},
      {9, "best responses are minimum dominating sets", 300, dominating_sets},
      {10, "distance-plus-edges bounds", 300, entringer},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      std::ostringstream os;
      os << "over time budget of " << c.budget_seconds << "s";
      result.fail(os.str());
    }
    failures += result.pass ? 0 : 1;
    std::printf("[%s] %2d %s (%.1fs): %s\n", result.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                result.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
