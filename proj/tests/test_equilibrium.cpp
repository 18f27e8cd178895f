#include "doctest.h"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "oracles.hpp"
#include "pcng/closed_form.hpp"
#include "pcng/equilibrium.hpp"
#include "pcng/graphs.hpp"
#include "pcng/profile_io.hpp"

using namespace pcng;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

bool is_complete(const StrategyProfile& p) { return build_network(p).edge_count() == p.n() * (p.n() - 1) / 2; }

void check_witness(const StrategyProfile& profile, const GameParams& params, const DeviationWitness& w) {
  const auto before = player_cost(profile, w.player, params).total;
  const auto after = player_cost(profile.with_strategy(w.player, w.new_strategy), w.player, params).total;
  CHECK(w.old_strategy == profile.strategy(w.player));
  CHECK(after < before);
  if (w.delta) {
    CHECK(*w.delta < 0);
    CHECK(after.value() - before.value() == *w.delta);
  } else {
    CHECK(before.is_infinite());
  }
}

}  // namespace

TEST_CASE("best response") {
  SUBCASE("star centre keeps every link") {
    const auto star = canonical_profile(TopologySpec::star(), 5);
    const auto br = best_response(star, 0, GameParams(5, q("0.1"), q("0.2")));
    CHECK(br.strategies == std::vector<PlayerSet>{PlayerSet{1, 2, 3, 4}});
    CHECK(br.cost == ExtRational(4));
  }
  SUBCASE("expensive closeness links to everyone") {
    // Rest is a complete graph on players 0..3, player 4 starts with nothing.
    std::vector<PlayerSet> s(5);
    for (Player a = 0; a < 4; ++a)
      for (Player b = a + 1; b < 4; ++b) s[static_cast<std::size_t>(a)].insert(b);
    const StrategyProfile profile(s);
    const auto br = best_response(profile, 4, GameParams(5, 0, q("1.5")));
    CHECK(br.strategies == std::vector<PlayerSet>{PlayerSet{0, 1, 2, 3}});
  }
  SUBCASE("ties are all reported in lexicographic order") {
    const StrategyProfile profile({{}, {2}, {}});
    const auto br = best_response(profile, 0, GameParams(3, 0, q("0.7")));
    CHECK(br.strategies == std::vector<PlayerSet>{PlayerSet{1}, PlayerSet{2}});
  }
  CHECK_THROWS_AS(best_response(StrategyProfile::empty(5), 0, GameParams(5, 0, 1), 4), ResourceLimitError);
}

TEST_CASE("is_nash verdicts and witnesses") {
  const auto k4 = canonical_profile(TopologySpec::complete(), 4);
  CHECK(is_nash(k4, GameParams(4, 0, q("1.5"))).is_nash);

  const GameParams cheap(4, 0, q("0.9"));
  const auto check = is_nash(k4, cheap);
  REQUIRE_FALSE(check.is_nash);
  REQUIRE(check.witness.has_value());
  CHECK(*check.witness->delta == q("-0.1"));
  CHECK(check.witness->new_strategy.size() == check.witness->old_strategy.size() - 1);
  check_witness(k4, cheap, *check.witness);

  // Path on six players: an inner owner redirects its outer link two hops
  // further out.
  const auto p6 = canonical_profile(TopologySpec::path(), 6);
  const GameParams pp(6, q("0.2"), q("0.2"));
  const auto path_check = is_nash(p6, pp);
  REQUIRE_FALSE(path_check.is_nash);
  check_witness(p6, pp, *path_check.witness);
  bool redirect_gains = false;
  for (Player u = 0; u < 6; ++u) {
    for (Player from : p6.strategy(u)) {
      for (Player to = 0; to < 6; ++to) {
        if (to == u || p6.strategy(u).contains(to) || p6.incoming(u).contains(to)) continue;
        auto targets = p6.strategy(u);
        targets.erase(from);
        targets.insert(to);
        const auto after = player_cost(p6.with_strategy(u, targets), u, pp).total;
        if (after < player_cost(p6, u, pp).total) redirect_gains = true;
      }
    }
  }
  CHECK(redirect_gains);

  // Cut-off players have an unbounded gain.
  const StrategyProfile broken({{1}, {}, {}});
  const auto rescue = is_nash(broken, GameParams(3, 0, 1));
  REQUIRE_FALSE(rescue.is_nash);
  CHECK_FALSE(rescue.witness->delta.has_value());
  check_witness(broken, GameParams(3, 0, 1), *rescue.witness);
}

TEST_CASE("enumerate_nash examples") {
  SUBCASE("high closeness weight leaves only complete graphs") {
    const auto r = enumerate_nash(GameParams(3, q("0.1"), q("1.5")));
    CHECK(r.nash_count == 8);  // every orientation of the triangle
    for (const auto& p : r.nash_profiles) CHECK(is_complete(p));
    CHECK(*r.poa == 1);
    CHECK(*r.pos == 1);
  }
  SUBCASE("path graphs appear for n=3 below c=1") {
    const auto r = enumerate_nash(GameParams(3, q("0.1"), q("0.8")));
    CHECK(std::any_of(r.nash_profiles.begin(), r.nash_profiles.end(),
                      [](const StrategyProfile& p) { return build_network(p).edge_count() == 2; }));
  }
  SUBCASE("centre-owned star on four players") {
    const auto r = enumerate_nash(GameParams(4, q("0.3"), q("0.6")));
    const auto star = canonical_profile(TopologySpec::star(), 4);
    CHECK(std::find(r.nash_profiles.begin(), r.nash_profiles.end(), star) != r.nash_profiles.end());
  }
  SUBCASE("dedup keeps one profile per graph class") {
    const GameParams p(4, q("0.3"), q("0.6"));
    const auto full = enumerate_nash(p);
    EnumerationOptions o;
    o.dedup_isomorphic = true;
    const auto dedup = enumerate_nash(p, o);
    CHECK(dedup.nash_count == full.nash_count);
    CHECK(dedup.nash_profiles.size() <= full.nash_profiles.size());
    const CanonicalLabeler labeler(4);
    const EdgeIndexer idx(4);
    std::set<EdgeMask> classes;
    for (const auto& prof : full.nash_profiles) classes.insert(labeler.canonical(idx.mask_of(build_network(prof))));
    CHECK(dedup.nash_profiles.size() == classes.size());
  }
  CHECK_THROWS_AS(enumerate_nash(GameParams(7, 0, 1)), ResourceLimitError);
}

namespace {

std::vector<StrategyProfile> stable_orientations_by_brute_force(const GameParams& params) {
  const EdgeIndexer idx(params.n);
  std::vector<StrategyProfile> expected;
  for (EdgeMask mask : connected_graphs(params.n)) {
    const int edges = std::popcount(mask);
    // Orientations in lexicographic order: first edge most significant.
    for (EdgeMask o = 0; o < (EdgeMask{1} << edges); ++o) {
      EdgeMask upper = 0;
      int k = 0;
      for (EdgeMask rest = mask; rest != 0; rest &= rest - 1, ++k) {
        if ((o >> (edges - 1 - k)) & 1U) upper |= rest & (~rest + 1);
      }
      const auto profile = idx.orient(mask, upper);
      if (is_nash(profile, params).is_nash) expected.push_back(profile);
    }
  }
  return expected;
}

}  // namespace

TEST_CASE("enumeration matches exhaustive is_nash") {
  for (const char* b : {"0", "0.3", "1.2"}) {
    for (const char* c : {"0.2", "0.6", "1", "1.4"}) {
      const GameParams params(4, q(b), q(c));
      const auto report = enumerate_nash(params);
      const auto expected = stable_orientations_by_brute_force(params);
      INFO("b=", b, " c=", c);
      CHECK(report.nash_profiles == expected);
      CHECK(report.nash_count == expected.size());
      for (const auto& p : report.nash_profiles) {
        CHECK(build_network(p).connected());
        CHECK_FALSE(p.has_double_initiation());
      }
    }
  }
  const GameParams five(5, q("0.2"), q("0.45"));
  CHECK(enumerate_nash(five).nash_profiles == stable_orientations_by_brute_force(five));
}

TEST_CASE("double initiation is never stable") {
  // Any profile with a doubly initiated link lets one side drop it.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    auto profile = oracle::random_connected_profile(n, rng, 0.4);
    const auto net = build_network(profile);
    const Player u = static_cast<Player>(rng() % static_cast<unsigned>(n));
    const Player v = *net.neighbors(u).begin();
    auto su = profile.strategy(u);
    su.insert(v);
    auto sv = profile.strategy(v);
    sv.insert(u);
    profile = profile.with_strategy(u, su).with_strategy(v, sv);
    const GameParams params(n, Rational(static_cast<std::int64_t>(rng() % 20), 10),
                            Rational(1 + static_cast<std::int64_t>(rng() % 20), 10));
    CHECK_FALSE(is_nash(profile, params).is_nash);
  }
}

TEST_CASE("best responses against a fixed rest are minimum dominating sets") {
  const Rational c = q("7/10");
  for (int rest_n = 1; rest_n <= 4; ++rest_n) {
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
      CHECK(best_response(profile, u, GameParams(n, 0, c)).strategies == expected);
    }
  }
}

TEST_CASE("price of anarchy and stability") {
  CHECK(*price_of_anarchy(GameParams(4, q("0.5"), q("1.5"))) == 1);
  CHECK(*price_of_anarchy(GameParams(5, 1, q("1.2"))) == q("17.5") / q("16.6"));
  for (int n : {4, 5}) {
    const GameParams p(n, Rational(1, 2 * n), Rational(1, n));
    CHECK(*price_of_stability(p) == 1);
  }
  // Ordered search agrees with the full report.
  for (const char* b : {"0.1", "0.5"}) {
    for (const char* c : {"0.3", "0.8"}) {
      const GameParams p(5, q(b), q(c));
      const auto r = enumerate_nash(p);
      CHECK(price_of_anarchy(p) == r.poa);
      CHECK(price_of_stability(p) == r.pos);
      if (r.poa) {
        CHECK(*r.poa >= 1);
        CHECK(*r.pos <= *r.poa);
        CHECK(*r.best_cost <= *r.worst_cost);
      }
      CHECK(r.optimum_cost == brute_force_optimum(p).cost);
      CHECK(r.optimum_cost == social_optimum(p).optimal_cost);
    }
  }
}

TEST_CASE("report serialises to JSON") {
  const auto report = enumerate_nash(GameParams(3, q("0.1"), q("1.5")));
  const auto doc = nlohmann::json::parse(report_to_json(report));
  CHECK(doc["params"]["b"] == "1/10");
  CHECK(doc["params"]["c"] == "3/2");
  CHECK(doc["nash"].size() == 8);
  CHECK(doc["poa"]["exact"] == "1");
  CHECK(doc["poa"]["decimal"] == 1.0);
  CHECK(parse_profile(doc["nash"][0].get<std::string>()) == report.nash_profiles.front());
  EquilibriumReport none;
  none.params = GameParams(3, 0, 1);
  none.optimum_cost = 3;
  CHECK(nlohmann::json::parse(report_to_json(none))["poa"].is_null());
}
