#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pcng/closed_form.hpp"
#include "pcng/dynamics.hpp"
#include "pcng/equilibrium.hpp"
#include "pcng/game.hpp"
#include "pcng/profile_io.hpp"
#include "pcng/sweep.hpp"

namespace py = pybind11;
using namespace pcng;

// Weights cross the boundary as exact strings ("p/q" or decimals); results come
// back as strings too, with None standing for +infinity.

namespace {

using Strategies = std::vector<std::vector<int>>;

StrategyProfile to_profile(const Strategies& strategies) {
  std::vector<PlayerSet> sets;
  for (const auto& targets : strategies) {
    PlayerSet s;
    for (int v : targets) {
      if (v < 0 || v >= static_cast<int>(strategies.size())) throw std::invalid_argument("target out of range");
      s.insert(v);
    }
    sets.push_back(s);
  }
  return StrategyProfile(std::move(sets));
}

Strategies from_profile(const StrategyProfile& profile) {
  Strategies out;
  for (const auto& s : profile.strategies()) out.push_back(s.to_vector());
  return out;
}

GameParams params_of(int n, const std::string& b, const std::string& c) {
  return GameParams(n, Rational::parse(b), Rational::parse(c));
}

py::object ext(const ExtRational& value) {
  if (value.is_infinite()) return py::none();
  return py::str(value.value().str());
}

py::object opt(const std::optional<Rational>& value) {
  if (!value) return py::none();
  return py::str(value->str());
}

py::dict witness_dict(const DeviationWitness& w) {
  py::dict d;
  d["player"] = w.player;
  d["old_strategy"] = w.old_strategy.to_vector();
  d["new_strategy"] = w.new_strategy.to_vector();
  d["delta"] = opt(w.delta);
  return d;
}

py::list halfplanes(const HalfPlaneSystem& system) {
  py::list out;
  for (const auto& h : system) out.append(py::make_tuple(h.a0.str(), h.a1.str(), h.a2.str(), h.provenance));
  return out;
}

}  // namespace

PYBIND11_MODULE(_pcng, m) {
  m.doc() = "Exact core of the payment channel network creation game";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError");
  py::register_exception<RationalOverflow>(m, "RationalOverflow", PyExc_OverflowError);
  py::register_exception<ParseError>(m, "ProfileParseError", PyExc_ValueError);

  m.def("parse_profile", [](const std::string& text) { return from_profile(parse_profile(text)); });
  m.def("format_profile", [](const Strategies& s) { return format_profile(to_profile(s)); });

  m.def("player_cost", [](const Strategies& s, int u, const std::string& b, const std::string& c) {
    const auto profile = to_profile(s);
    const auto cost = player_cost(profile, u, params_of(profile.n(), b, c));
    py::dict d;
    d["links"] = cost.link_cost;
    d["betweenness"] = cost.betweenness_term.str();
    d["closeness"] = ext(cost.closeness_term);
    d["total"] = ext(cost.total);
    return d;
  });

  m.def("social_cost", [](const Strategies& s, const std::string& b, const std::string& c) {
    const auto profile = to_profile(s);
    return ext(social_cost(profile, params_of(profile.n(), b, c)));
  });

  m.def("freeman_betweenness", [](const Strategies& s, int u) {
    return freeman_betweenness(build_network(to_profile(s)), u).str();
  });

  m.def("social_optimum", [](int n, const std::string& b, const std::string& c) {
    const auto r = social_optimum(params_of(n, b, c));
    py::list kinds;
    for (auto k : r.optimal_kinds) kinds.append(to_string(k));
    return py::make_tuple(kinds, r.optimal_cost.str());
  });

  m.def("canonical_profile", [](const std::string& topology, int n) {
    return from_profile(canonical_profile(TopologySpec::parse(topology), n));
  });

  m.def("ne_predicate", [](const std::string& topology, int n, const std::string& b, const std::string& c) {
    const auto v = ne_predicate(TopologySpec::parse(topology), params_of(n, b, c));
    return py::make_tuple(to_string(v.verdict), halfplanes(v.binding_inequalities), v.note);
  });

  m.def("best_response", [](const Strategies& s, int u, const std::string& b, const std::string& c) {
    const auto profile = to_profile(s);
    const auto params = params_of(profile.n(), b, c);
    BestResponse r;
    {
      py::gil_scoped_release release;
      r = best_response(profile, u, params);
    }
    py::list strategies;
    for (const auto& t : r.strategies) strategies.append(t.to_vector());
    return py::make_tuple(strategies, ext(r.cost));
  });

  m.def("is_nash", [](const Strategies& s, const std::string& b, const std::string& c) {
    const auto profile = to_profile(s);
    const auto params = params_of(profile.n(), b, c);
    NashCheck r;
    {
      py::gil_scoped_release release;
      r = is_nash(profile, params);
    }
    return py::make_tuple(r.is_nash, r.witness ? py::object(witness_dict(*r.witness)) : py::none());
  });

  m.def(
      "enumerate_nash",
      [](int n, const std::string& b, const std::string& c, bool dedup, int max_n, int threads) {
        EnumerationOptions o;
        o.dedup_isomorphic = dedup;
        o.max_n = max_n;
        o.threads = threads;
        const auto params = params_of(n, b, c);
        py::gil_scoped_release release;
        return report_to_json(enumerate_nash(params, o));
      },
      py::arg("n"), py::arg("b"), py::arg("c"), py::arg("dedup") = false, py::arg("max_n") = kDefaultEnumerationCap,
      py::arg("threads") = 0);

  m.def(
      "price_of_anarchy",
      [](int n, const std::string& b, const std::string& c, int max_n) {
        EnumerationOptions o;
        o.max_n = max_n;
        const auto params = params_of(n, b, c);
        std::optional<Rational> poa;
        std::optional<Rational> pos;
        {
          py::gil_scoped_release release;
          poa = price_of_anarchy(params, o);
          pos = price_of_stability(params, o);
        }
        return py::make_tuple(opt(poa), opt(pos));
      },
      py::arg("n"), py::arg("b"), py::arg("c"), py::arg("max_n") = kDefaultEnumerationCap);

  m.def(
      "ne_region",
      [](const std::string& topology, int n, bool all_players) {
        RegionOptions o;
        o.all_players = all_players;
        const auto map = ne_region(TopologySpec::parse(topology), n, o);
        return py::make_tuple(halfplanes(map.halfplanes), map.empty);
      },
      py::arg("topology"), py::arg("n"), py::arg("all_players") = false);

  m.def(
      "sweep",
      [](const std::string& topology, int n, const std::string& b_max, const std::string& c_max, int resolution) {
        GridWindow w;
        w.hi = {Rational::parse(b_max), Rational::parse(c_max)};
        w.resolution = resolution;
        const auto map = sweep_grid(TopologySpec::parse(topology), n, w);
        std::ostringstream csv;
        write_grid_csv(csv, map);
        py::list vertices;
        for (const auto& v : map.region_vertices) vertices.append(py::make_tuple(v.b.str(), v.c.str()));
        return py::make_tuple(csv.str(), vertices);
      },
      py::arg("topology"), py::arg("n"), py::arg("b_max") = "3/2", py::arg("c_max") = "3/2",
      py::arg("resolution") = 100);

  m.def(
      "run_dynamics",
      [](const Strategies& s, const std::string& b, const std::string& c, const std::string& schedule,
         std::uint64_t seed, std::size_t max_iters) {
        const auto profile = to_profile(s);
        const auto t = run(profile, params_of(profile.n(), b, c), Schedule::parse(schedule, seed), max_iters);
        py::list steps;
        for (const auto& st : t.steps) {
          steps.append(py::make_tuple(st.player, st.old_strategy.to_vector(), st.new_strategy.to_vector(),
                                      opt(st.delta)));
        }
        return py::make_tuple(steps, to_string(t.outcome), from_profile(t.final_profile));
      },
      py::arg("profile"), py::arg("b"), py::arg("c"), py::arg("schedule") = "round-robin", py::arg("seed") = 0,
      py::arg("max_iters") = 1000);
}
