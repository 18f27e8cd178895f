#include "pcng/sweep.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pcng/equilibrium.hpp"

namespace pcng {

ExtRational DeviationCoefficients::evaluate(const Rational& b, const Rational& c) const {
  return ExtRational(Rational(d_links) + b * d_betweenness) + c * d_closeness;
}

HalfPlane DeviationCoefficients::as_half_plane(std::string provenance) const {
  return HalfPlane{Rational(d_links), d_betweenness, d_closeness.value(), std::move(provenance)};
}

DeviationCoefficients deviation_coefficients(const StrategyProfile& profile, Player u, PlayerSet new_strategy) {
  const PaymentNetwork before = build_network(profile);
  const PaymentNetwork after = build_network(profile.with_strategy(u, new_strategy));
  DeviationCoefficients out;
  out.d_links = new_strategy.size() - profile.strategy(u).size();
  out.d_betweenness = betweenness_cost(after, u) - betweenness_cost(before, u);
  const ExtRational close_before = closeness_cost(before, u);
  const ExtRational close_after = closeness_cost(after, u);
  if (close_before.is_infinite() || close_after.is_infinite()) {
    out.d_closeness = ExtRational::infinity();
  } else {
    out.d_closeness = close_after.value() - close_before.value();
  }
  return out;
}

bool ParameterMap::contains(const WeightPoint& p) const {
  if (empty) return false;
  return std::all_of(halfplanes.begin(), halfplanes.end(), [&](const HalfPlane& h) { return h.contains(p); });
}

std::vector<Player> representative_players(const TopologySpec& topology, int n) {
  switch (topology.kind) {
    case TopologyKind::Star: return {0, 1};
    case TopologyKind::Circle: return {0};
    case TopologyKind::Biclique: return {0, topology.r};
    default: break;
  }
  std::vector<Player> all(static_cast<std::size_t>(n));
  for (Player u = 0; u < n; ++u) all[static_cast<std::size_t>(u)] = u;
  return all;
}

ParameterMap ne_region(const TopologySpec& topology, int n, const RegionOptions& options) {
  if (n > options.max_n) {
    throw ResourceLimitError("region computation is capped at n=" + std::to_string(options.max_n));
  }
  const StrategyProfile profile = canonical_profile(topology, n);
  const PaymentNetwork base = build_network(profile);
  ParameterMap map;
  map.topology = topology;
  map.n = n;

  std::vector<Player> players;
  if (options.all_players) {
    for (Player u = 0; u < n; ++u) players.push_back(u);
  } else {
    players = representative_players(topology, n);
  }

  HalfPlaneSystem raw;
  for (Player u : players) {
    const Rational base_betweenness = betweenness_cost(base, u);
    const ExtRational base_closeness = closeness_cost(base, u);
    if (base_closeness.is_infinite()) {
      throw std::invalid_argument("topology leaves player " + std::to_string(u) + " disconnected");
    }
    const int base_links = profile.strategy(u).size();
    for_each_subset(PlayerSet::range(n) - PlayerSet{u}, [&](PlayerSet targets) {
      const PaymentNetwork after = build_network(profile.with_strategy(u, targets));
      const ExtRational closeness = closeness_cost(after, u);
      if (closeness.is_infinite()) return;  // cut off: infinitely worse
      DeviationCoefficients d;
      d.d_links = targets.size() - base_links;
      d.d_betweenness = betweenness_cost(after, u) - base_betweenness;
      d.d_closeness = closeness.value() - base_closeness.value();
      HalfPlane h = d.as_half_plane("player " + std::to_string(u) + ": " + profile.strategy(u).str() + " -> " +
                                    targets.str());
      if (!h.trivially_satisfied()) raw.push_back(std::move(h));
    });
  }
  map.raw_constraints = raw.size();
  map.halfplanes = prune(std::move(raw));
  map.empty = !feasible(map.halfplanes);
  return map;
}

void evaluate_grid(ParameterMap& map, const GridWindow& window) {
  if (window.resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
  if (!(window.lo.b < window.hi.b) || !(window.lo.c < window.hi.c)) throw std::invalid_argument("empty grid window");
  map.window = window;
  map.grid.clear();
  const Rational res(window.resolution);
  const Rational step_b = (window.hi.b - window.lo.b) / res;
  const Rational step_c = (window.hi.c - window.lo.c) / res;
  for (int j = 0; j < window.resolution; ++j) {
    const Rational c0 = window.lo.c + step_c * Rational(j);
    for (int i = 0; i < window.resolution; ++i) {
      const Rational b0 = window.lo.b + step_b * Rational(i);
      GridCell cell;
      cell.center = {b0 + step_b / 2, c0 + step_c / 2};
      cell.is_ne = map.contains(cell.center);
      const WeightPoint corners[4] = {{b0, c0}, {b0 + step_b, c0}, {b0, c0 + step_c}, {b0 + step_b, c0 + step_c}};
      for (const auto& h : map.halfplanes) {
        int pos = 0;
        int neg = 0;
        for (const auto& corner : corners) {
          const int s = h.eval(corner).sign();
          pos += s >= 0;
          neg += s <= 0;
        }
        if (pos > 0 && neg > 0) cell.boundary = true;
      }
      map.grid.push_back(cell);
    }
  }
  map.region_vertices = map.empty ? std::vector<WeightPoint>{} : clipped_polygon(map.halfplanes, window.lo, window.hi);
}

ParameterMap sweep_grid(const TopologySpec& topology, int n, const GridWindow& window, const RegionOptions& options) {
  ParameterMap map = ne_region(topology, n, options);
  evaluate_grid(map, window);
  return map;
}

void write_grid_csv(std::ostream& os, const ParameterMap& map) {
  os << "b,c,is_ne\n";
  std::ostringstream line;
  line << std::setprecision(10);
  for (const auto& cell : map.grid) {
    line.str("");
    line << cell.center.b.to_double() << ',' << cell.center.c.to_double() << ',' << (cell.is_ne ? 1 : 0) << '\n';
    os << line.str();
  }
}

void write_region_file(std::ostream& os, const ParameterMap& map) {
  os << "# topology " << map.topology.name() << " n=" << map.n << "\n";
  os << "# region " << (map.empty ? "empty" : "non-empty") << "\n";
  for (const auto& h : map.halfplanes) os << h.str() << " # " << h.provenance << "\n";
  if (!map.region_vertices.empty()) {
    os << "vertices:\n";
    for (const auto& v : map.region_vertices) os << v.b.str() << "," << v.c.str() << "\n";
  }
}

}  // namespace pcng
