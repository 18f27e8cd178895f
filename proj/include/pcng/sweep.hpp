#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "pcng/closed_form.hpp"
#include "pcng/game.hpp"
#include "pcng/region.hpp"

namespace pcng {

/// Cost change of one fixed deviation as an affine function of (b, c):
/// delta(b, c) = d_links + b * d_betweenness + c * d_closeness.
struct DeviationCoefficients {
  int d_links = 0;
  Rational d_betweenness;
  ExtRational d_closeness;  ///< infinite when either side leaves the player cut off

  [[nodiscard]] ExtRational evaluate(const Rational& b, const Rational& c) const;
  /// delta >= 0 as a half-plane; only meaningful for finite d_closeness.
  [[nodiscard]] HalfPlane as_half_plane(std::string provenance) const;
};

DeviationCoefficients deviation_coefficients(const StrategyProfile& profile, Player u, PlayerSet new_strategy);

inline constexpr int kDefaultRegionCap = 16;

struct RegionOptions {
  /// Enumerate every player instead of one representative per symmetry class.
  bool all_players = false;
  int max_n = kDefaultRegionCap;
};

struct GridWindow {
  WeightPoint lo{0, 0};
  WeightPoint hi{Rational(3, 2), Rational(3, 2)};
  int resolution = 100;  ///< cells per axis
};

struct GridCell {
  WeightPoint center;
  bool is_ne = false;
  bool boundary = false;  ///< some boundary line touches the cell
};

struct ParameterMap {
  TopologySpec topology;
  int n = 0;
  HalfPlaneSystem halfplanes;  ///< pruned; their intersection is the region
  std::size_t raw_constraints = 0;
  bool empty = false;  ///< no (b, c) with b >= 0, c > 0 is stable

  std::optional<GridWindow> window;
  std::vector<GridCell> grid;  ///< row-major, c outer, b inner
  std::vector<WeightPoint> region_vertices;

  [[nodiscard]] bool contains(const WeightPoint& p) const;
};

/// Players whose deviations are enumerated for the canonical topology. One per
/// orbit of the automorphisms preserving ownership: star {centre, a leaf};
/// circle {0} (rotations); biclique {a smaller-side, a larger-side player};
/// everyone otherwise.
std::vector<Player> representative_players(const TopologySpec& topology, int n);

/// Exact equilibrium region of the canonical topology: every deviation of
/// every representative player becomes delta >= 0, then the system is pruned.
ParameterMap ne_region(const TopologySpec& topology, int n, const RegionOptions& options = {});

/// ne_region plus a grid evaluated at cell centres and the clipped polygon.
ParameterMap sweep_grid(const TopologySpec& topology, int n, const GridWindow& window,
                        const RegionOptions& options = {});

/// Adds grid and polygon for `window` to an existing region.
void evaluate_grid(ParameterMap& map, const GridWindow& window);

/// "b,c,is_ne" header then one row per cell.
void write_grid_csv(std::ostream& os, const ParameterMap& map);
/// Half-planes "a0 + a1*b + a2*c >= 0 # provenance", then polygon vertices.
void write_region_file(std::ostream& os, const ParameterMap& map);

}  // namespace pcng
