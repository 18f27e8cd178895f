#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcng/game.hpp"
#include "pcng/region.hpp"

namespace pcng {

enum class TopologyKind { Complete, Star, Path, Circle, Biclique, Custom };

/// A named topology together with its link-ownership convention.
///
/// Canonical orientations:
///   complete  every player initiates links to all higher ids
///   star      player 0 is the centre and initiates every link
///   path      0 - 1 - ... - n-1; links are initiated by the endpoint nearer
///             the middle (the lower one on the middle edge); endpoints own none
///   circle    player i initiates the link to (i + 1) mod n
///   biclique  players 0..r-1 form the smaller side and initiate all r*s links
struct TopologySpec {
  TopologyKind kind = TopologyKind::Complete;
  int r = 0;  ///< biclique smaller side
  int s = 0;  ///< biclique larger side
  std::optional<StrategyProfile> custom;

  static TopologySpec of(TopologyKind kind) {
    TopologySpec out;
    out.kind = kind;
    return out;
  }
  static TopologySpec complete() { return of(TopologyKind::Complete); }
  static TopologySpec star() { return of(TopologyKind::Star); }
  static TopologySpec path() { return of(TopologyKind::Path); }
  static TopologySpec circle() { return of(TopologyKind::Circle); }
  /// Requires 1 <= r <= s.
  static TopologySpec biclique(int r, int s);
  static TopologySpec from_profile(StrategyProfile profile);

  /// Accepts complete, star, path, circle, biclique:<r>:<s> and custom:<file>.
  static TopologySpec parse(const std::string& text);
  [[nodiscard]] std::string name() const;

  /// Player count implied by the topology, if fixed (biclique, custom).
  [[nodiscard]] std::optional<int> fixed_size() const;
};

/// Canonical profile of the topology on n players. Throws std::invalid_argument
/// if n does not fit the kind.
StrategyProfile canonical_profile(const TopologySpec& topology, int n);

enum class OptimumKind { Complete, Star, Path };

std::string to_string(OptimumKind kind);

struct OptimumReport {
  /// Every optimal class; two entries exactly on c = b or c = 1/2 + b.
  std::vector<OptimumKind> optimal_kinds;
  Rational optimal_cost;
  bool on_complete_star_boundary = false;  ///< c == 1/2 + b
  bool on_star_path_boundary = false;      ///< c == b
};

/// Social cost of the complete graph, star and path without double links.
Rational complete_social_cost(const GameParams& params);
Rational star_social_cost(const GameParams& params);
Rational path_social_cost(const GameParams& params);

OptimumReport social_optimum(const GameParams& params);

enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict verdict);

struct NEVerdict {
  Verdict verdict = Verdict::Unknown;
  /// Conditions whose conjunction is the equilibrium region; empty when the
  /// topology is never (or, for Unknown, not known to be) an equilibrium.
  HalfPlaneSystem binding_inequalities;
  std::string note;
};

/// Closed-form equilibrium region of the canonical topology on n players, or
/// nullopt where no closed form is known. "Never stable" is returned as the
/// infeasible system {-1 >= 0}.
std::optional<HalfPlaneSystem> closed_form_region(const TopologySpec& topology, int n);

/// The stability conditions of the canonical topology, evaluated exactly.
NEVerdict ne_predicate(const TopologySpec& topology, const GameParams& params);

/// Rational coefficients of the biclique stability conditions (3 <= r <= s).
Rational biclique_alpha(int r, int s);
Rational biclique_beta(int r, int s);
/// Intersection of (s/r) b + ((s+r-3)/(s-1)) c = 1 with min(alpha, beta) b + c = 1.
std::optional<WeightPoint> biclique_corner(int r, int s);

struct EntringerBounds {
  std::int64_t lower;  ///< n(n-1)
  Rational upper;      ///< (n^3 + 5n - 6) / 6, attained by the path
};

/// Bounds on d(G) + |E(G)| over connected graphs with n vertices.
EntringerBounds entringer_bounds(int n);

}  // namespace pcng
