#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcng/rational.hpp"

namespace pcng {

/// Point in the (b, c) weight plane.
struct WeightPoint {
  Rational b;
  Rational c;
  friend bool operator==(const WeightPoint&, const WeightPoint&) = default;
};

/// Closed half-plane a0 + a1*b + a2*c >= 0 in the (b, c) plane.
struct HalfPlane {
  Rational a0;
  Rational a1;
  Rational a2;
  std::string provenance;

  [[nodiscard]] Rational eval(const WeightPoint& p) const { return a0 + a1 * p.b + a2 * p.c; }
  [[nodiscard]] bool contains(const WeightPoint& p) const { return eval(p).sign() >= 0; }
  /// Scaled so the largest |coefficient| is 1; provenance kept.
  [[nodiscard]] HalfPlane normalized() const;
  /// Satisfied everywhere on b >= 0, c >= 0.
  [[nodiscard]] bool trivially_satisfied() const;
  /// "a0 + a1*b + a2*c >= 0" with exact fractions.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] bool same_coefficients(const HalfPlane& other) const {
    return a0 == other.a0 && a1 == other.a1 && a2 == other.a2;
  }
};

using HalfPlaneSystem = std::vector<HalfPlane>;

// All region queries work on the weight domain b >= 0, c >= 0. Feasibility
// additionally requires c > 0, matching the game's strict closeness weight.

/// True when `a` >= 0 forces `b` >= 0 through a positive multiple alone.
bool dominates(const HalfPlane& a, const HalfPlane& b);

/// True when every domain point satisfying `system` also satisfies `h`.
bool implies(const HalfPlaneSystem& system, const HalfPlane& h);

/// True when some point with b >= 0, c > 0 satisfies the whole system.
bool feasible(const HalfPlaneSystem& system);

/// Drops trivially satisfied, duplicated, pairwise dominated and finally all
/// remaining redundant half-planes. Survivors keep their input order.
HalfPlaneSystem prune(HalfPlaneSystem system);

/// Same feasible set on b >= 0, c > 0.
bool equivalent(const HalfPlaneSystem& a, const HalfPlaneSystem& b);

/// Corners of the region clipped to [b_lo, b_hi] x [c_lo, c_hi], in
/// counter-clockwise order. Empty when the clipped region is empty.
std::vector<WeightPoint> clipped_polygon(const HalfPlaneSystem& system, const WeightPoint& lo, const WeightPoint& hi);

/// Intersection of the lines a0 + a1*b + a2*c = 0 of two half-planes.
std::optional<WeightPoint> line_intersection(const HalfPlane& a, const HalfPlane& b);

}  // namespace pcng
