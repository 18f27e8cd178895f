#include "pcng/region.hpp"

#include <algorithm>

namespace pcng {
namespace {

struct Direction {
  Rational db;
  Rational dc;
};

const HalfPlane kBNonNegative{0, 1, 0, "b >= 0"};
const HalfPlane kCNonNegative{0, 0, 1, "c >= 0"};

bool satisfies_all(const HalfPlaneSystem& system, const WeightPoint& p) {
  return std::all_of(system.begin(), system.end(), [&](const HalfPlane& h) { return h.contains(p); });
}

// Vertices of {system, b >= 0, c >= 0}. The quadrant is pointed, so a
// non-empty region always has at least one.
std::vector<WeightPoint> quadrant_vertices(const HalfPlaneSystem& system) {
  HalfPlaneSystem lines = system;
  lines.push_back(kBNonNegative);
  lines.push_back(kCNonNegative);
  HalfPlaneSystem all = lines;
  std::vector<WeightPoint> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto p = line_intersection(lines[i], lines[j]);
      if (!p || !satisfies_all(all, *p)) continue;
      if (std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
    }
  }
  return out;
}

bool in_recession_cone(const HalfPlaneSystem& system, const Direction& d) {
  return std::all_of(system.begin(), system.end(),
                     [&](const HalfPlane& h) { return (h.a1 * d.db + h.a2 * d.dc).sign() >= 0; });
}

// Extreme rays of {d >= 0 : a1*db + a2*dc >= 0 for all constraints}.
std::vector<Direction> recession_rays(const HalfPlaneSystem& system) {
  std::vector<Direction> candidates{{1, 0}, {0, 1}};
  for (const auto& h : system) {
    if (h.a1.sign() == 0 && h.a2.sign() == 0) continue;
    for (const Direction d : {Direction{h.a2, -h.a1}, Direction{-h.a2, h.a1}}) {
      if (d.db.sign() >= 0 && d.dc.sign() >= 0) candidates.push_back(d);
    }
  }
  std::vector<Direction> out;
  for (const auto& d : candidates) {
    if (in_recession_cone(system, d)) out.push_back(d);
  }
  return out;
}

}  // namespace

HalfPlane HalfPlane::normalized() const {
  Rational scale = std::max({abs(a0), abs(a1), abs(a2)});
  if (scale.sign() == 0) return *this;
  return HalfPlane{a0 / scale, a1 / scale, a2 / scale, provenance};
}

bool HalfPlane::trivially_satisfied() const { return a0.sign() >= 0 && a1.sign() >= 0 && a2.sign() >= 0; }

std::string HalfPlane::str() const {
  return a0.str() + " + " + a1.str() + "*b + " + a2.str() + "*c >= 0";
}

std::optional<WeightPoint> line_intersection(const HalfPlane& a, const HalfPlane& b) {
  // a1*x + a2*y = -a0, b1*x + b2*y = -b0
  const Rational det = a.a1 * b.a2 - a.a2 * b.a1;
  if (det.sign() == 0) return std::nullopt;
  const Rational x = (-a.a0 * b.a2 + a.a2 * b.a0) / det;
  const Rational y = (-a.a1 * b.a0 + a.a0 * b.a1) / det;
  return WeightPoint{x, y};
}

bool dominates(const HalfPlane& a, const HalfPlane& b) {
  // Need lambda > 0 with b - lambda*a >= 0 coefficient-wise.
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  const Rational ca[3] = {a.a0, a.a1, a.a2};
  const Rational cb[3] = {b.a0, b.a1, b.a2};
  for (int i = 0; i < 3; ++i) {
    const int s = ca[i].sign();
    if (s == 0) {
      if (cb[i].sign() < 0) return false;
      continue;
    }
    const Rational ratio = cb[i] / ca[i];
    if (s > 0) {
      upper = upper ? std::min(*upper, ratio) : ratio;
    } else {
      lower = lower ? std::max(*lower, ratio) : ratio;
    }
  }
  if (!upper) return true;
  return upper->sign() > 0 && (!lower || *upper >= *lower);
}

bool implies(const HalfPlaneSystem& system, const HalfPlane& h) {
  const auto vertices = quadrant_vertices(system);
  if (vertices.empty()) return true;
  for (const auto& v : vertices) {
    if (!h.contains(v)) return false;
  }
  for (const auto& d : recession_rays(system)) {
    if ((h.a1 * d.db + h.a2 * d.dc).sign() < 0) return false;
  }
  return true;
}

bool feasible(const HalfPlaneSystem& system) {
  const auto vertices = quadrant_vertices(system);
  if (vertices.empty()) return false;
  if (std::any_of(vertices.begin(), vertices.end(), [](const WeightPoint& p) { return p.c.sign() > 0; })) return true;
  const auto rays = recession_rays(system);
  return std::any_of(rays.begin(), rays.end(), [](const Direction& d) { return d.dc.sign() > 0; });
}

HalfPlaneSystem prune(HalfPlaneSystem system) {
  std::erase_if(system, [](const HalfPlane& h) { return h.trivially_satisfied(); });

  HalfPlaneSystem unique;
  for (const auto& h : system) {
    const HalfPlane n = h.normalized();
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const HalfPlane& u) {
      return u.normalized().same_coefficients(n);
    });
    if (!seen) unique.push_back(h);
  }

  std::vector<bool> dropped(unique.size(), false);
  for (std::size_t j = 0; j < unique.size(); ++j) {
    for (std::size_t i = 0; i < unique.size() && !dropped[j]; ++i) {
      if (i == j || dropped[i]) continue;
      if (dominates(unique[i], unique[j])) dropped[j] = true;
    }
  }
  HalfPlaneSystem kept;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    if (!dropped[i]) kept.push_back(unique[i]);
  }

  for (std::size_t i = 0; i < kept.size();) {
    HalfPlaneSystem rest = kept;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (implies(rest, kept[i])) {
      kept = std::move(rest);
    } else {
      ++i;
    }
  }
  return kept;
}

bool equivalent(const HalfPlaneSystem& a, const HalfPlaneSystem& b) {
  const bool fa = feasible(a);
  const bool fb = feasible(b);
  if (!fa || !fb) return fa == fb;
  return std::all_of(b.begin(), b.end(), [&](const HalfPlane& h) { return implies(a, h); }) &&
         std::all_of(a.begin(), a.end(), [&](const HalfPlane& h) { return implies(b, h); });
}

std::vector<WeightPoint> clipped_polygon(const HalfPlaneSystem& system, const WeightPoint& lo, const WeightPoint& hi) {
  HalfPlaneSystem all = system;
  all.push_back({-lo.b, 1, 0, "window"});
  all.push_back({hi.b, -1, 0, "window"});
  all.push_back({-lo.c, 0, 1, "window"});
  all.push_back({hi.c, 0, -1, "window"});
  std::vector<WeightPoint> pts;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const auto p = line_intersection(all[i], all[j]);
      if (!p || !satisfies_all(all, *p)) continue;
      if (std::find(pts.begin(), pts.end(), *p) == pts.end()) pts.push_back(*p);
    }
  }
  if (pts.size() < 3) return pts;

  // Order around the centroid by angle, using exact quadrant + cross products.
  Rational cb;
  Rational cc;
  for (const auto& p : pts) {
    cb += p.b;
    cc += p.c;
  }
  const Rational count(static_cast<std::int64_t>(pts.size()));
  cb /= count;
  cc /= count;
  auto half = [&](const WeightPoint& p) {
    const Rational x = p.b - cb;
    const Rational y = p.c - cc;
    return (y.sign() < 0 || (y.sign() == 0 && x.sign() < 0)) ? 1 : 0;
  };
  std::sort(pts.begin(), pts.end(), [&](const WeightPoint& p, const WeightPoint& q) {
    const int hp = half(p);
    const int hq = half(q);
    if (hp != hq) return hp < hq;
    const Rational cross = (p.b - cb) * (q.c - cc) - (p.c - cc) * (q.b - cb);
    return cross.sign() > 0;
  });
  // Drop points that sit in the middle of an edge.
  std::vector<WeightPoint> out;
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& prev = pts[(i + m - 1) % m];
    const auto& cur = pts[i];
    const auto& next = pts[(i + 1) % m];
    const Rational cross = (cur.b - prev.b) * (next.c - cur.c) - (cur.c - prev.c) * (next.b - cur.b);
    if (cross.sign() != 0) out.push_back(cur);
  }
  return out;
}

}  // namespace pcng
