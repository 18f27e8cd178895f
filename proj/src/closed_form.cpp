#include "pcng/closed_form.hpp"

#include <algorithm>
#include <stdexcept>

#include "pcng/profile_io.hpp"

namespace pcng {
namespace {

int parse_positive(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 1) throw std::invalid_argument("bad " + what + " '" + text + "'");
  return value;
}

HalfPlaneSystem never(const std::string& why) { return {HalfPlane{-1, 0, 0, why}}; }

}  // namespace

TopologySpec TopologySpec::biclique(int r, int s) {
  if (r < 1 || s < r) throw std::invalid_argument("biclique needs 1 <= r <= s");
  TopologySpec out = of(TopologyKind::Biclique);
  out.r = r;
  out.s = s;
  return out;
}

TopologySpec TopologySpec::from_profile(StrategyProfile profile) {
  TopologySpec out = of(TopologyKind::Custom);
  out.custom = std::move(profile);
  return out;
}

TopologySpec TopologySpec::parse(const std::string& text) {
  if (text == "complete") return complete();
  if (text == "star") return star();
  if (text == "path") return path();
  if (text == "circle") return circle();
  if (text.rfind("biclique:", 0) == 0) {
    const auto rest = text.substr(9);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected biclique:<r>:<s>");
    return biclique(parse_positive(rest.substr(0, colon), "biclique r"),
                    parse_positive(rest.substr(colon + 1), "biclique s"));
  }
  if (text.rfind("custom:", 0) == 0) return from_profile(read_profile_file(text.substr(7)));
  throw std::invalid_argument("unknown topology '" + text + "'");
}

std::string TopologySpec::name() const {
  switch (kind) {
    case TopologyKind::Complete: return "complete";
    case TopologyKind::Star: return "star";
    case TopologyKind::Path: return "path";
    case TopologyKind::Circle: return "circle";
    case TopologyKind::Biclique: return "biclique:" + std::to_string(r) + ":" + std::to_string(s);
    case TopologyKind::Custom: return "custom";
  }
  return "?";
}

std::optional<int> TopologySpec::fixed_size() const {
  if (kind == TopologyKind::Biclique) return r + s;
  if (kind == TopologyKind::Custom && custom) return custom->n();
  return std::nullopt;
}

StrategyProfile canonical_profile(const TopologySpec& topology, int n) {
  if (const auto size = topology.fixed_size(); size && *size != n) {
    throw std::invalid_argument(topology.name() + " has " + std::to_string(*size) + " players, not " +
                                std::to_string(n));
  }
  if (n < 2 || n > kMaxPlayers) throw std::invalid_argument("player count out of range");
  std::vector<PlayerSet> s(static_cast<std::size_t>(n));
  auto at = [&](Player u) -> PlayerSet& { return s[static_cast<std::size_t>(u)]; };
  switch (topology.kind) {
    case TopologyKind::Complete:
      for (Player u = 0; u < n; ++u) at(u) = PlayerSet::range(n) - PlayerSet::range(u + 1);
      break;
    case TopologyKind::Star:
      at(0) = PlayerSet::range(n) - PlayerSet{0};
      break;
    case TopologyKind::Path:
      for (Player i = 0; i + 1 < n; ++i) {
        if (2 * (i + 1) <= n - 1) {
          at(i + 1).insert(i);
        } else {
          at(i).insert(i + 1);
        }
      }
      break;
    case TopologyKind::Circle:
      if (n < 3) throw std::invalid_argument("circle needs at least 3 players");
      for (Player i = 0; i < n; ++i) at(i).insert((i + 1) % n);
      break;
    case TopologyKind::Biclique:
      for (Player u = 0; u < topology.r; ++u) at(u) = PlayerSet::range(n) - PlayerSet::range(topology.r);
      break;
    case TopologyKind::Custom:
      return *topology.custom;
  }
  return StrategyProfile(std::move(s));
}

std::string to_string(OptimumKind kind) {
  switch (kind) {
    case OptimumKind::Complete: return "complete";
    case OptimumKind::Star: return "star";
    case OptimumKind::Path: return "path";
  }
  return "?";
}

Rational complete_social_cost(const GameParams& p) {
  const Rational n(p.n);
  return (Rational(1, 2) + (n - 2) * p.b) * n * (n - 1);
}

Rational star_social_cost(const GameParams& p) {
  const Rational n(p.n);
  return (1 + (p.c + p.b * (n - 1)) * (n - 2)) * (n - 1);
}

Rational path_social_cost(const GameParams& p) {
  const Rational n(p.n);
  return (1 + (Rational(2, 3) * p.b + Rational(1, 3) * p.c) * n * (n - 2)) * (n - 1);
}

OptimumReport social_optimum(const GameParams& params) {
  OptimumReport out;
  const Rational upper = Rational(1, 2) + params.b;
  out.on_complete_star_boundary = params.c == upper;
  out.on_star_path_boundary = params.c == params.b;
  if (params.c >= upper) out.optimal_kinds.push_back(OptimumKind::Complete);
  if (params.b <= params.c && params.c <= upper) out.optimal_kinds.push_back(OptimumKind::Star);
  if (params.c <= params.b) out.optimal_kinds.push_back(OptimumKind::Path);
  switch (out.optimal_kinds.front()) {
    case OptimumKind::Complete: out.optimal_cost = complete_social_cost(params); break;
    case OptimumKind::Star: out.optimal_cost = star_social_cost(params); break;
    case OptimumKind::Path: out.optimal_cost = path_social_cost(params); break;
  }
  return out;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

Rational biclique_alpha(int r, int s) { return Rational(std::int64_t{s} * (s - 1), std::int64_t{r} * (s - 2)); }

Rational biclique_beta(int r, int s) {
  return (Rational(std::int64_t{s} * (s - 1), r) - Rational(std::int64_t{r - 2} * (r - 1), s + 1)) /
         Rational(s - r + 1);
}

std::optional<WeightPoint> biclique_corner(int r, int s) {
  const HalfPlane first{-1, Rational(s, r), Rational(s + r - 3, s - 1), ""};
  const HalfPlane second{-1, std::min(biclique_alpha(r, s), biclique_beta(r, s)), 1, ""};
  return line_intersection(first, second);
}

std::optional<HalfPlaneSystem> closed_form_region(const TopologySpec& topology, int n) {
  const Rational nr(n);
  switch (topology.kind) {
    case TopologyKind::Complete:
      if (n < 3) return std::nullopt;
      return HalfPlaneSystem{{-1, 0, 1, "complete: dropping a link saves 1 and costs c"}};
    case TopologyKind::Path:
      if (n == 3) return HalfPlaneSystem{{1, 0, -1, "path n=3: endpoint shortcut, 1 - c >= 0"}};
      if (n == 4) return HalfPlaneSystem{{1, -1, -2, "path n=4: endpoint shortcut, 1 - b - 2c >= 0"}};
      if (n == 5) return HalfPlaneSystem{{1, -2, -4, "path n=5: endpoint shortcut, 1 - 2b - 4c >= 0"}};
      if (n >= 6) return never("path n>=6: redirecting an inner link always helps");
      return std::nullopt;
    case TopologyKind::Circle:
      if (n == 3) return closed_form_region(TopologySpec::complete(), 3);
      if (n == 4) {
        return HalfPlaneSystem{{1, 0, -1, "circle n=4: chord, 1 - c >= 0"},
                               {-1, 1, 2, "circle n=4: drop a link, -1 + b + 2c >= 0"}};
      }
      if (n == 5) {
        return HalfPlaneSystem{{1, -1, -1, "circle n=5: chords, 1 - b - c >= 0"},
                               {-1, 2, 4, "circle n=5: drop a link, -1 + 2b + 4c >= 0"}};
      }
      if (n >= 6) return never("circle n>=6: never stable (asymptotic argument, confirmed exhaustively from n=6)");
      return std::nullopt;
    case TopologyKind::Star:
      if (n == 3) return closed_form_region(TopologySpec::path(), 3);
      if (n < 4) return std::nullopt;
      return HalfPlaneSystem{{1, -(nr - 3) / 2, -1, "star: leaf links to all other leaves, 1 - (n-3)/2 b - c >= 0"}};
    case TopologyKind::Biclique: {
      const int r = topology.r;
      const int s = topology.s;
      if (r < 3 || n != r + s) return std::nullopt;
      return HalfPlaneSystem{
          {1, -Rational(s - 2, r + 1), -1, "biclique: links inside the smaller side, (s-2)/(r+1) b + c <= 1"},
          {-1, Rational(s, r), Rational(s + r - 3, s - 1), "biclique: rewire to one peer, 1 <= (s/r) b + (s+r-3)/(s-1) c"},
          {-1, std::min(biclique_alpha(r, s), biclique_beta(r, s)), 1,
           "biclique: rewire to peers, 1 <= min(alpha, beta) b + c"}};
    }
    case TopologyKind::Custom:
      return std::nullopt;
  }
  return std::nullopt;
}

NEVerdict ne_predicate(const TopologySpec& topology, const GameParams& params) {
  NEVerdict out;
  const auto region = closed_form_region(topology, params.n);
  if (!region) {
    out.note = "no closed form for " + topology.name() + " with n=" + std::to_string(params.n);
    return out;
  }
  const WeightPoint p{params.b, params.c};
  const bool holds = std::all_of(region->begin(), region->end(), [&](const HalfPlane& h) { return h.contains(p); });
  out.verdict = holds ? Verdict::Yes : Verdict::No;
  if (feasible(*region)) {
    out.binding_inequalities = *region;
  } else {
    out.note = region->front().provenance;
  }
  if (topology.kind == TopologyKind::Complete && params.c == 1) {
    out.note = "complete graph is stable at c = 1 but need not be the only equilibrium";
  }
  return out;
}

EntringerBounds entringer_bounds(int n) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  const std::int64_t m = n;
  return {m * (m - 1), Rational(m * m * m + 5 * m - 6, 6)};
}

}  // namespace pcng
