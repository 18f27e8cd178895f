#pragma once

#include <cstdint>
#include <vector>

#include "pcng/player_set.hpp"
#include "pcng/rational.hpp"

namespace pcng {

/// Player count and the two cost weights.
struct GameParams {
  int n = 2;
  Rational b;      ///< betweenness weight, b >= 0
  Rational c = 1;  ///< closeness weight, c > 0

  GameParams() = default;
  /// Throws std::invalid_argument unless n >= 2, b >= 0 and c > 0.
  GameParams(int n, Rational b, Rational c);
};

/// Every player's set of initiated channels. Entry u is s_u.
///
/// Immutable once built; the only way to change a strategy is to copy with
/// with_strategy(). Channels initiated by both endpoints are legal and are
/// paid for twice.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  /// Throws std::invalid_argument on self-links or out-of-range targets.
  explicit StrategyProfile(std::vector<PlayerSet> strategies);
  /// Empty profile on n players.
  static StrategyProfile empty(int n);

  [[nodiscard]] int n() const { return static_cast<int>(strategies_.size()); }
  [[nodiscard]] PlayerSet strategy(Player u) const { return strategies_.at(static_cast<std::size_t>(u)); }
  [[nodiscard]] const std::vector<PlayerSet>& strategies() const { return strategies_; }
  [[nodiscard]] StrategyProfile with_strategy(Player u, PlayerSet targets) const;

  /// Players v with u in s_v.
  [[nodiscard]] PlayerSet incoming(Player u) const;
  /// True when some channel is initiated by both of its endpoints.
  [[nodiscard]] bool has_double_initiation() const;
  /// Total number of initiated links, counting double initiation twice.
  [[nodiscard]] int link_count() const;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
  friend auto operator<=>(const StrategyProfile& a, const StrategyProfile& b) {
    return a.strategies_ <=> b.strategies_;
  }

 private:
  std::vector<PlayerSet> strategies_;
};

/// Sentinel distance for unreachable pairs.
inline constexpr int kUnreachable = -1;

/// Undirected simple graph G[s] with all-pairs distance and shortest-path-count
/// caches, filled by one BFS per source at construction.
class PaymentNetwork {
 public:
  PaymentNetwork() = default;
  /// Builds from per-vertex neighbour sets (must be symmetric, loop-free).
  explicit PaymentNetwork(std::vector<PlayerSet> adjacency);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] PlayerSet neighbors(Player u) const { return adjacency_[static_cast<std::size_t>(u)]; }
  [[nodiscard]] const std::vector<PlayerSet>& adjacency() const { return adjacency_; }
  [[nodiscard]] int edge_count() const { return edges_; }
  [[nodiscard]] bool has_edge(Player u, Player v) const { return neighbors(u).contains(v); }

  /// d(u, r), or kUnreachable.
  [[nodiscard]] int distance(Player u, Player r) const { return dist_[index(u, r)]; }
  /// m(u, r): number of shortest u-r paths, 0 when unreachable, 1 when u == r.
  [[nodiscard]] std::int64_t path_count(Player u, Player r) const { return paths_[index(u, r)]; }
  [[nodiscard]] bool connected() const { return connected_; }

 private:
  [[nodiscard]] std::size_t index(Player u, Player r) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(r);
  }

  int n_ = 0;
  int edges_ = 0;
  bool connected_ = true;
  std::vector<PlayerSet> adjacency_;
  std::vector<int> dist_;
  std::vector<std::int64_t> paths_;
};

/// Per-player cost split into its three terms.
struct CostBreakdown {
  int link_cost = 0;           ///< |s_u|
  Rational betweenness_term;   ///< (n-1)(n-2) minus Freeman betweenness, unweighted
  ExtRational closeness_term;  ///< sum of (d(u,r) - 1), unweighted
  ExtRational total;           ///< link_cost + b * betweenness + c * closeness
};

struct GraphStatistics {
  int edge_count = 0;
  ExtRational distance;                ///< d(G), sum over unordered pairs
  ExtRational average_distance;        ///< d(G) / C(n,2)
  ExtRational average_betweenness;     ///< mean Freeman betweenness
  std::vector<ExtRational> vertex_distance;  ///< d(v)
};

PaymentNetwork build_network(const StrategyProfile& profile);

/// Sum over ordered pairs (s, r), s != r, both != u, of m_u(s,r) / m(s,r).
Rational freeman_betweenness(const PaymentNetwork& net, Player u);
/// (n-1)(n-2) - freeman_betweenness.
Rational betweenness_cost(const PaymentNetwork& net, Player u);
/// Sum over r != u of d(u,r) - 1; infinite if some r is unreachable.
ExtRational closeness_cost(const PaymentNetwork& net, Player u);

/// Cost of u given an already built network and u's number of initiated links.
CostBreakdown player_cost(const PaymentNetwork& net, int link_count, Player u, const GameParams& params);
CostBreakdown player_cost(const StrategyProfile& profile, Player u, const GameParams& params);
ExtRational social_cost(const StrategyProfile& profile, const GameParams& params);

/// Social cost through the edge-count/closeness identity; valid for connected
/// profiles without doubly initiated channels.
ExtRational social_cost_identity(const PaymentNetwork& net, const GameParams& params);

GraphStatistics graph_statistics(const PaymentNetwork& net);

}  // namespace pcng
