#include "pcng/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pcng {

std::string PlayerSet::str() const {
  std::string out = "{";
  bool first = true;
  for (Player p : *this) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

bool lexicographically_less(PlayerSet a, PlayerSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

GameParams::GameParams(int n_, Rational b_, Rational c_) : n(n_), b(b_), c(c_) {
  if (n < 2) throw std::invalid_argument("need at least 2 players");
  if (n > kMaxPlayers) throw std::invalid_argument("at most 64 players are supported");
  if (b.sign() < 0) throw std::invalid_argument("betweenness weight b must be >= 0");
  if (c.sign() <= 0) throw std::invalid_argument("closeness weight c must be > 0");
}

StrategyProfile::StrategyProfile(std::vector<PlayerSet> strategies) : strategies_(std::move(strategies)) {
  const int n = this->n();
  if (n > kMaxPlayers) throw std::invalid_argument("at most 64 players are supported");
  const PlayerSet all = PlayerSet::range(n);
  for (Player u = 0; u < n; ++u) {
    const PlayerSet s = strategies_[static_cast<std::size_t>(u)];
    if (s.contains(u)) throw std::invalid_argument("player " + std::to_string(u) + " links to itself");
    if (!(s - all).empty()) throw std::invalid_argument("player " + std::to_string(u) + " links outside [0, n)");
  }
}

StrategyProfile StrategyProfile::empty(int n) {
  return StrategyProfile(std::vector<PlayerSet>(static_cast<std::size_t>(n)));
}

StrategyProfile StrategyProfile::with_strategy(Player u, PlayerSet targets) const {
  auto copy = strategies_;
  copy.at(static_cast<std::size_t>(u)) = targets;
  return StrategyProfile(std::move(copy));
}

PlayerSet StrategyProfile::incoming(Player u) const {
  PlayerSet out;
  for (Player v = 0; v < n(); ++v) {
    if (strategies_[static_cast<std::size_t>(v)].contains(u)) out.insert(v);
  }
  return out;
}

bool StrategyProfile::has_double_initiation() const {
  for (Player u = 0; u < n(); ++u) {
    for (Player v : strategy(u)) {
      if (v > u && strategy(v).contains(u)) return true;
    }
  }
  return false;
}

int StrategyProfile::link_count() const {
  int total = 0;
  for (PlayerSet s : strategies_) total += s.size();
  return total;
}

PaymentNetwork::PaymentNetwork(std::vector<PlayerSet> adjacency)
    : n_(static_cast<int>(adjacency.size())), adjacency_(std::move(adjacency)) {
  const auto nn = static_cast<std::size_t>(n_);
  dist_.assign(nn * nn, kUnreachable);
  paths_.assign(nn * nn, 0);
  int degree_sum = 0;
  for (Player u = 0; u < n_; ++u) {
    if (adjacency_[static_cast<std::size_t>(u)].contains(u)) throw std::invalid_argument("self-loop in network");
    for (Player v : adjacency_[static_cast<std::size_t>(u)]) {
      if (!adjacency_[static_cast<std::size_t>(v)].contains(u)) throw std::invalid_argument("asymmetric adjacency");
    }
    degree_sum += adjacency_[static_cast<std::size_t>(u)].size();
  }
  edges_ = degree_sum / 2;

  std::vector<Player> queue(nn);
  for (Player src = 0; src < n_; ++src) {
    int* dist = &dist_[index(src, 0)];
    std::int64_t* paths = &paths_[index(src, 0)];
    dist[src] = 0;
    paths[src] = 1;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = src;
    while (head < tail) {
      const Player x = queue[head++];
      for (Player y : adjacency_[static_cast<std::size_t>(x)]) {
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          paths[y] = paths[x];
          queue[tail++] = y;
        } else if (dist[y] == dist[x] + 1) {
          paths[y] += paths[x];
        }
      }
    }
    if (static_cast<int>(tail) != n_) connected_ = false;
  }
}

PaymentNetwork build_network(const StrategyProfile& profile) {
  std::vector<PlayerSet> adjacency(static_cast<std::size_t>(profile.n()));
  for (Player u = 0; u < profile.n(); ++u) {
    for (Player v : profile.strategy(u)) {
      adjacency[static_cast<std::size_t>(u)].insert(v);
      adjacency[static_cast<std::size_t>(v)].insert(u);
    }
  }
  return PaymentNetwork(std::move(adjacency));
}

Rational freeman_betweenness(const PaymentNetwork& net, Player u) {
  // Pair (s, r) and (r, s) contribute equally, so sum unordered pairs and double.
  Rational total;
  const int n = net.n();
  for (Player s = 0; s < n; ++s) {
    if (s == u) continue;
    const int su = net.distance(s, u);
    if (su == kUnreachable) continue;
    for (Player r = s + 1; r < n; ++r) {
      if (r == u) continue;
      const int ur = net.distance(u, r);
      const int sr = net.distance(s, r);
      if (ur == kUnreachable || sr == kUnreachable || su + ur != sr) continue;
      std::int64_t through = 0;
      if (__builtin_mul_overflow(net.path_count(s, u), net.path_count(u, r), &through)) {
        total += Rational(net.path_count(s, u)) * Rational(net.path_count(u, r)) / Rational(net.path_count(s, r));
      } else {
        total += Rational(through, net.path_count(s, r));
      }
    }
  }
  return total * 2;
}

Rational betweenness_cost(const PaymentNetwork& net, Player u) {
  const std::int64_t n = net.n();
  return Rational((n - 1) * (n - 2)) - freeman_betweenness(net, u);
}

ExtRational closeness_cost(const PaymentNetwork& net, Player u) {
  std::int64_t total = 0;
  for (Player r = 0; r < net.n(); ++r) {
    if (r == u) continue;
    const int d = net.distance(u, r);
    if (d == kUnreachable) return ExtRational::infinity();
    total += d - 1;
  }
  return ExtRational(total);
}

CostBreakdown player_cost(const PaymentNetwork& net, int link_count, Player u, const GameParams& params) {
  CostBreakdown out;
  out.link_cost = link_count;
  out.betweenness_term = betweenness_cost(net, u);
  out.closeness_term = closeness_cost(net, u);
  out.total = ExtRational(link_count) + ExtRational(params.b * out.betweenness_term) +
              params.c * out.closeness_term;
  return out;
}

CostBreakdown player_cost(const StrategyProfile& profile, Player u, const GameParams& params) {
  return player_cost(build_network(profile), profile.strategy(u).size(), u, params);
}

ExtRational social_cost(const StrategyProfile& profile, const GameParams& params) {
  const PaymentNetwork net = build_network(profile);
  ExtRational total;
  for (Player u = 0; u < profile.n(); ++u) {
    total += player_cost(net, profile.strategy(u).size(), u, params).total;
    if (total.is_infinite()) break;
  }
  return total;
}

ExtRational social_cost_identity(const PaymentNetwork& net, const GameParams& params) {
  ExtRational closeness_sum;
  for (Player u = 0; u < net.n(); ++u) closeness_sum += closeness_cost(net, u);
  const std::int64_t n = net.n();
  return ExtRational(Rational(net.edge_count()) + params.b * Rational(n * (n - 1) * (n - 2))) +
         (params.c - params.b) * closeness_sum;
}

GraphStatistics graph_statistics(const PaymentNetwork& net) {
  GraphStatistics stats;
  const int n = net.n();
  stats.edge_count = net.edge_count();
  std::int64_t twice_distance = 0;
  for (Player v = 0; v < n; ++v) {
    std::int64_t dv = 0;
    bool reachable = true;
    for (Player r = 0; r < n; ++r) {
      const int d = net.distance(v, r);
      if (d == kUnreachable) {
        reachable = false;
        break;
      }
      dv += d;
    }
    stats.vertex_distance.push_back(reachable ? ExtRational(dv) : ExtRational::infinity());
    twice_distance += dv;
  }
  Rational freeman_sum;
  for (Player v = 0; v < n; ++v) freeman_sum += freeman_betweenness(net, v);
  stats.average_betweenness = freeman_sum / Rational(n);
  if (net.connected()) {
    const Rational d(twice_distance, 2);
    stats.distance = d;
    stats.average_distance = d / Rational(std::int64_t{n} * (n - 1), 2);
  } else {
    std::fill(stats.vertex_distance.begin(), stats.vertex_distance.end(), ExtRational::infinity());
    stats.distance = ExtRational::infinity();
    stats.average_distance = ExtRational::infinity();
  }
  return stats;
}

}  // namespace pcng
