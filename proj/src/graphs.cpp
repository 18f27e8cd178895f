#include "pcng/graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace pcng {

EdgeIndexer::EdgeIndexer(int n) : n_(n), index_(static_cast<std::size_t>(n * n), -1) {
  if (n < 1 || n > kMaxMaskVertices) throw std::invalid_argument("edge masks support 1..11 vertices");
  incident_.assign(static_cast<std::size_t>(n), 0);
  for (Player u = 0; u < n; ++u) {
    for (Player v = u + 1; v < n; ++v) {
      const int i = static_cast<int>(pairs_.size());
      pairs_.emplace_back(u, v);
      index_[static_cast<std::size_t>(u * n + v)] = i;
      index_[static_cast<std::size_t>(v * n + u)] = i;
      incident_[static_cast<std::size_t>(u)] |= EdgeMask{1} << i;
      incident_[static_cast<std::size_t>(v)] |= EdgeMask{1} << i;
    }
  }
}

int EdgeIndexer::index(Player u, Player v) const {
  const int i = index_.at(static_cast<std::size_t>(u * n_ + v));
  if (i < 0) throw std::invalid_argument("no pair for a self-loop");
  return i;
}

std::vector<PlayerSet> EdgeIndexer::adjacency(EdgeMask mask) const {
  std::vector<PlayerSet> adj(static_cast<std::size_t>(n_));
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    mask &= mask - 1;
    const auto [u, v] = pairs_[static_cast<std::size_t>(i)];
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  return adj;
}

bool EdgeIndexer::connected(EdgeMask mask) const {
  const auto adj = adjacency(mask);
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (Player v : PlayerSet(frontier)) next |= adj[static_cast<std::size_t>(v)].bits();
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == PlayerSet::range(n_).bits();
}

EdgeMask EdgeIndexer::mask_of(const PaymentNetwork& net) const {
  if (net.n() != n_) throw std::invalid_argument("vertex count mismatch");
  EdgeMask mask = 0;
  for (Player u = 0; u < n_; ++u) {
    for (Player v : net.neighbors(u)) {
      if (v > u) mask |= EdgeMask{1} << index(u, v);
    }
  }
  return mask;
}

StrategyProfile EdgeIndexer::orient(EdgeMask mask, EdgeMask upper_owns) const {
  std::vector<PlayerSet> strategies(static_cast<std::size_t>(n_));
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    mask &= mask - 1;
    const auto [u, v] = pairs_[static_cast<std::size_t>(i)];
    if ((upper_owns >> i) & 1U) {
      strategies[static_cast<std::size_t>(v)].insert(u);
    } else {
      strategies[static_cast<std::size_t>(u)].insert(v);
    }
  }
  return StrategyProfile(std::move(strategies));
}

std::vector<EdgeMask> connected_graphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("connected graph enumeration supports 1..7 vertices");
  const EdgeIndexer idx(n);
  const EdgeMask limit = EdgeMask{1} << idx.pair_count();
  std::vector<EdgeMask> out;
  for (EdgeMask mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) >= n - 1 && idx.connected(mask)) out.push_back(mask);
  }
  std::stable_sort(out.begin(), out.end(), [](EdgeMask a, EdgeMask b) {
    return std::popcount(a) < std::popcount(b);
  });
  return out;
}

CanonicalLabeler::CanonicalLabeler(int n) {
  const EdgeIndexer idx(n);
  std::vector<Player> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::uint8_t> map(static_cast<std::size_t>(idx.pair_count()));
    for (int i = 0; i < idx.pair_count(); ++i) {
      const auto [u, v] = idx.pair(i);
      map[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(idx.index(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]));
    }
    edge_maps_.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

EdgeMask CanonicalLabeler::canonical(EdgeMask mask) const {
  EdgeMask best = ~EdgeMask{0};
  for (const auto& map : edge_maps_) {
    EdgeMask image = 0;
    for (EdgeMask rest = mask; rest != 0; rest &= rest - 1) {
      image |= EdgeMask{1} << map[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    best = std::min(best, image);
  }
  return best;
}

}  // namespace pcng
