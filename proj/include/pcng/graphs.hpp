#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pcng/game.hpp"

namespace pcng {

/// Undirected graphs on at most 11 labelled vertices packed into one word: bit
/// i is set when the i-th unordered pair (in (0,1), (0,2), ..., (n-2,n-1)
/// order) is an edge.
using EdgeMask = std::uint64_t;

inline constexpr int kMaxMaskVertices = 11;

class EdgeIndexer {
 public:
  explicit EdgeIndexer(int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int pair_count() const { return static_cast<int>(pairs_.size()); }
  [[nodiscard]] int index(Player u, Player v) const;
  [[nodiscard]] std::pair<Player, Player> pair(int index) const { return pairs_[static_cast<std::size_t>(index)]; }
  /// Edges touching u.
  [[nodiscard]] EdgeMask incident(Player u) const { return incident_[static_cast<std::size_t>(u)]; }

  [[nodiscard]] std::vector<PlayerSet> adjacency(EdgeMask mask) const;
  [[nodiscard]] PaymentNetwork network(EdgeMask mask) const { return PaymentNetwork(adjacency(mask)); }
  [[nodiscard]] bool connected(EdgeMask mask) const;
  [[nodiscard]] EdgeMask mask_of(const PaymentNetwork& net) const;

  /// Profile where each edge in `mask` is initiated by one endpoint: the
  /// lower-numbered one when the matching bit of `upper_owns` is clear.
  [[nodiscard]] StrategyProfile orient(EdgeMask mask, EdgeMask upper_owns) const;

 private:
  int n_;
  std::vector<std::pair<Player, Player>> pairs_;
  std::vector<int> index_;
  std::vector<EdgeMask> incident_;
};

/// All connected graphs on n labelled vertices (n <= 7), ordered by edge count
/// and then by mask value.
std::vector<EdgeMask> connected_graphs(int n);

/// Canonical labelling by exhaustive relabelling: the smallest mask among all
/// vertex permutations. Two graphs are isomorphic iff their forms match.
class CanonicalLabeler {
 public:
  explicit CanonicalLabeler(int n);
  [[nodiscard]] EdgeMask canonical(EdgeMask mask) const;

 private:
  // For each permutation, where each edge bit goes.
  std::vector<std::vector<std::uint8_t>> edge_maps_;
};

}  // namespace pcng
