#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace pcng {

using Player = int;

/// Hard limit on the number of players: sets are single 64-bit words.
inline constexpr int kMaxPlayers = 64;

/// A set of players stored as a bitmask. Iterates in increasing player order.
class PlayerSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Player;
    using difference_type = std::ptrdiff_t;
    using pointer = const Player*;
    using reference = Player;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Player operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr PlayerSet() = default;
  constexpr explicit PlayerSet(std::uint64_t bits) : bits_(bits) {}
  PlayerSet(std::initializer_list<Player> players) {
    for (Player p : players) insert(p);
  }

  /// {0, ..., n-1}
  static PlayerSet range(int n) {
    return PlayerSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  [[nodiscard]] std::uint64_t bits() const { return bits_; }
  [[nodiscard]] bool contains(Player p) const { return (bits_ >> p) & 1U; }
  [[nodiscard]] int size() const { return std::popcount(bits_); }
  [[nodiscard]] bool empty() const { return bits_ == 0; }

  void insert(Player p) { bits_ |= std::uint64_t{1} << p; }
  void erase(Player p) { bits_ &= ~(std::uint64_t{1} << p); }

  [[nodiscard]] iterator begin() const { return iterator(bits_); }
  [[nodiscard]] iterator end() const { return iterator(0); }

  [[nodiscard]] std::vector<Player> to_vector() const { return {begin(), end()}; }
  /// "{0,2,5}"
  [[nodiscard]] std::string str() const;

  friend PlayerSet operator|(PlayerSet a, PlayerSet b) { return PlayerSet(a.bits_ | b.bits_); }
  friend PlayerSet operator&(PlayerSet a, PlayerSet b) { return PlayerSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend PlayerSet operator-(PlayerSet a, PlayerSet b) { return PlayerSet(a.bits_ & ~b.bits_); }
  friend bool operator==(PlayerSet, PlayerSet) = default;
  friend auto operator<=>(PlayerSet a, PlayerSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted member lists: {} < {1,2} < {1,3} < {2}.
bool lexicographically_less(PlayerSet a, PlayerSet b);

/// Calls fn(subset) for every subset of `universe`, starting from the empty set
/// and ending with `universe` itself.
template <class Fn>
void for_each_subset(PlayerSet universe, Fn&& fn) {
  const std::uint64_t full = universe.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(PlayerSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace pcng
