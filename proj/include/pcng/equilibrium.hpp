#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcng/game.hpp"
#include "pcng/graphs.hpp"

namespace pcng {

/// A computation would exceed a configured size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultBestResponseCap = 16;
inline constexpr int kDefaultEnumerationCap = 6;

/// Evidence that a profile is not an equilibrium.
struct DeviationWitness {
  Player player = 0;
  PlayerSet old_strategy;
  PlayerSet new_strategy;
  /// Cost change for `player`, strictly negative. nullopt when the player was
  /// disconnected and the deviation reconnects it (an unbounded gain).
  std::optional<Rational> delta;
};

struct BestResponse {
  std::vector<PlayerSet> strategies;  ///< all minimisers, lexicographic order
  ExtRational cost;
};

struct NashCheck {
  bool is_nash = false;
  /// When !is_nash: the improving deviation changing the fewest links, with
  /// the most negative delta among those (lowest player on ties).
  std::optional<DeviationWitness> witness;
};

/// Exhaustive best response of u over all 2^(n-1) strategies.
BestResponse best_response(const StrategyProfile& profile, Player u, const GameParams& params,
                           int cap = kDefaultBestResponseCap);

/// Ties keep the equilibrium: a deviation must strictly lower the cost.
NashCheck is_nash(const StrategyProfile& profile, const GameParams& params, int cap = kDefaultBestResponseCap);

struct EnumerationOptions {
  bool dedup_isomorphic = false;
  int max_n = kDefaultEnumerationCap;
  int threads = 0;  ///< 0 = hardware concurrency
};

struct EquilibriumReport {
  GameParams params;
  /// Equilibria in deterministic order (graphs by edge count then mask,
  /// orientations lexicographic); one per isomorphism class if deduplicated.
  std::vector<StrategyProfile> nash_profiles;
  std::size_t nash_count = 0;  ///< before deduplication
  std::optional<Rational> worst_cost;
  std::optional<Rational> best_cost;
  Rational optimum_cost;
  std::optional<Rational> poa;
  std::optional<Rational> pos;
};

/// All equilibria among profiles whose graph is connected and whose channels
/// are each initiated by exactly one endpoint. Doubly initiated channels are
/// never stable (dropping the duplicate saves 1) and disconnected profiles have
/// infinite cost.
EquilibriumReport enumerate_nash(const GameParams& params, const EnumerationOptions& options = {});

/// Minimum social cost over all connected single-ownership profiles and the
/// graphs attaining it.
struct OptimumSearch {
  Rational cost;
  std::vector<EdgeMask> graphs;
};
OptimumSearch brute_force_optimum(const GameParams& params, const EnumerationOptions& options = {});

/// Worst / best equilibrium cost over optimum; nullopt if no equilibrium.
/// Graphs are visited in cost order and the search stops at the first one with
/// a stable orientation.
std::optional<Rational> price_of_anarchy(const GameParams& params, const EnumerationOptions& options = {});
std::optional<Rational> price_of_stability(const GameParams& params, const EnumerationOptions& options = {});

/// JSON document: params, nash profiles in text form, exact costs as "p/q"
/// strings with decimal companions.
std::string report_to_json(const EquilibriumReport& report);

}  // namespace pcng
