#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcng/equilibrium.hpp"
#include "pcng/game.hpp"

namespace pcng {

enum class ScheduleKind { RoundRobin, LargestImprovement, SeededRandom };

/// Order in which players get to move.
///   RoundRobin          players 0, 1, ..., n-1, 0, ... in turn
///   LargestImprovement  the player with the most negative best-response delta
///                       (lowest id on ties)
///   SeededRandom        a fresh random permutation per round; the first player
///                       in it who can improve moves
struct Schedule {
  ScheduleKind kind = ScheduleKind::RoundRobin;
  std::uint64_t seed = 0;

  static Schedule parse(const std::string& name, std::uint64_t seed = 0);
  [[nodiscard]] std::string name() const;
};

struct TrajectoryStep {
  Player player = 0;
  PlayerSet old_strategy;
  PlayerSet new_strategy;
  /// Strictly negative; nullopt when the move reconnects a cut-off player.
  std::optional<Rational> delta;
};

enum class Outcome { ConvergedToNE, CycleDetected, MaxItersReached };

std::string to_string(Outcome outcome);

struct Trajectory {
  Schedule schedule;
  std::vector<TrajectoryStep> steps;
  Outcome outcome = Outcome::MaxItersReached;
  StrategyProfile final_profile;
  std::size_t cycle_start = 0;   ///< step index where the repeated state first occurred
  std::size_t cycle_period = 0;  ///< steps between the two occurrences
};

/// One best-response move for u. Returns the new profile if some strategy is
/// strictly cheaper for u; ties between best responses go to the
/// lexicographically smallest target set.
std::optional<StrategyProfile> step(const StrategyProfile& profile, Player u, const GameParams& params,
                                    int cap = kDefaultBestResponseCap);

/// Applies moves until nobody can improve, a state repeats, or max_iters moves
/// have been made. A repeated state is the full profile (ownership included)
/// together with the round-robin turn pointer when applicable.
Trajectory run(const StrategyProfile& initial, const GameParams& params, const Schedule& schedule,
               std::size_t max_iters, int cap = kDefaultBestResponseCap);

/// One line per step, an outcome line, then the final profile in text form.
std::string format_trajectory(const Trajectory& trajectory);

}  // namespace pcng
