#include "pcng/dynamics.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pcng/profile_io.hpp"

namespace pcng {
namespace {

struct Move {
  PlayerSet strategy;
  std::optional<Rational> delta;  // nullopt: reconnects a cut-off player
};

std::string decimal(double value) {
  std::ostringstream os;
  os << std::setprecision(10) << value;
  return os.str();
}

bool larger_gain(const Move& a, const Move& b) {
  if (!a.delta || !b.delta) return !a.delta && b.delta;
  return *a.delta < *b.delta;
}

// Best strictly improving move for u, if any.
std::optional<Move> improving_move(const StrategyProfile& profile, Player u, const GameParams& params, int cap) {
  const ExtRational current = player_cost(profile, u, params).total;
  const BestResponse best = best_response(profile, u, params, cap);
  if (!(best.cost < current)) return std::nullopt;
  const PlayerSet choice = best.strategies.front();
  if (choice == profile.strategy(u)) return std::nullopt;
  if (current.is_infinite()) return Move{choice, std::nullopt};
  return Move{choice, best.cost.value() - current.value()};
}

}  // namespace

Schedule Schedule::parse(const std::string& name, std::uint64_t seed) {
  if (name == "round-robin") return {ScheduleKind::RoundRobin, seed};
  if (name == "largest-improvement") return {ScheduleKind::LargestImprovement, seed};
  if (name == "random") return {ScheduleKind::SeededRandom, seed};
  throw std::invalid_argument("unknown schedule '" + name + "' (round-robin, largest-improvement, random)");
}

std::string Schedule::name() const {
  switch (kind) {
    case ScheduleKind::RoundRobin: return "round-robin";
    case ScheduleKind::LargestImprovement: return "largest-improvement";
    case ScheduleKind::SeededRandom: return "random";
  }
  return "?";
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::ConvergedToNE: return "converged";
    case Outcome::CycleDetected: return "cycle";
    case Outcome::MaxItersReached: return "max-iters";
  }
  return "?";
}

std::optional<StrategyProfile> step(const StrategyProfile& profile, Player u, const GameParams& params, int cap) {
  const auto move = improving_move(profile, u, params, cap);
  if (!move) return std::nullopt;
  return profile.with_strategy(u, move->strategy);
}

Trajectory run(const StrategyProfile& initial, const GameParams& params, const Schedule& schedule,
               std::size_t max_iters, int cap) {
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  if (initial.n() != params.n) throw std::invalid_argument("profile and parameters disagree on n");
  const int n = initial.n();
  Trajectory traj;
  traj.schedule = schedule;
  StrategyProfile profile = initial;
  std::mt19937_64 rng(schedule.seed);
  Player turn = 0;

  std::map<std::pair<StrategyProfile, Player>, std::size_t> seen;
  auto state_key = [&]() {
    return std::make_pair(profile, schedule.kind == ScheduleKind::RoundRobin ? turn : Player{0});
  };
  seen.emplace(state_key(), 0);

  auto apply = [&](Player u, const Move& move) {
    traj.steps.push_back({u, profile.strategy(u), move.strategy, move.delta});
    profile = profile.with_strategy(u, move.strategy);
  };

  while (true) {
    bool moved = false;
    switch (schedule.kind) {
      case ScheduleKind::RoundRobin:
        for (int tried = 0; tried < n && !moved; ++tried) {
          const Player u = turn;
          turn = (turn + 1) % n;
          if (const auto move = improving_move(profile, u, params, cap)) {
            apply(u, *move);
            moved = true;
          }
        }
        break;
      case ScheduleKind::LargestImprovement: {
        std::optional<std::pair<Player, Move>> best;
        for (Player u = 0; u < n; ++u) {
          const auto move = improving_move(profile, u, params, cap);
          if (move && (!best || larger_gain(*move, best->second))) best = std::make_pair(u, *move);
        }
        if (best) {
          apply(best->first, best->second);
          moved = true;
        }
        break;
      }
      case ScheduleKind::SeededRandom: {
        std::vector<Player> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (Player u : order) {
          if (const auto move = improving_move(profile, u, params, cap)) {
            apply(u, *move);
            moved = true;
            break;
          }
        }
        break;
      }
    }

    if (!moved) {
      traj.outcome = Outcome::ConvergedToNE;
      break;
    }
    const auto [it, inserted] = seen.emplace(state_key(), traj.steps.size());
    if (!inserted) {
      traj.outcome = Outcome::CycleDetected;
      traj.cycle_start = it->second;
      traj.cycle_period = traj.steps.size() - it->second;
      break;
    }
    if (traj.steps.size() >= max_iters) {
      traj.outcome = Outcome::MaxItersReached;
      break;
    }
  }
  traj.final_profile = profile;
  return traj;
}

std::string format_trajectory(const Trajectory& t) {
  std::string out = "schedule " + t.schedule.name() + "\n";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    out += "step " + std::to_string(i) + ": player " + std::to_string(s.player) + " " + s.old_strategy.str() +
           " -> " + s.new_strategy.str() + " delta " +
           (s.delta ? s.delta->str() + " (" + decimal(s.delta->to_double()) + ")" : std::string("-inf")) +
           "\n";
  }
  out += "outcome " + to_string(t.outcome);
  if (t.outcome == Outcome::CycleDetected) {
    out += " start " + std::to_string(t.cycle_start) + " period " + std::to_string(t.cycle_period);
  }
  out += "\n" + format_profile(t.final_profile);
  return out;
}

}  // namespace pcng
