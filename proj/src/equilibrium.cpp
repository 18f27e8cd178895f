#include "pcng/equilibrium.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "json.hpp"

#include "pcng/profile_io.hpp"

namespace pcng {
namespace {

void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw ResourceLimitError(std::string(what) + " is capped at n=" + std::to_string(cap) + " (got n=" +
                             std::to_string(n) + ")");
  }
}

int worker_count(int requested, std::size_t work) {
  int threads = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(threads, 1);
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(work, 1)));
}

// Runs fn(begin, end, worker) over contiguous chunks of [0, count).
template <class Fn>
void parallel_chunks(std::size_t count, int threads, Fn&& fn) {
  const int workers = worker_count(threads, count);
  if (workers == 1) {
    fn(std::size_t{0}, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t step = (count + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
  for (int w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, step * static_cast<std::size_t>(w));
    const std::size_t end = std::min(count, begin + step);
    pool.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
  }
  for (auto& t : pool) t.join();
}

// Cost of u in `net` without the link term.
Rational centrality_cost(const PaymentNetwork& net, Player u, const GameParams& params) {
  return params.b * betweenness_cost(net, u) + params.c * closeness_cost(net, u).value();
}

// Stability of single-ownership profiles on small graphs. Whether player u is
// content depends only on the edges not touching u, the links others initiate
// towards u, and how many links u pays for, so the best deviation cost is
// memoised on (edges not touching u, incoming set).
class StabilityOracle {
 public:
  StabilityOracle(const EdgeIndexer& idx, const GameParams& params)
      : idx_(idx), params_(params), memo_(static_cast<std::size_t>(idx.n())) {}

  ExtRational best_deviation_cost(Player u, EdgeMask rest, PlayerSet incoming) {
    const std::uint64_t key = rest | (incoming.bits() << idx_.pair_count());
    auto& table = memo_[static_cast<std::size_t>(u)];
    if (const auto it = table.find(key); it != table.end()) return it->second;

    // Re-initiating a link someone else already pays for only adds cost, so
    // the minimum over all strategies equals the minimum over these.
    const PlayerSet free = PlayerSet::range(idx_.n()) - PlayerSet{u} - incoming;
    ExtRational best = ExtRational::infinity();
    for_each_subset(free, [&](PlayerSet targets) {
      EdgeMask mask = rest;
      for (Player v : targets | incoming) mask |= EdgeMask{1} << idx_.index(u, v);
      const PaymentNetwork net = idx_.network(mask);
      if (!net.connected()) return;
      const ExtRational cost = ExtRational(Rational(targets.size()) + centrality_cost(net, u, params_));
      best = std::min(best, cost);
    });
    table.emplace(key, best);
    return best;
  }

 private:
  const EdgeIndexer& idx_;
  const GameParams& params_;
  std::vector<std::unordered_map<std::uint64_t, ExtRational>> memo_;
};

// One connected graph with its per-player stable ownership sets.
class GraphStability {
 public:
  GraphStability(const EdgeIndexer& idx, EdgeMask graph, const GameParams& params, StabilityOracle& oracle)
      : idx_(idx), graph_(graph) {
    const PaymentNetwork net = idx.network(graph);
    const int n = idx.n();
    social_cost_ = Rational(std::popcount(graph));
    for (EdgeMask rest = graph; rest != 0; rest &= rest - 1) edges_.push_back(std::countr_zero(rest));

    stable_.resize(static_cast<std::size_t>(n));
    neighbors_.resize(static_cast<std::size_t>(n));
    last_edge_.assign(static_cast<std::size_t>(n), -1);
    for (Player u = 0; u < n; ++u) {
      const Rational base = centrality_cost(net, u, params);
      social_cost_ += base;
      const auto nbrs = net.neighbors(u).to_vector();
      neighbors_[static_cast<std::size_t>(u)] = nbrs;
      const EdgeMask rest = graph & ~idx.incident(u);
      auto& stable = stable_[static_cast<std::size_t>(u)];
      stable.assign(std::size_t{1} << nbrs.size(), false);
      for (std::size_t local = 0; local < stable.size(); ++local) {
        PlayerSet owned;
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
          if ((local >> k) & 1U) owned.insert(nbrs[k]);
        }
        const PlayerSet incoming = net.neighbors(u) - owned;
        const ExtRational current = ExtRational(Rational(owned.size()) + base);
        stable[local] = current <= oracle.best_deviation_cost(u, rest, incoming);
      }
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto [a, b] = idx.pair(edges_[e]);
      last_edge_[static_cast<std::size_t>(a)] = static_cast<int>(e);
      last_edge_[static_cast<std::size_t>(b)] = static_cast<int>(e);
    }
  }

  [[nodiscard]] const Rational& social_cost() const { return social_cost_; }

  /// Calls fn(upper_owns) for each stable orientation in lexicographic order
  /// (first edge most significant, lower endpoint owning first). Stops early
  /// when fn returns false.
  template <class Fn>
  void for_each_stable_orientation(Fn&& fn) const {
    std::vector<std::size_t> owned(neighbors_.size(), 0);
    bool keep_going = true;
    search(0, 0, owned, keep_going, fn);
  }

  [[nodiscard]] bool has_stable_orientation() const {
    bool found = false;
    for_each_stable_orientation([&](EdgeMask) {
      found = true;
      return false;
    });
    return found;
  }

 private:
  [[nodiscard]] std::size_t local_bit(Player u, Player v) const {
    const auto& nbrs = neighbors_[static_cast<std::size_t>(u)];
    return std::size_t{1} << static_cast<std::size_t>(std::find(nbrs.begin(), nbrs.end(), v) - nbrs.begin());
  }

  template <class Fn>
  void search(std::size_t e, EdgeMask upper_owns, std::vector<std::size_t>& owned, bool& keep_going, Fn& fn) const {
    if (!keep_going) return;
    if (e == edges_.size()) {
      keep_going = fn(upper_owns);
      return;
    }
    const auto [a, b] = idx_.pair(edges_[e]);
    for (int choice = 0; choice < 2 && keep_going; ++choice) {
      const Player owner = choice == 0 ? a : b;
      const Player other = choice == 0 ? b : a;
      const std::size_t bit = local_bit(owner, other);
      owned[static_cast<std::size_t>(owner)] |= bit;
      const bool ok_a = last_edge_[static_cast<std::size_t>(a)] != static_cast<int>(e) ||
                        stable_[static_cast<std::size_t>(a)][owned[static_cast<std::size_t>(a)]];
      const bool ok_b = last_edge_[static_cast<std::size_t>(b)] != static_cast<int>(e) ||
                        stable_[static_cast<std::size_t>(b)][owned[static_cast<std::size_t>(b)]];
      if (ok_a && ok_b) {
        const EdgeMask next = choice == 0 ? upper_owns : upper_owns | (EdgeMask{1} << edges_[e]);
        search(e + 1, next, owned, keep_going, fn);
      }
      owned[static_cast<std::size_t>(owner)] &= ~bit;
    }
  }

  const EdgeIndexer& idx_;
  EdgeMask graph_;
  Rational social_cost_;
  std::vector<int> edges_;
  std::vector<std::vector<Player>> neighbors_;
  std::vector<std::vector<bool>> stable_;
  std::vector<int> last_edge_;
};

std::vector<Rational> graph_social_costs(const EdgeIndexer& idx, const std::vector<EdgeMask>& graphs,
                                         const GameParams& params, int threads) {
  std::vector<Rational> costs(graphs.size());
  parallel_chunks(graphs.size(), threads, [&](std::size_t begin, std::size_t end, int) {
    for (std::size_t i = begin; i < end; ++i) {
      const PaymentNetwork net = idx.network(graphs[i]);
      Rational total(net.edge_count());
      for (Player u = 0; u < idx.n(); ++u) total += centrality_cost(net, u, params);
      costs[i] = total;
    }
  });
  return costs;
}

std::optional<Rational> extreme_equilibrium_ratio(const GameParams& params, const EnumerationOptions& options,
                                                  bool worst) {
  check_cap(params.n, options.max_n, "equilibrium enumeration");
  const EdgeIndexer idx(params.n);
  const auto graphs = connected_graphs(params.n);
  const auto costs = graph_social_costs(idx, graphs, params, options.threads);
  const Rational optimum = *std::min_element(costs.begin(), costs.end());

  std::vector<std::size_t> order(graphs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return worst ? costs[a] > costs[b] : costs[a] < costs[b];
  });
  StabilityOracle oracle(idx, params);
  for (std::size_t i : order) {
    if (GraphStability(idx, graphs[i], params, oracle).has_stable_orientation()) return costs[i] / optimum;
  }
  return std::nullopt;
}

}  // namespace

BestResponse best_response(const StrategyProfile& profile, Player u, const GameParams& params, int cap) {
  check_cap(profile.n(), cap, "best response");
  BestResponse out;
  out.cost = ExtRational::infinity();
  bool any = false;
  for_each_subset(PlayerSet::range(profile.n()) - PlayerSet{u}, [&](PlayerSet targets) {
    const ExtRational cost = player_cost(profile.with_strategy(u, targets), u, params).total;
    if (!any || cost < out.cost) {
      out.cost = cost;
      out.strategies.clear();
      any = true;
    }
    if (cost == out.cost) out.strategies.push_back(targets);
  });
  std::sort(out.strategies.begin(), out.strategies.end(), lexicographically_less);
  return out;
}

NashCheck is_nash(const StrategyProfile& profile, const GameParams& params, int cap) {
  check_cap(profile.n(), cap, "equilibrium check");
  NashCheck out;
  // Preference between witnesses: a rescue from an infinite-cost position
  // first, then the fewest changed links, then the largest gain.
  struct Rank {
    bool finite_start;
    int changes;
    ExtRational new_cost;  // only compared among rescues
  };
  std::optional<Rank> best_rank;
  auto better = [](const Rank& a, const DeviationWitness& wa, const Rank& b, const DeviationWitness& wb) {
    if (a.finite_start != b.finite_start) return !a.finite_start;
    if (a.changes != b.changes) return a.changes < b.changes;
    if (!a.finite_start) return a.new_cost < b.new_cost;
    return *wa.delta < *wb.delta;
  };
  for (Player u = 0; u < profile.n(); ++u) {
    const ExtRational current = player_cost(profile, u, params).total;
    for_each_subset(PlayerSet::range(profile.n()) - PlayerSet{u}, [&](PlayerSet targets) {
      const ExtRational cost = player_cost(profile.with_strategy(u, targets), u, params).total;
      if (!(cost < current)) return;
      DeviationWitness w{u, profile.strategy(u), targets, {}};
      if (current.is_finite()) w.delta = cost.value() - current.value();
      const PlayerSet changed = (targets - profile.strategy(u)) | (profile.strategy(u) - targets);
      const Rank rank{current.is_finite(), changed.size(), cost};
      if (!best_rank || better(rank, w, *best_rank, *out.witness)) {
        best_rank = rank;
        out.witness = w;
      }
    });
  }
  out.is_nash = !out.witness.has_value();
  return out;
}

EquilibriumReport enumerate_nash(const GameParams& params, const EnumerationOptions& options) {
  check_cap(params.n, options.max_n, "equilibrium enumeration");
  const EdgeIndexer idx(params.n);
  const auto graphs = connected_graphs(params.n);

  struct Found {
    std::vector<EdgeMask> orientations;
    Rational cost;
  };
  std::vector<Found> found(graphs.size());
  parallel_chunks(graphs.size(), options.threads, [&](std::size_t begin, std::size_t end, int) {
    StabilityOracle oracle(idx, params);
    for (std::size_t i = begin; i < end; ++i) {
      const GraphStability stability(idx, graphs[i], params, oracle);
      found[i].cost = stability.social_cost();
      stability.for_each_stable_orientation([&](EdgeMask upper_owns) {
        found[i].orientations.push_back(upper_owns);
        return true;
      });
    }
  });

  EquilibriumReport report;
  report.params = params;
  report.optimum_cost = found.front().cost;
  const CanonicalLabeler labeler(params.n);
  std::vector<EdgeMask> seen_classes;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    report.optimum_cost = std::min(report.optimum_cost, found[i].cost);
    if (found[i].orientations.empty()) continue;
    report.nash_count += found[i].orientations.size();
    if (!report.worst_cost || found[i].cost > *report.worst_cost) report.worst_cost = found[i].cost;
    if (!report.best_cost || found[i].cost < *report.best_cost) report.best_cost = found[i].cost;
    if (options.dedup_isomorphic) {
      const EdgeMask form = labeler.canonical(graphs[i]);
      if (std::find(seen_classes.begin(), seen_classes.end(), form) != seen_classes.end()) continue;
      seen_classes.push_back(form);
      report.nash_profiles.push_back(idx.orient(graphs[i], found[i].orientations.front()));
    } else {
      for (EdgeMask o : found[i].orientations) report.nash_profiles.push_back(idx.orient(graphs[i], o));
    }
  }
  if (report.worst_cost) {
    report.poa = *report.worst_cost / report.optimum_cost;
    report.pos = *report.best_cost / report.optimum_cost;
  }
  return report;
}

OptimumSearch brute_force_optimum(const GameParams& params, const EnumerationOptions& options) {
  check_cap(params.n, std::max(options.max_n, 7), "optimum search");
  const EdgeIndexer idx(params.n);
  const auto graphs = connected_graphs(params.n);
  const auto costs = graph_social_costs(idx, graphs, params, options.threads);
  OptimumSearch out;
  out.cost = *std::min_element(costs.begin(), costs.end());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (costs[i] == out.cost) out.graphs.push_back(graphs[i]);
  }
  return out;
}

std::optional<Rational> price_of_anarchy(const GameParams& params, const EnumerationOptions& options) {
  return extreme_equilibrium_ratio(params, options, true);
}

std::optional<Rational> price_of_stability(const GameParams& params, const EnumerationOptions& options) {
  return extreme_equilibrium_ratio(params, options, false);
}

std::string report_to_json(const EquilibriumReport& report) {
  using nlohmann::json;
  auto number = [](const std::optional<Rational>& value) -> json {
    if (!value) return nullptr;
    return json{{"exact", value->str()}, {"decimal", value->to_double()}};
  };
  json doc;
  doc["params"] = {{"n", report.params.n}, {"b", report.params.b.str()}, {"c", report.params.c.str()}};
  doc["nash_count"] = report.nash_count;
  json profiles = json::array();
  for (const auto& p : report.nash_profiles) profiles.push_back(format_profile(p));
  doc["nash"] = std::move(profiles);
  doc["worst_cost"] = number(report.worst_cost);
  doc["best_cost"] = number(report.best_cost);
  doc["optimum_cost"] = number(report.optimum_cost);
  doc["poa"] = number(report.poa);
  doc["pos"] = number(report.pos);
  return doc.dump(2);
}

}  // namespace pcng
