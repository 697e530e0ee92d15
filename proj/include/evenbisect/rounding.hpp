#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "evenbisect/bisection.hpp"
#include "evenbisect/embedding.hpp"
#include "evenbisect/rng.hpp"

namespace evenbisect {

/// One hyperplane rounding together with what the rebalance step did.
struct Rounding {
  Bisection bisection;
  std::size_t pre_balance_cut = 0; // e(X, Y)
  std::size_t pre_balance_x = 0;   // |X|
  std::size_t moved = 0;
  std::size_t max_moved_degree = 0;
};

/*
 * Draws w with i.i.d. standard normal coordinates (uniform direction; the
 * norm is irrelevant to signs) and puts v in X iff <w, x_v> >= 0, where
 *
 *   <w, x_v> = w_v - gamma/sqrt(d(v)) * sum_{u in N(v)} w_u.
 *
 * Then moves the lowest-degree vertices (ties: lowest id) out of the larger
 * part until |X| = floor(n/2). X becomes side 0.
 */
inline Rounding hyperplane_round_traced(const Embedding &e, Seed seed) {
  const Graph &g = e.graph();
  const std::size_t n = g.vertex_count();
  auto engine = make_engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> w(n);
  for (auto &c : w)
    c = normal(engine);

  std::vector<std::uint8_t> side(n, 1);
  std::size_t in_x = 0;
  for (Vertex v = 0; v < n; ++v) {
    double neighbour_sum = 0.0;
    for (Vertex u : g.neighbors(v))
      neighbour_sum += w[u];
    const double projection = w[v] - e.coordinate_scale(v) * neighbour_sum;
    if (projection >= 0.0) {
      side[v] = 0;
      ++in_x;
    }
  }

  Rounding out;
  out.pre_balance_x = in_x;
  out.pre_balance_cut = count_cut(g, side);

  const std::size_t target = n / 2;
  if (in_x != target) {
    const std::uint8_t from = in_x > target ? 0 : 1;
    const std::size_t excess = in_x > target ? in_x - target : target - in_x;
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n; ++v)
      if (side[v] == from)
        pool.push_back(v);
    std::stable_sort(pool.begin(), pool.end(),
                     [&g](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    for (std::size_t i = 0; i < excess; ++i) {
      side[pool[i]] = static_cast<std::uint8_t>(1 - from);
      out.max_moved_degree = std::max(out.max_moved_degree, g.degree(pool[i]));
    }
    out.moved = excess;
  }
  out.bisection = make_bisection(g, std::move(side));
  return out;
}

inline Bisection hyperplane_round(const Embedding &e, Seed seed) {
  return hyperplane_round_traced(e, seed).bisection;
}

struct RoundingStats {
  std::size_t trials = 0;
  double mean_cut = 0.0;
  double stddev_cut = 0.0; // sample standard deviation
  std::size_t min_cut = 0;
  std::size_t max_cut = 0;
  std::size_t best_trial = 0;
  /// Trials whose rebalance lost more than moved * max_moved_degree edges.
  std::size_t rebalance_violations = 0;

  double standard_error() const {
    return trials == 0 ? 0.0 : stddev_cut / std::sqrt(static_cast<double>(trials));
  }
};

struct BestRounding {
  Bisection bisection;
  RoundingStats stats;
};

/*
 * Best of `trials` independent roundings. Trial i uses stream_seed(seed, i),
 * so trial 0 equals hyperplane_round(e, seed). Trials may run on several
 * threads; the winner is chosen by better_bisection, a total order, so the
 * result does not depend on scheduling.
 */
inline BestRounding best_of_rounds(const Embedding &e, std::size_t trials, Seed seed,
                                   unsigned threads = 0) {
  if (trials == 0)
    throw input_error("best_of_rounds needs at least one trial");
  if (threads == 0)
    threads = worker_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));

  std::vector<std::size_t> cuts(trials);
  std::vector<char> rebalance_ok(trials, 1);
  std::vector<std::optional<Bisection>> best(threads);

  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < trials; i += threads) {
      Rounding r = hyperplane_round_traced(e, stream_seed(seed, i));
      cuts[i] = r.bisection.cut;
      rebalance_ok[i] = r.bisection.cut + r.moved * r.max_moved_degree >= r.pre_balance_cut;
      if (!best[worker] || better_bisection(r.bisection, *best[worker]))
        best[worker] = std::move(r.bisection);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(work, t);
  }

  BestRounding out;
  for (auto &candidate : best)
    if (candidate && (out.bisection.side.empty() || better_bisection(*candidate, out.bisection)))
      out.bisection = std::move(*candidate);

  RoundingStats &s = out.stats;
  s.trials = trials;
  s.min_cut = *std::min_element(cuts.begin(), cuts.end());
  s.max_cut = *std::max_element(cuts.begin(), cuts.end());
  s.best_trial = static_cast<std::size_t>(std::find(cuts.begin(), cuts.end(), s.max_cut) - cuts.begin());
  double sum = 0.0;
  for (auto c : cuts)
    sum += static_cast<double>(c);
  s.mean_cut = sum / static_cast<double>(trials);
  if (trials > 1) {
    double sq = 0.0;
    for (auto c : cuts)
      sq += (static_cast<double>(c) - s.mean_cut) * (static_cast<double>(c) - s.mean_cut);
    s.stddev_cut = std::sqrt(sq / static_cast<double>(trials - 1));
  }
  s.rebalance_violations =
      static_cast<std::size_t>(std::count(rebalance_ok.begin(), rebalance_ok.end(), 0));
  return out;
}

} // namespace evenbisect
