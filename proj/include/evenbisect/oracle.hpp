#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "evenbisect/bisection.hpp"
#include "evenbisect/errors.hpp"
#include "evenbisect/graph.hpp"
#include "evenbisect/rng.hpp"

namespace evenbisect {

inline constexpr std::size_t oracle_vertex_limit = 24;

struct ExactResult {
  std::size_t optimum = 0;
  Bisection witness; // for max-cut the witness need not be balanced
  std::uint64_t enumerated = 0;
};

namespace detail {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency_masks(const Graph &g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const Edge &e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

// Cut change when v switches sides under the current assignment `ones`
// (bit set = side 1).
inline long flip_delta(const std::vector<Mask> &adj, Mask ones, Mask all, Vertex v) {
  const Mask same = (ones >> v) & 1 ? ones : (all & ~ones);
  const long same_count = std::popcount(adj[v] & same);
  const long total = std::popcount(adj[v]);
  return same_count - (total - same_count);
}

// Lexicographic order on side vectors (vertex 0 first) for bit masks.
inline bool lex_smaller(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0)
    return false;
  const Mask low = diff & (~diff + 1);
  return (a & low) == 0;
}

inline void guard_size(const Graph &g) {
  if (g.vertex_count() > oracle_vertex_limit)
    throw refusal_error("exact oracle refuses n = " + std::to_string(g.vertex_count()) +
                        " (limit " + std::to_string(oracle_vertex_limit) + ")");
}

inline ExactResult finish(const Graph &g, Mask best, std::size_t optimum,
                          std::uint64_t enumerated) {
  std::vector<std::uint8_t> side(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    side[v] = static_cast<std::uint8_t>((best >> v) & 1);
  ExactResult out;
  out.optimum = optimum;
  out.witness = make_bisection(g, std::move(side));
  out.enumerated = enumerated;
  return out;
}

} // namespace detail

/*
 * Maximum bisection by enumerating every floor(n/2)-subset as side 1
 * (Gosper's hack), updating the cut incrementally for the bits that change
 * between consecutive subsets. Ties keep the lexicographically smallest
 * side vector. Refuses n > 24.
 */
inline ExactResult exact_max_bisection(const Graph &g) {
  detail::guard_size(g);
  using detail::Mask;
  const std::size_t n = g.vertex_count();
  const auto adj = detail::adjacency_masks(g);
  const Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  const std::size_t k = n / 2;

  Mask cur = k == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << k) - 1);
  long cut = 0;
  for (const Edge &e : g.edges())
    cut += (((cur >> e.u) ^ (cur >> e.v)) & 1) ? 1 : 0;

  Mask best = cur;
  long best_cut = cut;
  std::uint64_t enumerated = 1;
  if (k > 0) {
    while (true) {
      // next subset of the same size
      const std::uint64_t c = cur;
      const std::uint64_t low = c & (~c + 1);
      const std::uint64_t ripple = c + low;
      const std::uint64_t next = (((ripple ^ c) >> 2) / low) | ripple;
      if (next > all)
        break;
      Mask changed = cur ^ static_cast<Mask>(next);
      while (changed) {
        const auto v = static_cast<Vertex>(std::countr_zero(changed));
        cut += detail::flip_delta(adj, cur, all, v);
        cur ^= Mask{1} << v;
        changed &= changed - 1;
      }
      ++enumerated;
      if (cut > best_cut || (cut == best_cut && detail::lex_smaller(cur, best))) {
        best_cut = cut;
        best = cur;
      }
    }
  }
  return detail::finish(g, best, static_cast<std::size_t>(best_cut), enumerated);
}

/*
 * Maximum cut over all bipartitions. Vertex 0 stays on side 0 (each
 * partition is met once, as the lexicographically smaller of the pair) and
 * the remaining n-1 labels walk a Gray code, one flip per step.
 */
inline ExactResult exact_max_cut(const Graph &g) {
  detail::guard_size(g);
  using detail::Mask;
  const std::size_t n = g.vertex_count();
  if (n == 0)
    return detail::finish(g, 0, 0, 1);
  const auto adj = detail::adjacency_masks(g);
  const Mask all = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  const std::uint64_t states = std::uint64_t{1} << (n - 1);

  Mask cur = 0;
  long cut = 0;
  Mask best = 0;
  long best_cut = 0;
  for (std::uint64_t i = 1; i < states; ++i) {
    const auto bit = static_cast<Vertex>(std::countr_zero(i)); // Gray code flip position
    const Vertex v = bit + 1;
    cut += detail::flip_delta(adj, cur, all, v);
    cur ^= Mask{1} << v;
    if (cut > best_cut || (cut == best_cut && detail::lex_smaller(cur, best))) {
      best_cut = cut;
      best = cur;
    }
  }
  return detail::finish(g, best, static_cast<std::size_t>(best_cut), states);
}

/*
 * Monte-Carlo frequency with which two unit vectors of inner product rho
 * both land on the non-negative side of a random hyperplane through the
 * origin. The exact value is 1/4 + arcsin(rho)/(2 pi).
 */
inline double same_side_probability_mc(double rho, std::size_t trials, Seed seed) {
  if (!(std::abs(rho) <= 1.0))
    throw input_error("rho must lie in [-1, 1]");
  if (trials == 0)
    throw input_error("need at least one trial");
  const double ux = 1.0;
  const double uy = 0.0;
  const double vx = rho;
  const double vy = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  auto engine = make_engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const double wx = normal(engine);
    const double wy = normal(engine);
    if (wx * ux + wy * uy >= 0.0 && wx * vx + wy * vy >= 0.0)
      ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

inline double same_side_probability_exact(double rho) {
  return 0.25 + std::asin(rho) / (2.0 * std::numbers::pi);
}

} // namespace evenbisect
