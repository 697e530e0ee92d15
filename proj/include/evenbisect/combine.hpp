#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "evenbisect/bisection.hpp"
#include "evenbisect/errors.hpp"
#include "evenbisect/graph.hpp"
#include "evenbisect/rng.hpp"

namespace evenbisect {

namespace detail {

// gain[v] = cut change if v alone switched sides.
inline std::vector<long> flip_gains(const Graph &g, const std::vector<std::uint8_t> &side) {
  std::vector<long> gain(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex u : g.neighbors(v))
      gain[v] += side[u] == side[v] ? 1 : -1;
  return gain;
}

} // namespace detail

/*
 * Balance-preserving local search. Each step applies the best improving move
 * among: swapping a vertex of A with one of B, and (n odd only) moving a
 * vertex from the larger side to the smaller. Stops at a local optimum or
 * after `max_steps` moves. Returns the number of moves made.
 */
inline std::size_t improve_by_swaps(const Graph &g, Bisection &b, std::size_t max_steps) {
  const std::size_t n = g.vertex_count();
  std::size_t steps = 0;
  while (steps < max_steps) {
    const auto gain = detail::flip_gains(g, b.side);
    std::vector<Vertex> a_side;
    std::vector<Vertex> b_side;
    for (Vertex v = 0; v < n; ++v)
      (b.side[v] == 0 ? a_side : b_side).push_back(v);
    auto by_gain = [&gain](Vertex x, Vertex y) {
      return gain[x] != gain[y] ? gain[x] > gain[y] : x < y;
    };
    std::sort(a_side.begin(), a_side.end(), by_gain);
    std::sort(b_side.begin(), b_side.end(), by_gain);

    long best = 0;
    Vertex best_a = 0;
    Vertex best_b = 0;
    bool single = false;
    if (n % 2 == 1) {
      const auto &larger = a_side.size() > b_side.size() ? a_side : b_side;
      if (!larger.empty() && gain[larger.front()] > best) {
        best = gain[larger.front()];
        best_a = larger.front();
        single = true;
      }
    }
    // swap gain = gain[a] + gain[b] + 2 [a ~ b]; both lists are sorted, so a
    // row (or the whole scan) stops once even the +2 bonus cannot beat `best`.
    for (Vertex a : a_side) {
      if (b_side.empty() || gain[a] + gain[b_side.front()] + 2 <= best)
        break;
      for (Vertex bv : b_side) {
        const long bound = gain[a] + gain[bv] + 2;
        if (bound <= best)
          break;
        const long value = g.adjacent(a, bv) ? bound : bound - 2;
        if (value > best) {
          best = value;
          best_a = a;
          best_b = bv;
          single = false;
        }
      }
    }
    if (best <= 0)
      break;
    if (single) {
      b.side[best_a] ^= 1;
    } else {
      b.side[best_a] ^= 1;
      b.side[best_b] ^= 1;
    }
    ++steps;
  }
  b = make_bisection(g, std::move(b.side));
  return steps;
}

/*
 * Balanced bisection with cut >= m/2 on every input.
 *
 * Vertices are paired in descending-degree order (ties by id); each pair is
 * split across the sides in whichever orientation cuts more edges to the
 * vertices already placed (a coin from `seed` settles ties), and an odd
 * leftover goes last. Every edge to an earlier vertex is cut by exactly one
 * orientation and the pair's own edge by both, so the greedy phase alone
 * reaches m/2. A swap local search (at most 10n moves) then polishes it.
 */
inline Bisection balanced_local_bisection(const Graph &g, Seed seed) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  auto engine = make_engine(seed);
  std::bernoulli_distribution coin(0.5);
  constexpr std::uint8_t unplaced = 2;
  std::vector<std::uint8_t> side(n, unplaced);
  auto pull = [&](Vertex v, std::uint8_t s) {
    long toward = 0; // placed neighbours that end up across from v
    for (Vertex u : g.neighbors(v))
      if (side[u] != unplaced && side[u] != s)
        ++toward;
    return toward;
  };
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    const Vertex x = order[i];
    const Vertex y = order[i + 1];
    const long keep = pull(x, 0) + pull(y, 1);
    const long flip = pull(x, 1) + pull(y, 0);
    const bool flipped = flip > keep || (flip == keep && coin(engine));
    side[x] = flipped ? 1 : 0;
    side[y] = flipped ? 0 : 1;
  }
  if (n % 2 == 1) {
    const Vertex last = order.back();
    side[last] = pull(last, 0) >= pull(last, 1) ? 0 : 1;
  }
  Bisection b = make_bisection(g, std::move(side));
  improve_by_swaps(g, b, 10 * n);
  return b;
}

struct CombineResult {
  Bisection bisection;
  double surplus_in = 0.0;  // cut(bis_s) - e(S)/2
  double surplus_out = 0.0; // cut - m/2
  std::size_t repair_moved = 0;
  std::size_t chosen_cross = 0; // cross edges S-T cut by the chosen orientation
  std::size_t other_cross = 0;  // cross edges S-T cut by the other orientation
  double repair_degree_cap = 0.0; // 2 sqrt(m)
};

/*
 * Lifts a bisection of G[S] to all of G. T = V \ S is bisected with
 * balanced_local_bisection; of the two ways of gluing (A1 + A2, B1 + B2) and
 * (A1 + B2, B1 + A2) the one cutting more S-T edges is kept, which cuts at
 * least half of them. If the union is off by two, one vertex of degree at
 * most 2 sqrt(m) moves from the larger part, choosing the smallest loss.
 * Resulting cut >= m/2 + x - 2 sqrt(m) with x = cut(bis_s) - e(S)/2.
 *
 * `s[i]` is the original id of vertex i of the induced subgraph G[S].
 * Throws contract_breach if the larger part has no vertex of degree <= 2 sqrt(m).
 */
inline CombineResult combine(const Graph &g, std::span<const Vertex> s, const Bisection &bis_s,
                             Seed seed) {
  const std::size_t n = g.vertex_count();
  const Subgraph sub_s = induced_subgraph(g, s);
  if (!is_valid_bisection(sub_s.graph, bis_s))
    throw input_error("bis_s is not a valid bisection of G[S]");

  std::vector<char> in_s(n, 0);
  for (Vertex v : s)
    in_s[v] = 1;
  std::vector<Vertex> t;
  for (Vertex v = 0; v < n; ++v)
    if (!in_s[v])
      t.push_back(v);
  const Subgraph sub_t = induced_subgraph(g, t);
  const Bisection bis_t = balanced_local_bisection(sub_t.graph, seed);

  // side as seen from the S half; T labels optionally flipped
  std::vector<std::uint8_t> s_label(n, 0);
  std::vector<std::uint8_t> t_label(n, 0);
  for (std::size_t i = 0; i < s.size(); ++i)
    s_label[s[i]] = bis_s.side[i];
  for (std::size_t i = 0; i < t.size(); ++i)
    t_label[t[i]] = bis_t.side[i];

  std::size_t cross_same = 0; // cut S-T edges when T keeps its labels
  std::size_t cross_total = 0;
  for (const Edge &e : g.edges()) {
    if (in_s[e.u] == in_s[e.v])
      continue;
    ++cross_total;
    const Vertex sv = in_s[e.u] ? e.u : e.v;
    const Vertex tv = in_s[e.u] ? e.v : e.u;
    cross_same += s_label[sv] != t_label[tv] ? 1 : 0;
  }
  const std::size_t cross_flip = cross_total - cross_same;
  const bool flip_t = cross_flip > cross_same;

  std::vector<std::uint8_t> side(n, 0);
  for (Vertex v = 0; v < n; ++v)
    side[v] = in_s[v] ? s_label[v] : static_cast<std::uint8_t>(t_label[v] ^ (flip_t ? 1 : 0));

  CombineResult out;
  out.chosen_cross = flip_t ? cross_flip : cross_same;
  out.other_cross = flip_t ? cross_same : cross_flip;
  out.repair_degree_cap = 2.0 * std::sqrt(static_cast<double>(g.edge_count()));

  Bisection joined = make_bisection(g, std::move(side));
  if (!joined.balanced()) {
    const std::uint8_t larger = joined.size_a > joined.size_b ? 0 : 1;
    const auto gain = detail::flip_gains(g, joined.side);
    long best_gain = std::numeric_limits<long>::min();
    Vertex mover = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (joined.side[v] != larger ||
          static_cast<double>(g.degree(v)) > out.repair_degree_cap)
        continue;
      if (gain[v] > best_gain) {
        best_gain = gain[v];
        mover = v;
      }
    }
    if (best_gain == std::numeric_limits<long>::min())
      throw contract_breach("no vertex of degree <= 2 sqrt(m) in the larger part");
    joined.side[mover] ^= 1;
    joined = make_bisection(g, std::move(joined.side));
    out.repair_moved = 1;
  }

  const std::size_t e_s = sub_s.graph.edge_count();
  out.surplus_in = static_cast<double>(bis_s.cut) - static_cast<double>(e_s) / 2.0;
  out.surplus_out = static_cast<double>(joined.cut) - static_cast<double>(g.edge_count()) / 2.0;
  out.bisection = std::move(joined);
  return out;
}

} // namespace evenbisect
