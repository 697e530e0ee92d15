#pragma once

// Test-only helpers: random instance generators and brute-force oracles
// that deliberately avoid the library's own code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "evenbisect/evenbisect.hpp"

namespace evenbisect::testing {

/// Erdos-Renyi G(n, p).
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng))
        edges.push_back({u, v});
  return Graph::from_edge_list(n, edges);
}

/// Dense x_v with coordinates indexed by vertices.
inline std::vector<std::vector<double>> dense_vectors(const Graph &g, double gamma) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<double>> x(n, std::vector<double>(n, 0.0));
  for (Vertex v = 0; v < n; ++v) {
    x[v][v] = 1.0;
    const auto d = static_cast<double>(g.degree(v));
    for (Vertex u : g.neighbors(v))
      x[v][u] = -gamma / std::sqrt(d);
  }
  return x;
}

inline double dot(const std::vector<double> &a, const std::vector<double> &b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

/// Does some ordering of some `len`-subset form a cycle? Exhaustive.
inline bool brute_has_cycle(const Graph &g, std::size_t len) {
  const std::size_t n = g.vertex_count();
  if (len > n)
    return false;
  std::vector<char> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(len), 1);
  do {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
      if (pick[v])
        members.push_back(v);
    // permutations fixing the first member
    std::vector<Vertex> rest(members.begin() + 1, members.end());
    do {
      bool ok = g.adjacent(members[0], rest.front()) && g.adjacent(rest.back(), members[0]);
      for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
        ok = g.adjacent(rest[i], rest[i + 1]);
      if (ok)
        return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

/// Naive min-degree peeling: recompute degrees from scratch each round.
inline std::size_t naive_degeneracy(const Graph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> alive(n, 1);
  std::size_t worst = 0;
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t best_deg = n + 1;
    Vertex best = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v])
        continue;
      std::size_t d = 0;
      for (Vertex u : g.neighbors(v))
        d += alive[u] ? 1 : 0;
      if (d < best_deg) {
        best_deg = d;
        best = v;
      }
    }
    worst = std::max(worst, best_deg);
    alive[best] = 0;
  }
  return worst;
}

/// Exhaustive max bisection by iterating over all label vectors (n <= 16).
inline std::size_t brute_max_bisection(const Graph &g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto ones = static_cast<std::size_t>(std::popcount(mask));
    if (ones != n / 2 && ones != (n + 1) / 2)
      continue;
    std::size_t cut = 0;
    for (const Edge &e : g.edges())
      cut += ((mask >> e.u) ^ (mask >> e.v)) & 1u;
    best = std::max(best, cut);
  }
  return best;
}

inline bool is_connected(const Graph &g) {
  const std::size_t n = g.vertex_count();
  if (n == 0)
    return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n;
}

/// Disjoint union.
inline Graph disjoint_union(const Graph &a, const Graph &b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (const Edge &e : b.edges())
    edges.push_back({e.u + shift, e.v + shift});
  return Graph::from_edge_list(a.vertex_count() + b.vertex_count(), edges);
}

struct NaiveStep {
  std::size_t edges;
  std::size_t max_degree;
  double density;
};

// Rebuilds the graph after every deletion and recounts from scratch.
inline std::vector<NaiveStep> naive_removal(const Graph &g, double Lambda) {
  std::vector<char> alive(g.vertex_count(), 1);
  std::vector<NaiveStep> steps;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (alive[v])
        rest.push_back(v);
    const Subgraph sub = induced_subgraph(g, rest);
    std::size_t top = 0;
    for (Vertex v = 1; v < rest.size(); ++v)
      if (sub.graph.degree(v) > sub.graph.degree(static_cast<Vertex>(top)))
        top = v;
    const double x = static_cast<double>(sub.graph.edge_count()) /
                     std::pow(static_cast<double>(rest.size()), 1.5);
    steps.push_back({sub.graph.edge_count(), sub.graph.degree(static_cast<Vertex>(top)), x});
    if (x <= 1.0 / (2.0 * Lambda))
      break;
    alive[rest[top]] = 0;
  }
  return steps;
}

} // namespace evenbisect::testing
