#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "evenbisect/cycles.hpp"
#include "evenbisect/errors.hpp"
#include "evenbisect/graph.hpp"
#include "evenbisect/rng.hpp"

namespace evenbisect {

inline constexpr unsigned max_field_order = 31;

inline bool is_prime(unsigned q) {
  if (q < 2)
    return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0)
      return false;
  return true;
}

namespace detail {

using Point = std::array<unsigned, 3>;

inline void check_field(unsigned q) {
  if (!is_prime(q))
    throw input_error("q = " + std::to_string(q) + " is not prime");
  if (q > max_field_order)
    throw input_error("q = " + std::to_string(q) + " exceeds " + std::to_string(max_field_order));
}

// Points of PG(2, q) in normalized form: first non-zero coordinate is 1.
inline std::vector<Point> projective_points(unsigned q) {
  std::vector<Point> pts;
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      pts.push_back({1, a, b});
  for (unsigned b = 0; b < q; ++b)
    pts.push_back({0, 1, b});
  pts.push_back({0, 0, 1});
  return pts;
}

inline unsigned dot_mod(const Point &x, const Point &y, unsigned q) {
  return (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q;
}

} // namespace detail

/*
 * Erdos-Renyi polarity graph ER_q: the q^2+q+1 points of PG(2, q), with
 * distinct u, v adjacent iff u . v = 0. C4-free, with q+1 absolute points
 * (u . u = 0) of degree q and q^2 points of degree q+1; m = q(q+1)^2/2.
 */
inline Graph polarity_graph(unsigned q) {
  detail::check_field(q);
  const auto pts = detail::projective_points(q);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < pts.size(); ++i)
    for (Vertex j = i + 1; j < pts.size(); ++j)
      if (detail::dot_mod(pts[i], pts[j], q) == 0)
        edges.push_back({i, j});
  return Graph::from_edge_list(pts.size(), edges);
}

/// Point-line incidence graph of PG(2, q): points are 0..P-1, lines P..2P-1.
/// (q+1)-regular, bipartite, girth 6. q = 2 gives the Heawood graph.
inline Graph incidence_graph_plane(unsigned q) {
  detail::check_field(q);
  const auto pts = detail::projective_points(q);
  const auto count = static_cast<Vertex>(pts.size());
  std::vector<Edge> edges;
  for (Vertex p = 0; p < count; ++p)
    for (Vertex l = 0; l < count; ++l)
      if (detail::dot_mod(pts[p], pts[l], q) == 0)
        edges.push_back({p, count + l});
  return Graph::from_edge_list(2 * pts.size(), edges);
}

/// K_{a,b} with the a-side on vertices 0..a-1.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0)
    throw input_error("complete_bipartite needs both sides non-empty");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      edges.push_back({i, static_cast<Vertex>(a + j)});
  return Graph::from_edge_list(a + b, edges);
}

/*
 * Random C_2k-free graph: all vertex pairs in a seeded random order, each
 * kept only if no path with 2k-1 edges already joins its endpoints (that
 * path plus the new edge would be a C_2k). Stops at target_m edges or once
 * every pair has been tried; the result may therefore have fewer edges.
 */
inline Graph random_c2k_free(std::size_t n, std::size_t target_m, int k, Seed seed) {
  if (n > 200)
    throw input_error("random_c2k_free supports n <= 200");
  if (k < 2 || k > 5)
    throw input_error("random_c2k_free supports k in {2,3,4,5}");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      pairs.push_back({u, v});
  auto engine = make_engine(seed);
  std::shuffle(pairs.begin(), pairs.end(), engine);

  std::vector<std::vector<Vertex>> adj(n);
  auto neighbours = [&adj](Vertex v) -> const std::vector<Vertex> & { return adj[v]; };
  std::vector<Edge> kept;
  const auto path_edges = static_cast<std::size_t>(2 * k - 1);
  for (const Edge &e : pairs) {
    if (kept.size() >= target_m)
      break;
    if (find_path_of_length(neighbours, n, e.u, e.v, path_edges))
      continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    kept.push_back(e);
  }
  return Graph::from_edge_list(n, kept);
}

enum class ClassicName { petersen, heawood, cycle, path, complete, tutte_coxeter };

inline ClassicName parse_classic(const std::string &name) {
  if (name == "petersen")
    return ClassicName::petersen;
  if (name == "heawood")
    return ClassicName::heawood;
  if (name == "cycle")
    return ClassicName::cycle;
  if (name == "path")
    return ClassicName::path;
  if (name == "complete")
    return ClassicName::complete;
  if (name == "tutte_coxeter" || name == "tutte-coxeter")
    return ClassicName::tutte_coxeter;
  throw input_error("unknown classic graph '" + name + "'");
}

/// `length` is the vertex count for cycle, path and complete; ignored otherwise.
inline Graph classic(ClassicName name, std::size_t length = 0) {
  std::vector<Edge> edges;
  switch (name) {
  case ClassicName::petersen:
    for (Vertex i = 0; i < 5; ++i) {
      edges.push_back({i, (i + 1) % 5});
      edges.push_back({i, i + 5});
      edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph::from_edge_list(10, edges);
  case ClassicName::heawood:
    return incidence_graph_plane(2);
  case ClassicName::cycle:
    if (length < 3)
      throw input_error("cycle needs at least 3 vertices");
    for (Vertex i = 0; i < length; ++i)
      edges.push_back({i, static_cast<Vertex>((i + 1) % length)});
    return Graph::from_edge_list(length, edges);
  case ClassicName::path:
    for (Vertex i = 0; i + 1 < length; ++i)
      edges.push_back({i, i + 1});
    return Graph::from_edge_list(length, edges);
  case ClassicName::complete:
    for (Vertex i = 0; i < length; ++i)
      for (Vertex j = i + 1; j < length; ++j)
        edges.push_back({i, j});
    return Graph::from_edge_list(length, edges);
  case ClassicName::tutte_coxeter: {
    // LCF [-13, -9, 7, -7, 9, 13]^5
    constexpr int lcf[] = {-13, -9, 7, -7, 9, 13};
    for (int i = 0; i < 30; ++i) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % 30)});
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + lcf[i % 6] + 30) % 30)});
    }
    return Graph::from_edge_list(30, edges);
  }
  }
  throw input_error("unknown classic graph");
}

} // namespace evenbisect
