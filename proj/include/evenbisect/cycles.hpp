#pragma once

#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "evenbisect/graph.hpp"

namespace evenbisect {

namespace detail {

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

// BFS distances from `source` over vertices accepted by `allowed`.
template <typename Adjacency, typename Allowed>
std::vector<std::size_t> bfs_distances(const Adjacency &adj, std::size_t n, Vertex source,
                                       Allowed allowed) {
  std::vector<std::size_t> dist(n, unreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adj(v)) {
      if (dist[w] != unreachable || !allowed(w))
        continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

// Extends `path` to a simple path of `target_len` edges ending at `target`.
// A vertex w is only tried when dist[w] (to target) fits in the remaining budget.
template <typename Adjacency, typename Allowed>
bool extend_path(const Adjacency &adj, std::vector<Vertex> &path, std::vector<char> &on_path,
                 const std::vector<std::size_t> &dist, Vertex target, std::size_t target_len,
                 Allowed allowed) {
  const Vertex tail = path.back();
  const std::size_t used = path.size() - 1;
  if (used == target_len)
    return tail == target;
  const std::size_t left = target_len - used; // edges still to place
  for (Vertex w : adj(tail)) {
    if (on_path[w] || !allowed(w) || dist[w] == unreachable || dist[w] > left - 1)
      continue;
    if (w == target && left != 1)
      continue;
    path.push_back(w);
    on_path[w] = 1;
    if (extend_path(adj, path, on_path, dist, target, target_len, allowed))
      return true;
    on_path[w] = 0;
    path.pop_back();
  }
  return false;
}

} // namespace detail

/*
 * Simple path from `from` to `to` with exactly `length` edges, or nullopt.
 * `adj(v)` must return an iterable of neighbours of v; this lets incremental
 * builders query a graph that is still being assembled.
 */
template <typename Adjacency>
std::optional<std::vector<Vertex>> find_path_of_length(const Adjacency &adj, std::size_t n,
                                                       Vertex from, Vertex to,
                                                       std::size_t length) {
  if (from == to)
    return std::nullopt;
  auto any = [](Vertex) { return true; };
  const auto dist = detail::bfs_distances(adj, n, to, any);
  if (dist[from] == detail::unreachable || dist[from] > length)
    return std::nullopt;
  std::vector<Vertex> path{from};
  std::vector<char> on_path(n, 0);
  on_path[from] = 1;
  if (detail::extend_path(adj, path, on_path, dist, to, length, any))
    return path;
  return std::nullopt;
}

namespace detail {

inline bool close_cycle(const Graph &g, std::vector<Vertex> &path, std::vector<char> &on_path,
                        const std::vector<std::size_t> &dist, std::size_t length) {
  const Vertex root = path.front();
  const Vertex tail = path.back();
  const std::size_t placed = path.size();
  if (placed == length)
    return path[1] < tail && g.adjacent(tail, root);
  for (Vertex w : g.neighbors(tail)) {
    // w would sit at index `placed`; length - placed edges lead back to root
    if (w <= root || on_path[w] || dist[w] > length - placed)
      continue;
    path.push_back(w);
    on_path[w] = 1;
    if (close_cycle(g, path, on_path, dist, length))
      return true;
    on_path[w] = 0;
    path.pop_back();
  }
  return false;
}

} // namespace detail

/// A simple cycle on exactly `length` vertices, listed in cyclic order, or nullopt.
/// Each cycle is rooted at its smallest vertex and oriented so that the second
/// vertex is smaller than the last, so it is met once.
inline std::optional<std::vector<Vertex>> find_cycle_of_length(const Graph &g,
                                                               std::size_t length) {
  if (length < 3)
    throw input_error("cycle length must be at least 3");
  const std::size_t n = g.vertex_count();
  auto adj = [&g](Vertex v) { return g.neighbors(v); };
  std::vector<char> on_path(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (g.degree(root) < 2)
      continue;
    const auto dist = detail::bfs_distances(adj, n, root, [root](Vertex w) { return w > root; });
    std::vector<Vertex> path{root};
    on_path[root] = 1;
    const bool found = detail::close_cycle(g, path, on_path, dist, length);
    for (Vertex v : path)
      on_path[v] = 0;
    if (found)
      return path;
  }
  return std::nullopt;
}

inline bool contains_cycle_of_length(const Graph &g, std::size_t length) {
  return find_cycle_of_length(g, length).has_value();
}

} // namespace evenbisect
