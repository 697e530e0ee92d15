#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "evenbisect/graph.hpp"

namespace evenbisect {

/*
 * Vertex ordering v_1..v_n in which every vertex has at most `degeneracy`
 * neighbours earlier in the order. back_degree[v] counts those earlier
 * neighbours, so the back degrees sum to m.
 */
struct DegeneracyOrder {
  std::vector<Vertex> order;
  std::size_t degeneracy = 0;
  std::vector<std::size_t> back_degree; // indexed by vertex id
};

/// Min-degree peeling with a lazy bucket queue, reversed. Back degrees are
/// the exact remaining degrees at removal time.
inline DegeneracyOrder degeneracy_order(const Graph &g) {
  const std::size_t n = g.vertex_count();
  DegeneracyOrder out;
  out.back_degree.assign(n, 0);
  if (n == 0)
    return out;

  std::vector<std::size_t> deg(n);
  std::vector<std::vector<Vertex>> buckets(g.max_degree() + 1);
  for (std::size_t i = n; i-- > 0;) {
    const auto v = static_cast<Vertex>(i);
    deg[v] = g.degree(v);
    buckets[deg[v]].push_back(v);
  }
  std::vector<char> removed(n, 0);
  std::vector<Vertex> peel;
  peel.reserve(n);
  std::size_t level = 0;
  while (peel.size() < n) {
    while (buckets[level].empty())
      ++level;
    const Vertex v = buckets[level].back();
    buckets[level].pop_back();
    if (removed[v] || deg[v] != level)
      continue; // stale entry
    removed[v] = 1;
    peel.push_back(v);
    out.back_degree[v] = deg[v];
    out.degeneracy = std::max(out.degeneracy, deg[v]);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u])
        continue;
      --deg[u];
      buckets[deg[u]].push_back(u);
    }
    if (level > 0)
      --level;
  }
  out.order.assign(peel.rbegin(), peel.rend());
  return out;
}

} // namespace evenbisect
