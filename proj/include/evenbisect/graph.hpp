#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evenbisect/errors.hpp"

namespace evenbisect {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge &, const Edge &) = default;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/*
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is stored in compressed rows with each row sorted, so
 * neighbor queries are spans and adjacency tests are binary searches.
 * Edges are kept once with u < v, in lexicographic order.
 */
class Graph {
public:
  Graph() : offsets_(1, 0) {}

  /// Builds a simple graph; duplicate pairs (in either orientation) collapse.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const Edge &e : pairs) {
      if (e.u >= n || e.v >= n)
        throw input_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") has an endpoint outside [0, " + std::to_string(n) + ")");
      if (e.u == e.v)
        throw input_error("self-loop at vertex " + std::to_string(e.u));
      edges.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> pairs) {
    return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()));
  }

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool adjacent(Vertex u, Vertex v) const {
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  const std::vector<Edge> &edges() const { return edges_; }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < vertex_count(); ++v)
      best = std::max(best, degree(v));
    return best;
  }

  std::size_t min_degree() const {
    if (vertex_count() == 0)
      return 0;
    std::size_t best = degree(0);
    for (Vertex v = 1; v < vertex_count(); ++v)
      best = std::min(best, degree(v));
    return best;
  }

  /// 2m/n, zero for the empty graph.
  double average_degree() const {
    return vertex_count() == 0 ? 0.0
                               : 2.0 * static_cast<double>(edge_count()) /
                                     static_cast<double>(vertex_count());
  }

  void check_vertex(Vertex v) const {
    if (v >= vertex_count())
      throw input_error("vertex " + std::to_string(v) + " out of range [0, " +
                        std::to_string(vertex_count()) + ")");
  }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

private:
  Graph(std::size_t n, std::vector<Edge> sorted_edges)
      : offsets_(n + 1, 0), edges_(std::move(sorted_edges)) {
    for (const Edge &e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    targets_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge &e : edges_) {
      targets_[fill[e.u]++] = e.v;
      targets_[fill[e.v]++] = e.u;
    }
    for (Vertex v = 0; v < n; ++v)
      std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Edge> edges_;
};

struct DegreeStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  double avg_degree = 0.0;
  std::vector<std::size_t> degree_sequence;
};

inline DegreeStats degree_stats(const Graph &g) {
  DegreeStats s;
  s.degree_sequence.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    s.degree_sequence.push_back(g.degree(v));
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  s.avg_degree = g.average_degree();
  return s;
}

/// Induced subgraph plus the map from new ids to original ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original; // original[new_id]
};

/// New vertex i corresponds to members[i]; members must be distinct.
inline Subgraph induced_subgraph(const Graph &g, std::span<const Vertex> members) {
  constexpr Vertex absent = ~Vertex{0};
  std::vector<Vertex> local(g.vertex_count(), absent);
  for (std::size_t i = 0; i < members.size(); ++i) {
    g.check_vertex(members[i]);
    if (local[members[i]] != absent)
      throw input_error("vertex " + std::to_string(members[i]) + " listed twice");
    local[members[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge &e : g.edges())
    if (local[e.u] != absent && local[e.v] != absent)
      edges.push_back({local[e.u], local[e.v]});
  return {Graph::from_edge_list(members.size(), edges),
          std::vector<Vertex>(members.begin(), members.end())};
}

/// Number of edges with both endpoints in `members`.
inline std::size_t edges_within(const Graph &g, std::span<const Vertex> members) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : members)
    in[v] = 1;
  std::size_t count = 0;
  for (const Edge &e : g.edges())
    count += (in[e.u] && in[e.v]) ? 1 : 0;
  return count;
}

/// |N(u) ∩ N(v)|.
inline std::size_t codegree(const Graph &g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v)
    throw input_error("codegree needs two distinct vertices");
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t count = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

/// e(G[N(v)]).
inline std::size_t neighborhood_edge_count(const Graph &g, Vertex v) {
  g.check_vertex(v);
  std::size_t twice = 0;
  for (Vertex w : g.neighbors(v))
    twice += codegree(g, v, w);
  return twice / 2;
}

/// Smallest C with e(G[N(v)]) <= C d(v)^{3/2} for every v.
/// Vertices of degree <= 1 have an edgeless neighborhood and are skipped.
inline double sparse_neighborhood_constant(const Graph &g) {
  double worst = 0.0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto d = g.degree(v);
    if (d <= 1)
      continue;
    const auto inside = neighborhood_edge_count(g, v);
    worst = std::max(worst, static_cast<double>(inside) / std::pow(static_cast<double>(d), 1.5));
  }
  return worst;
}

} // namespace evenbisect
