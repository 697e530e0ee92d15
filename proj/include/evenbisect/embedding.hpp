#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "evenbisect/graph.hpp"

namespace evenbisect {

inline constexpr double sparse_constant_floor = 1e-6;
inline constexpr double gamma_cap = 1.0;

struct GammaChoice {
  double gamma = 0.0;
  /// Coefficient of sum sqrt(d(v)) in the bisection bound: gamma/(1+gamma^2)/(2 pi).
  double c1 = 0.0;
};

/*
 * Largest gamma with C * gamma <= 1/pi, i.e. 1/pi - (C/2) gamma >= 1/(2 pi),
 * capped at 1. C is floored at 1e-6 so triangle-free inputs still get a
 * finite gamma (the cap then applies).
 */
inline GammaChoice choose_gamma(double sparse_constant) {
  if (!(sparse_constant >= 0.0))
    throw input_error("sparse-neighbourhood constant must be non-negative");
  const double c = std::max(sparse_constant, sparse_constant_floor);
  const double gamma = std::min(gamma_cap, 1.0 / (std::numbers::pi * c));
  return {gamma, gamma / (1.0 + gamma * gamma) / (2.0 * std::numbers::pi)};
}

/*
 * Implicit vectors x_v in R^V:
 *
 *   x_v(v) = 1,  x_v(u) = -gamma / sqrt(d(v)) for u in N(v),  0 otherwise,
 *
 * so ||x_v||^2 = 1 + gamma^2 and y_v = x_v / sqrt(1 + gamma^2). Isolated
 * vertices keep x_v = e_v and are orthogonal to everything. Nothing is
 * materialized; inner products come from degrees and codegrees.
 */
class Embedding {
public:
  Embedding(Graph &&, double) = delete; // keeps a pointer to the graph
  Embedding(const Graph &g, double gamma) : graph_(&g), gamma_(gamma) {
    if (!(gamma > 0.0))
      throw input_error("gamma must be positive");
    scale_.resize(g.vertex_count(), 0.0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) > 0)
        scale_[v] = gamma / std::sqrt(static_cast<double>(g.degree(v)));
  }

  const Graph &graph() const { return *graph_; }
  double gamma() const { return gamma_; }
  double norm_sq() const { return 1.0 + gamma_ * gamma_; }

  /// gamma / sqrt(d(v)); zero for isolated v.
  double coordinate_scale(Vertex v) const { return scale_[v]; }

  /// <x_u, x_v> given the codegree d(u,v).
  double raw_inner_product(Vertex u, Vertex v, std::size_t common) const {
    if (graph_->degree(u) == 0 || graph_->degree(v) == 0)
      return 0.0;
    double value = scale_[u] * scale_[v] * static_cast<double>(common);
    if (graph_->adjacent(u, v))
      value -= scale_[u] + scale_[v];
    return value;
  }

  /// <y_u, y_v>.
  double inner_product(Vertex u, Vertex v) const {
    graph_->check_vertex(u);
    graph_->check_vertex(v);
    if (u == v)
      throw input_error("inner_product needs two distinct vertices");
    return normalized(raw_inner_product(u, v, codegree(*graph_, u, v)));
  }

  double normalized(double raw) const { return std::clamp(raw / norm_sq(), -1.0, 1.0); }

  /// Visits every unordered pair {u, v} with u < v at distance 1 or 2 as
  /// fn(u, v, adjacent, codegree). Every other pair has inner product 0.
  template <typename Fn>
  void for_each_near_pair(Fn fn) const {
    const Graph &g = *graph_;
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> common(n, 0);
    std::vector<Vertex> touched;
    for (Vertex u = 0; u < n; ++u) {
      touched.clear();
      for (Vertex w : g.neighbors(u))
        for (Vertex v : g.neighbors(w)) {
          if (v <= u)
            continue;
          if (common[v]++ == 0)
            touched.push_back(v);
        }
      for (Vertex v : g.neighbors(u))
        if (v > u && common[v] == 0)
          touched.push_back(v);
      std::sort(touched.begin(), touched.end());
      for (Vertex v : touched) {
        fn(u, v, g.adjacent(u, v), common[v]);
        common[v] = 0;
      }
    }
  }

private:
  const Graph *graph_;
  double gamma_;
  std::vector<double> scale_;
};

struct SdpBound {
  double value = 0.0;
  double edge_arcsin_sum = 0.0; // sum over edges of arcsin <y_u, y_v>
  double pair_arcsin_sum = 0.0; // sum over all unordered pairs
  double radicand = 0.0;        // n + (4/pi) pair sum, before clamping
  bool radicand_clamped = false;
};

/*
 * Expected-size lower bound for hyperplane rounding followed by rebalancing:
 *
 *   m/2 - (1/pi) sum_E arcsin<y_u,y_v> - d sqrt(n + (4/pi) sum_pairs arcsin<y_u,y_v>)
 *
 * with d = 2m/n. A negative radicand is clamped to 0 and flagged.
 */
inline SdpBound sdp_bound(const Embedding &e) {
  const Graph &g = e.graph();
  SdpBound out;
  e.for_each_near_pair([&](Vertex u, Vertex v, bool adjacent, std::size_t common) {
    const double a = std::asin(e.normalized(e.raw_inner_product(u, v, common)));
    out.pair_arcsin_sum += a;
    if (adjacent)
      out.edge_arcsin_sum += a;
  });
  const double n = static_cast<double>(g.vertex_count());
  out.radicand = n + 4.0 / std::numbers::pi * out.pair_arcsin_sum;
  if (out.radicand < 0.0)
    out.radicand_clamped = true;
  out.value = static_cast<double>(g.edge_count()) / 2.0 -
              out.edge_arcsin_sum / std::numbers::pi -
              g.average_degree() * std::sqrt(std::max(out.radicand, 0.0));
  return out;
}

} // namespace evenbisect
