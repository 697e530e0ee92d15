#pragma once

#include <cmath>
#include <cstddef>

#include "evenbisect/degeneracy.hpp"
#include "evenbisect/graph.hpp"

namespace evenbisect {

/*
 * Degree-sequence floor for C_2k-free graphs:
 *
 *   sum_v sqrt(d(v)) >= sum_v sqrt(d+(v)) >= sum_v d+(v)/sqrt(D) = m/sqrt(D)
 *                     = m^{(2k+1)/(2k+2)} / sqrt(200k),
 *
 * with D = 200k m^{1/(k+1)} and d+ the back degrees of a degeneracy order.
 * The middle link needs every d+(v) <= D, which a C_2k-free graph satisfies
 * because it is (D-1)-degenerate.
 */
struct ShearerFloor {
  double floor = 0.0;
  double degeneracy_cap = 0.0; // D
  std::size_t degeneracy = 0;
  bool degeneracy_within_cap = true; // degeneracy <= D - 1
  double sum_sqrt_degree = 0.0;
  double sum_sqrt_back_degree = 0.0;
  double back_degree_over_sqrt_cap = 0.0; // sum d+(v) / sqrt(D) = m / sqrt(D)
  bool link_degree_vs_back = true;
  bool link_back_vs_cap = true;
  bool link_cap_vs_floor = true;

  bool chain_holds() const { return link_degree_vs_back && link_back_vs_cap && link_cap_vs_floor; }
};

inline ShearerFloor shearer_floor(const Graph &g, int k) {
  if (k < 2)
    throw input_error("shearer_floor needs k >= 2");
  ShearerFloor out;
  const double m = static_cast<double>(g.edge_count());
  if (g.edge_count() == 0)
    return out;
  const double kk = static_cast<double>(k);
  out.floor = std::pow(m, (2 * kk + 1) / (2 * kk + 2)) / std::sqrt(200 * kk);
  out.degeneracy_cap = 200 * kk * std::pow(m, 1 / (kk + 1));

  const DegeneracyOrder order = degeneracy_order(g);
  out.degeneracy = order.degeneracy;
  out.degeneracy_within_cap = static_cast<double>(order.degeneracy) <= out.degeneracy_cap - 1;
  std::size_t back_total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out.sum_sqrt_degree += std::sqrt(static_cast<double>(g.degree(v)));
    out.sum_sqrt_back_degree += std::sqrt(static_cast<double>(order.back_degree[v]));
    back_total += order.back_degree[v];
  }
  out.back_degree_over_sqrt_cap = static_cast<double>(back_total) / std::sqrt(out.degeneracy_cap);

  constexpr double slack = 1e-9;
  out.link_degree_vs_back = out.sum_sqrt_degree + slack >= out.sum_sqrt_back_degree;
  out.link_back_vs_cap = out.sum_sqrt_back_degree + slack >= out.back_degree_over_sqrt_cap;
  out.link_cap_vs_floor =
      std::abs(out.back_degree_over_sqrt_cap - out.floor) <= slack * std::max(1.0, out.floor);
  return out;
}

} // namespace evenbisect
