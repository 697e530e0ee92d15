#pragma once

#include <cmath>
#include <cstddef>

#include <json.hpp>

#include "evenbisect/bisection.hpp"
#include "evenbisect/embedding.hpp"
#include "evenbisect/graph.hpp"
#include "evenbisect/shearer.hpp"

namespace evenbisect {

struct BoundConstants {
  double gamma = 0.0;
  double sparse_c = 0.0;       // measured sparse-neighbourhood constant C
  double c1 = 0.0;             // gamma/(1+gamma^2)/(2 pi)
  double degeneracy_cap = 0.0; // D = 200k m^{1/(k+1)}
};

/// Every lower bound the analysis offers for one graph, next to what was achieved.
struct BoundReport {
  int k = 2;
  std::size_t n = 0;
  std::size_t m = 0;
  double m_half = 0.0;
  double sdp_bound = 0.0;
  bool sdp_radicand_clamped = false;
  double shearer_floor = 0.0;
  /// m/2 + c1 sum sqrt(d(v)) - 2m sqrt(Delta/n)
  double degree_sequence_bound = 0.0;
  double target_exponent = 0.0; // (2k+1)/(2k+2)
  double target_scale = 0.0;    // m^{target_exponent}
  std::size_t achieved = 0;
  BoundConstants constants;

  double surplus() const { return static_cast<double>(achieved) - m_half; }
  /// (achieved - m/2) / m^{(2k+1)/(2k+2)}; zero when m = 0.
  double beta() const { return target_scale > 0.0 ? surplus() / target_scale : 0.0; }
};

inline double target_exponent(int k) { return (2.0 * k + 1.0) / (2.0 * k + 2.0); }

/// Fills every field except `achieved`, using the embedding built from C.
inline BoundReport evaluate_bounds(const Graph &g, int k) {
  BoundReport r;
  r.k = k;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.m_half = static_cast<double>(r.m) / 2.0;
  r.target_exponent = target_exponent(k);
  r.target_scale = r.m == 0 ? 0.0 : std::pow(static_cast<double>(r.m), r.target_exponent);

  r.constants.sparse_c = sparse_neighborhood_constant(g);
  const GammaChoice choice = choose_gamma(r.constants.sparse_c);
  r.constants.gamma = choice.gamma;
  r.constants.c1 = choice.c1;

  const SdpBound sdp = sdp_bound(Embedding(g, choice.gamma));
  r.sdp_bound = sdp.value;
  r.sdp_radicand_clamped = sdp.radicand_clamped;

  if (r.m > 0) {
    const ShearerFloor sf = shearer_floor(g, k);
    r.shearer_floor = sf.floor;
    r.constants.degeneracy_cap = sf.degeneracy_cap;
    const double max_deg = static_cast<double>(g.max_degree());
    r.degree_sequence_bound =
        r.m_half + choice.c1 * sf.sum_sqrt_degree -
        2.0 * static_cast<double>(r.m) * std::sqrt(max_deg / static_cast<double>(r.n));
  } else {
    r.degree_sequence_bound = 0.0;
  }
  return r;
}

inline nlohmann::json to_json(const BoundReport &r) {
  return {
      {"k", r.k},
      {"n", r.n},
      {"m", r.m},
      {"m_half", sig12(r.m_half)},
      {"sdp_bound", sig12(r.sdp_bound)},
      {"sdp_radicand_clamped", r.sdp_radicand_clamped},
      {"shearer_floor", sig12(r.shearer_floor)},
      {"degree_sequence_bound", sig12(r.degree_sequence_bound)},
      {"target_exponent", sig12(r.target_exponent)},
      {"achieved", r.achieved},
      {"surplus", sig12(r.surplus())},
      {"beta", sig12(r.beta())},
      {"constants",
       {{"gamma", sig12(r.constants.gamma)},
        {"sparse_c", sig12(r.constants.sparse_c)},
        {"c1", sig12(r.constants.c1)},
        {"degeneracy_cap", sig12(r.constants.degeneracy_cap)}}},
  };
}

} // namespace evenbisect
