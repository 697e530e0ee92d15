#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "evenbisect/bisection.hpp"
#include "evenbisect/bounds.hpp"
#include "evenbisect/combine.hpp"
#include "evenbisect/embedding.hpp"
#include "evenbisect/errors.hpp"
#include "evenbisect/graph.hpp"
#include "evenbisect/rng.hpp"
#include "evenbisect/rounding.hpp"
#include "evenbisect/turan.hpp"

namespace evenbisect {

/*
 * Constants of the end-to-end drivers.
 *
 * The proof constants follow from assuming the worst sparse-neighbourhood
 * constant a C_2k-free graph can have, C = k:
 *
 *   gamma = 1/(pi k),  c1 = gamma/(1+gamma^2)/(2 pi),  c = c1^2/(3200k),
 *   Lambda1 = (2^{10/3}/c)^{3/4} + 1,  lambda = (8/c)^{3/4},
 *   Lambda2 = least x with f(x) <= 1/2,  f(x) = 8/(c^{3/2} x) + 64/(c x^{1/3}),
 *   Lambda = max(Lambda1, Lambda2).
 *
 * These are tiny (c ~ 1e-7) and make every asymptotic gate degenerate at
 * desk scale, so degree-threshold decisions use `degree_gate` instead of c.
 */
struct PipelineConfig {
  int k = 2;
  double gamma = 0.0;
  double c1 = 0.0;
  double c = 0.0;
  double c_dense = 0.0; // 1/(8k), dense-core surplus rate, reported only
  double Lambda1 = 0.0;
  double Lambda2 = 0.0;
  double Lambda = 0.0;
  double lambda_small = 0.0;
  double degree_gate = 2.0;
  double eta = 0.01;
  std::size_t trials = 200;
  Seed seed = default_seed;

  double f(double x) const {
    return 8.0 / (std::pow(c, 1.5) * x) + 64.0 / (c * std::cbrt(x));
  }

  static PipelineConfig make(int k, std::size_t trials = 200, Seed seed = default_seed,
                             double eta = 0.01, double degree_gate = 2.0) {
    if (k < 2)
      throw input_error("k must be at least 2");
    if (trials == 0)
      throw input_error("trials must be positive");
    if (!(eta > 0.0 && eta < 1.0))
      throw input_error("eta must lie in (0, 1)");
    if (!(degree_gate > 0.0))
      throw input_error("degree gate must be positive");
    PipelineConfig cfg;
    cfg.k = k;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.eta = eta;
    cfg.degree_gate = degree_gate;
    const GammaChoice choice = choose_gamma(static_cast<double>(k));
    cfg.gamma = choice.gamma;
    cfg.c1 = choice.c1;
    cfg.c = cfg.c1 * cfg.c1 / (3200.0 * k);
    cfg.c_dense = 1.0 / (8.0 * k);
    cfg.Lambda1 = std::pow(std::pow(2.0, 10.0 / 3.0) / cfg.c, 0.75) + 1.0;
    cfg.lambda_small = std::pow(8.0 / cfg.c, 0.75);
    cfg.Lambda2 = cfg.least_x_with_f_at_most_half();
    cfg.Lambda = std::max(cfg.Lambda1, cfg.Lambda2);
    return cfg;
  }

private:
  // f is strictly decreasing; bisect in log space, keep the side with f <= 1/2.
  double least_x_with_f_at_most_half() const {
    double lo = 1.0;
    double hi = 1.0;
    while (f(hi) > 0.5)
      hi *= 2.0;
    while (f(lo) <= 0.5)
      lo /= 2.0;
    for (int i = 0; i < 400 && hi / lo - 1.0 > 1e-13; ++i) {
      const double mid = std::sqrt(lo * hi);
      (f(mid) <= 0.5 ? hi : lo) = mid;
    }
    return hi;
  }
};

// ---------------------------------------------------------------------------
// Low-max-degree branch

struct LowDegreeResult {
  Bisection bisection;
  BoundReport bounds;
  RoundingStats stats;
};

/// Embedding with gamma from the measured sparse constant, best of cfg.trials roundings.
inline LowDegreeResult round_with_embedding(const Graph &g, int k, std::size_t trials, Seed seed) {
  LowDegreeResult out;
  out.bounds = evaluate_bounds(g, k);
  const Embedding e(g, out.bounds.constants.gamma);
  BestRounding best = best_of_rounds(e, trials, seed);
  out.bisection = std::move(best.bisection);
  out.stats = best.stats;
  out.bounds.achieved = out.bisection.cut;
  return out;
}

/// Delta <= gate * n / m^{1/(k+1)}; always true for edgeless graphs.
inline double low_degree_threshold(const Graph &g, int k, double gate) {
  if (g.edge_count() == 0)
    return std::numeric_limits<double>::infinity();
  return gate * static_cast<double>(g.vertex_count()) /
         std::pow(static_cast<double>(g.edge_count()), 1.0 / (k + 1.0));
}

inline LowDegreeResult bisect_low_max_degree(const Graph &g, int k, const PipelineConfig &cfg) {
  const double threshold = low_degree_threshold(g, k, cfg.degree_gate);
  if (static_cast<double>(g.max_degree()) > threshold)
    throw refusal_error("max degree " + std::to_string(g.max_degree()) + " exceeds " +
                        format_sig12(threshold) + " = gate * n / m^{1/(k+1)}");
  return round_with_embedding(g, k, cfg.trials, cfg.seed);
}

// ---------------------------------------------------------------------------
// Degree-threshold split and dense core

struct SplitDiagnostics {
  double D = 0.0;
  std::vector<Vertex> A; // d(v) >= D
  std::vector<Vertex> B;
  std::size_t e_A = 0;
  std::size_t e_B = 0;
  std::size_t e_AB = 0;
  double e_A_cap = 0.0;  // 100k |A|^{1+1/k}
  double e_AB_cap = 0.0; // bipartite cap with a = |A|, b = n
};

inline SplitDiagnostics high_degree_split(const Graph &g, double D, int k) {
  if (!(D > 0.0))
    throw input_error("degree threshold must be positive");
  SplitDiagnostics s;
  s.D = D;
  std::vector<char> in_a(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    in_a[v] = static_cast<double>(g.degree(v)) >= D ? 1 : 0;
    (in_a[v] ? s.A : s.B).push_back(v);
  }
  for (const Edge &e : g.edges()) {
    if (in_a[e.u] && in_a[e.v])
      ++s.e_A;
    else if (!in_a[e.u] && !in_a[e.v])
      ++s.e_B;
    else
      ++s.e_AB;
  }
  s.e_A_cap = turan_bounds(k, s.A.size(), 0, 0).bondy_simonovits;
  s.e_AB_cap = turan_bounds(k, g.vertex_count(), s.A.size(), g.vertex_count()).naor_verstraete;
  return s;
}

struct DenseCore {
  double threshold = 0.0; // (1 - 1/(2k)) n
  std::vector<Vertex> S;
  std::vector<Vertex> T;
  /// With |S| >= k: the first k members of S and their common neighbourhood size.
  std::vector<Vertex> witness;
  std::size_t common_neighbors = 0;
  /// common_neighbors >= n/2, i.e. a K_{k, n/2} exists and the input has a C_2k.
  bool certifies_cycle = false;
};

inline DenseCore dense_core_split(const Graph &g, int k) {
  DenseCore out;
  const double n = static_cast<double>(g.vertex_count());
  out.threshold = (1.0 - 1.0 / (2.0 * k)) * n;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    (static_cast<double>(g.degree(v)) >= out.threshold ? out.S : out.T).push_back(v);
  if (out.S.size() >= static_cast<std::size_t>(k)) {
    out.witness.assign(out.S.begin(), out.S.begin() + k);
    std::vector<std::size_t> hits(g.vertex_count(), 0);
    for (Vertex v : out.witness)
      for (Vertex u : g.neighbors(v))
        ++hits[u];
    out.common_neighbors = static_cast<std::size_t>(
        std::count(hits.begin(), hits.end(), static_cast<std::size_t>(k)));
    out.certifies_cycle = static_cast<double>(out.common_neighbors) >= n / 2.0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Max-degree removal sequence

struct RemovalStep {
  std::size_t edges = 0;      // m_i
  std::size_t max_degree = 0; // Delta_i
  double density = 0.0;       // X_i = m_i / (n - i)^{3/2}
};

struct RemovalTrace {
  double threshold = 0.0;     // 1 / (2 Lambda)
  std::vector<Vertex> removed; // removed[i] is deleted from G_i to give G_{i+1}
  std::vector<RemovalStep> steps; // G_0 .. G_N
  std::size_t stop_index = 0;  // N
  bool exhausted = false;      // every vertex removed without reaching the threshold
};

struct RemovalResult {
  RemovalTrace trace;
  Subgraph remaining; // G_N, ids mapped back to the input
};

/*
 * G_0 = G; G_i drops a maximum-degree vertex of G_{i-1} (ties: lowest id).
 * Stops at the first N with X_N <= 1/(2 Lambda). The sequence X_i is
 * strictly decreasing while positive; a violation throws contract_breach.
 */
inline RemovalResult removal_sequence(const Graph &g, double Lambda) {
  if (!(Lambda > 0.0))
    throw input_error("Lambda must be positive");
  const std::size_t n = g.vertex_count();
  RemovalTrace trace;
  trace.threshold = 1.0 / (2.0 * Lambda);
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v)
    deg[v] = g.degree(v);
  std::vector<char> alive(n, 1);
  std::size_t edges = g.edge_count();

  for (std::size_t i = 0;; ++i) {
    if (i == n) {
      trace.exhausted = true;
      trace.stop_index = i;
      break;
    }
    Vertex top = 0;
    std::size_t top_deg = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && (!found || deg[v] > top_deg)) {
        top = v;
        top_deg = deg[v];
        found = true;
      }
    const double density =
        static_cast<double>(edges) / std::pow(static_cast<double>(n - i), 1.5);
    if (!trace.steps.empty() && trace.steps.back().density > 0.0 &&
        !(density < trace.steps.back().density))
      throw contract_breach("removal densities stopped decreasing at step " + std::to_string(i));
    trace.steps.push_back({edges, top_deg, density});
    if (density <= trace.threshold) {
      trace.stop_index = i;
      break;
    }
    alive[top] = 0;
    trace.removed.push_back(top);
    edges -= top_deg;
    for (Vertex u : g.neighbors(top))
      if (alive[u])
        --deg[u];
  }

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v])
      rest.push_back(v);
  return {std::move(trace), induced_subgraph(g, rest)};
}

// ---------------------------------------------------------------------------
// Drivers

struct BranchRun {
  std::string name;
  bool ran = false;
  std::size_t cut = 0;
  bool repaired = false; // the combine step moved a vertex
  std::string note;
};

struct PipelineOutcome {
  Bisection bisection;
  BoundReport bounds;
  std::string regime; // what the proof's case analysis would pick
  std::string best_branch;  // where the returned bisection came from
  std::vector<BranchRun> branches;
  std::optional<SplitDiagnostics> split;
  std::optional<DenseCore> dense_core;
  std::optional<RemovalTrace> removal;
  double x = 0.0; // n^{3/2}/m, C4 driver only
  /// Lifted surplus >= surplus(G[B]) - 2 sqrt(m) in the sparse-side branch.
  bool lift_contract_held = true;
};

namespace detail {

class Candidates {
public:
  explicit Candidates(const Graph &g) : g_(&g) {}

  void offer(const std::string &name, Bisection b, bool repaired = false, std::string note = {}) {
    if (!is_valid_bisection(*g_, b))
      throw contract_breach("branch " + name + " produced an invalid bisection");
    runs_.push_back({name, true, b.cut, repaired, std::move(note)});
    if (!best_ || b.cut > best_->cut) {
      best_ = std::move(b);
      best_name_ = name;
    }
  }

  void skip(const std::string &name, std::string note) {
    runs_.push_back({name, false, 0, false, std::move(note)});
  }

  // Local search on the current winner, offered as its own candidate.
  void polish() {
    if (!best_)
      return;
    Bisection copy = *best_;
    const std::size_t moves = improve_by_swaps(*g_, copy, 10 * g_->vertex_count());
    offer("polish(" + best_name_ + ")", std::move(copy), false,
          std::to_string(moves) + " local moves");
  }

  void finish(PipelineOutcome &out) {
    out.bisection = std::move(*best_);
    out.best_branch = best_name_;
    out.branches = std::move(runs_);
  }

private:
  const Graph *g_;
  std::optional<Bisection> best_;
  std::string best_name_;
  std::vector<BranchRun> runs_;
};

// Bisect G[members] by rounding and lift with combine.
inline void offer_lifted_rounding(Candidates &cands, const std::string &name, const Graph &g,
                                  const std::vector<Vertex> &members, int k,
                                  const PipelineConfig &cfg, PipelineOutcome *contract) {
  const Subgraph sub = induced_subgraph(g, members);
  if (sub.graph.edge_count() == 0) {
    cands.skip(name, "no edges inside the part");
    return;
  }
  const double gate = low_degree_threshold(sub.graph, k, cfg.degree_gate);
  const std::string gate_note = static_cast<double>(sub.graph.max_degree()) <= gate
                                    ? "degree gate holds on part"
                                    : "degree gate fails on part";
  const LowDegreeResult inner = round_with_embedding(sub.graph, k, cfg.trials, cfg.seed);
  try {
    CombineResult lifted = combine(g, members, inner.bisection, cfg.seed);
    if (contract && lifted.surplus_out <
                        lifted.surplus_in - 2.0 * std::sqrt(static_cast<double>(g.edge_count())))
      contract->lift_contract_held = false;
    cands.offer(name, std::move(lifted.bisection), lifted.repair_moved > 0, gate_note);
  } catch (const contract_breach &err) {
    cands.skip(name, err.what());
  }
}

} // namespace detail

/*
 * Driver for C_2k-free graphs with k >= 3. The case analysis
 *
 *   (1) Delta < D                       -> low-max-degree rounding on G
 *   (2) e(B) >= eta m, B = {d(v) < D}   -> rounding on G[B], lifted by combine
 *   (3) otherwise                       -> S = {d(v) >= (1-1/(2k)) n}; bisect G[T], lift
 *
 * with D = (gate/2) (n/d)^{k/(k+1)} is recorded in regime, but every
 * branch that can run does, alongside the plain balanced baseline, and the
 * best bisection is returned.
 */
inline PipelineOutcome bisect_c2k_free(const Graph &g, int k, const PipelineConfig &cfg) {
  if (k < 3)
    throw input_error("bisect_c2k_free needs k >= 3; use bisect_c4_free for k = 2");
  PipelineOutcome out;
  detail::Candidates cands(g);
  cands.offer("baseline", balanced_local_bisection(g, cfg.seed));

  if (g.edge_count() == 0) {
    out.regime = "edgeless";
  } else {
    const double n = static_cast<double>(g.vertex_count());
    const double d = g.average_degree();
    const double D = cfg.degree_gate / 2.0 * std::pow(n / d, k / (k + 1.0));
    out.split = high_degree_split(g, D, k);
    if (static_cast<double>(g.max_degree()) < D)
      out.regime = "low_max_degree";
    else if (static_cast<double>(out.split->e_B) >= cfg.eta * static_cast<double>(g.edge_count()))
      out.regime = "sparse_side";
    else
      out.regime = "dense_core";

    try {
      cands.offer("low_max_degree", bisect_low_max_degree(g, k, cfg).bisection);
    } catch (const refusal_error &err) {
      cands.skip("low_max_degree", err.what());
    }

    if (out.split->A.empty())
      cands.skip("sparse_side", "B is the whole graph");
    else
      detail::offer_lifted_rounding(cands, "sparse_side", g, out.split->B, k, cfg, &out);

    out.dense_core = dense_core_split(g, k);
    const DenseCore &core = *out.dense_core;
    const Subgraph sub_t = induced_subgraph(g, core.T);
    try {
      CombineResult lifted =
          combine(g, core.T, balanced_local_bisection(sub_t.graph, cfg.seed), cfg.seed);
      cands.offer("dense_core", std::move(lifted.bisection), lifted.repair_moved > 0,
                  "|S| = " + std::to_string(core.S.size()));
    } catch (const contract_breach &err) {
      cands.skip("dense_core", err.what());
    }
  }
  cands.polish();
  cands.finish(out);
  out.bounds = evaluate_bounds(g, k);
  out.bounds.achieved = out.bisection.cut;
  return out;
}

namespace detail {

inline PipelineOutcome bisect_c4_free_at(const Graph &g, const PipelineConfig &cfg, int depth) {
  constexpr int k = 2;
  PipelineOutcome out;
  Candidates cands(g);
  cands.offer("baseline", balanced_local_bisection(g, cfg.seed));

  const double n = static_cast<double>(g.vertex_count());
  const double m = static_cast<double>(g.edge_count());
  if (g.edge_count() == 0) {
    out.regime = "edgeless";
    out.x = std::numeric_limits<double>::infinity();
  } else {
    out.x = std::pow(n, 1.5) / m;
    const double upper = cfg.lambda_small * std::pow(n, 0.375);
    if (out.x >= upper)
      out.regime = g.min_degree() >= 2 ? "sparse_min_degree_two" : "uncovered";
    else if (out.x >= cfg.Lambda)
      out.regime = "split";
    else
      out.regime = "removal";

    cands.offer("rounding", round_with_embedding(g, k, cfg.trials, cfg.seed).bisection);

    const double D = cfg.degree_gate / std::pow(2.0, 4.0 / 3.0) * std::cbrt(m) *
                     std::pow(out.x, 2.0 / 3.0);
    out.split = high_degree_split(g, D, k);
    if (out.split->A.empty())
      cands.skip("split", "B is the whole graph");
    else
      offer_lifted_rounding(cands, "split", g, out.split->B, k, cfg, &out);

    if (depth == 0) {
      RemovalResult removal = removal_sequence(g, cfg.Lambda);
      const Subgraph &rest = removal.remaining;
      out.removal = std::move(removal.trace);
      if (rest.graph.vertex_count() == 0) {
        cands.skip("removal", "every vertex removed");
      } else {
        const PipelineOutcome inner = bisect_c4_free_at(rest.graph, cfg, depth + 1);
        try {
          CombineResult lifted = combine(g, rest.original, inner.bisection, cfg.seed);
          cands.offer("removal", std::move(lifted.bisection), lifted.repair_moved > 0,
                      "N = " + std::to_string(out.removal->stop_index));
        } catch (const contract_breach &err) {
          cands.skip("removal", err.what());
        }
      }
    }
  }
  cands.polish();
  cands.finish(out);
  out.bounds = evaluate_bounds(g, k);
  out.bounds.achieved = out.bisection.cut;
  return out;
}

} // namespace detail

/*
 * Driver for C4-free graphs. With x = n^{3/2}/m the case analysis is
 *
 *   x >= lambda n^{3/8}, delta >= 2  -> sparse regime, (n-1)/4 surplus
 *   Lambda <= x < lambda n^{3/8}     -> degree split at D = (gate/2^{4/3}) m^{1/3} x^{2/3}
 *   x < Lambda                       -> max-degree removal down to X_N <= 1/(2 Lambda),
 *                                       solve G_N, lift by combine
 *
 * As with bisect_c2k_free, the selected regime is recorded and all runnable
 * branches compete. Recursion stops after one removal phase.
 */
inline PipelineOutcome bisect_c4_free(const Graph &g, const PipelineConfig &cfg) {
  return detail::bisect_c4_free_at(g, cfg, 0);
}

/// Dispatches on k: the C4 driver for k = 2, the general one otherwise.
inline PipelineOutcome bisect_even_cycle_free(const Graph &g, const PipelineConfig &cfg) {
  return cfg.k == 2 ? bisect_c4_free(g, cfg) : bisect_c2k_free(g, cfg.k, cfg);
}

inline nlohmann::json to_json(const SplitDiagnostics &s) {
  return {{"d_threshold", sig12(s.D)},
          {"a_size", s.A.size()},
          {"b_size", s.B.size()},
          {"e_a", s.e_A},
          {"e_b", s.e_B},
          {"e_ab", s.e_AB},
          {"e_a_cap", sig12(s.e_A_cap)},
          {"e_ab_cap", sig12(s.e_AB_cap)}};
}

inline nlohmann::json to_json(const PipelineOutcome &o) {
  nlohmann::json branches = nlohmann::json::array();
  for (const auto &b : o.branches)
    branches.push_back({{"name", b.name},
                        {"ran", b.ran},
                        {"cut", b.cut},
                        {"repaired", b.repaired},
                        {"note", b.note}});
  nlohmann::json j = {{"regime", o.regime},
                      {"best_branch", o.best_branch},
                      {"branches", branches},
                      {"bounds", to_json(o.bounds)},
                      {"lift_contract_held", o.lift_contract_held}};
  if (std::isfinite(o.x))
    j["x"] = sig12(o.x);
  if (o.split)
    j["split"] = to_json(*o.split);
  if (o.removal)
    j["removal"] = {{"stop_index", o.removal->stop_index},
                    {"exhausted", o.removal->exhausted},
                    {"threshold", sig12(o.removal->threshold)}};
  if (o.dense_core)
    j["dense_core"] = {{"s_size", o.dense_core->S.size()},
                       {"certifies_cycle", o.dense_core->certifies_cycle}};
  return j;
}

} // namespace evenbisect
