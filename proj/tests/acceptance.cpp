// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every bisection produced along the way is also fed to a
// shared tally that backs the last criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <numeric>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"

namespace {

using namespace evenbisect;
using evenbisect::testing::dense_vectors;
using evenbisect::testing::dot;
using evenbisect::testing::is_connected;
using evenbisect::testing::random_graph;

struct Tally {
  std::size_t checked = 0;
  std::size_t unbalanced = 0;
  std::size_t miscounted = 0;
  std::size_t above_oracle = 0;

  void bisection(const Graph &g, const Bisection &b) {
    ++checked;
    if (!b.balanced() || b.side.size() != g.vertex_count() || b.size_a + b.size_b != g.vertex_count())
      ++unbalanced;
    if (count_cut(g, b.side) != b.cut)
      ++miscounted;
  }

  void against_oracle(const Graph &g, const Bisection &b, std::size_t optimum) {
    bisection(g, b);
    if (b.cut > optimum)
      ++above_oracle;
  }

  std::size_t violations() const { return unbalanced + miscounted + above_oracle; }
};

Tally tally;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char *title, double budget_s, const std::function<Outcome()> &body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out = body();
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string detail = out.detail;
  if (elapsed >= budget_s) {
    out.pass = false;
    detail += "; over the time budget";
  }
  std::printf("[%s] AC%d %s: %s (%.2f s of %.0f s)\n", out.pass ? "PASS" : "FAIL", id, title,
              detail.c_str(), elapsed, budget_s);
  std::fflush(stdout);
  if (!out.pass)
    ++failures;
}

std::string fmt(const char *format, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

struct Named {
  std::string name;
  Graph graph;
};

std::vector<Named> rounding_corpus() {
  std::vector<Named> out;
  for (unsigned q : {3u, 5u, 7u, 11u})
    out.push_back({"ER_" + std::to_string(q), polarity_graph(q)});
  out.push_back({"heawood", classic(ClassicName::heawood)});
  out.push_back({"petersen", classic(ClassicName::petersen)});
  out.push_back({"tutte_coxeter", classic(ClassicName::tutte_coxeter)});
  for (Seed s = 0; s < 50; ++s) {
    const std::size_t n = 20 + 2 * s;
    out.push_back({"random_c4free_" + std::to_string(s), random_c2k_free(n, 2 * n, 2, 1000 + s)});
  }
  return out;
}

Outcome hyperplane_law() {
  double worst = 0.0;
  Seed seed = 1;
  for (double rho : {-0.9, -0.5, 0.0, 0.3, 0.8}) {
    const double freq = same_side_probability_mc(rho, 1000000, seed++);
    worst = std::max(worst, std::abs(freq - (0.25 + std::asin(rho) / (2.0 * std::numbers::pi))));
  }
  return {worst <= 0.005, fmt("max |freq - 1/4 - asin(rho)/(2 pi)| = %.5f, tolerance 0.005", worst)};
}

Outcome embedding_exactness() {
  std::mt19937_64 rng(2);
  double worst = 0.0;
  double worst_norm = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    const Graph g = random_graph(n, 0.1 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0, rng());
    for (double gamma : {0.1, 0.5, 1.0}) {
      const Embedding e(g, gamma);
      const auto x = dense_vectors(g, gamma);
      for (Vertex u = 0; u < n; ++u) {
        if (g.degree(u) > 0)
          worst_norm = std::max(worst_norm, std::abs(dot(x[u], x[u]) - e.norm_sq()));
        for (Vertex v = u + 1; v < n; ++v) {
          const double dense = dot(x[u], x[v]);
          worst = std::max(worst, std::abs(e.raw_inner_product(u, v, codegree(g, u, v)) - dense));
          worst = std::max(worst, std::abs(e.inner_product(u, v) - dense / e.norm_sq()));
        }
      }
    }
  }
  return {worst <= 1e-12 && worst_norm <= 1e-12,
          fmt("max inner-product error %.3g", worst) + fmt(", max norm error %.3g, tolerance 1e-12", worst_norm)};
}

Outcome rounding_guarantee() {
  std::size_t graphs = 0;
  std::size_t mean_fail = 0;
  std::size_t best_fail = 0;
  std::size_t rebalance_fail = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  std::string first_bad;
  for (const Named &item : rounding_corpus()) {
    const Graph &g = item.graph;
    const Embedding e(g, choose_gamma(sparse_neighborhood_constant(g)).gamma);
    const BestRounding best = best_of_rounds(e, 200, default_seed);
    const double bound = sdp_bound(e).value;
    tally.bisection(g, best.bisection);
    ++graphs;
    const double margin = best.stats.mean_cut - (bound - 3.0 * best.stats.standard_error());
    min_margin = std::min(min_margin, margin);
    if (margin < 0.0) {
      ++mean_fail;
      first_bad = first_bad.empty() ? item.name : first_bad;
    }
    if (static_cast<double>(best.bisection.cut) < std::floor(bound)) {
      ++best_fail;
      first_bad = first_bad.empty() ? item.name : first_bad;
    }
    rebalance_fail += best.stats.rebalance_violations;
  }
  std::string detail = std::to_string(graphs) + " graphs, mean below bound-3SE on " +
                       std::to_string(mean_fail) + ", best below floor(bound) on " +
                       std::to_string(best_fail) + ", rebalance violations " +
                       std::to_string(rebalance_fail) + fmt(", smallest mean margin %.3f", min_margin);
  if (!first_bad.empty())
    detail += ", first failure " + first_bad;
  return {mean_fail == 0 && best_fail == 0 && rebalance_fail == 0, detail};
}

Outcome combine_contract() {
  std::mt19937_64 rng(4);
  std::size_t violations = 0;
  std::size_t repairs = 0;
  std::size_t breaches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 6 + rng() % 11;
    const Graph g = random_graph(n, 0.15 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng());
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(1 + rng() % n);
    const Subgraph sub = induced_subgraph(g, all);
    const ExactResult opt_s = exact_max_bisection(sub.graph);
    tally.against_oracle(sub.graph, opt_s.witness, opt_s.optimum);
    try {
      const CombineResult r = combine(g, all, opt_s.witness, static_cast<Seed>(trial));
      const ExactResult opt = exact_max_bisection(g);
      tally.against_oracle(g, r.bisection, opt.optimum);
      repairs += r.repair_moved;
      // cut >= m/2 + x - 2 sqrt(m) with 2x = 2 cut_S - e(S), in integers:
      // 4 sqrt(m) >= m + 2x - 2 cut
      const long m = static_cast<long>(g.edge_count());
      const long two_x = 2 * static_cast<long>(opt_s.optimum) - static_cast<long>(sub.graph.edge_count());
      const long gap = m + two_x - 2 * static_cast<long>(r.bisection.cut);
      if (gap > 0 && gap * gap > 16 * m)
        ++violations;
    } catch (const contract_breach &) {
      ++breaches;
    }
  }
  return {violations == 0 && breaches == 0,
          "100 triples, contract violations " + std::to_string(violations) + ", breaches " +
              std::to_string(breaches) + ", repairs " + std::to_string(repairs)};
}

struct FreeInstance {
  std::string name;
  Graph graph;
  int k;
};

std::vector<FreeInstance> free_corpus() {
  std::vector<FreeInstance> out;
  for (unsigned q : {2u, 3u, 5u, 7u, 11u, 13u})
    out.push_back({"ER_" + std::to_string(q), polarity_graph(q), 2});
  for (unsigned q : {2u, 3u, 5u})
    out.push_back({"incidence_" + std::to_string(q), incidence_graph_plane(q), 2});
  out.push_back({"petersen", classic(ClassicName::petersen), 2});
  out.push_back({"tutte_coxeter", classic(ClassicName::tutte_coxeter), 2});
  out.push_back({"tutte_coxeter", classic(ClassicName::tutte_coxeter), 3});
  out.push_back({"C100", classic(ClassicName::cycle, 100), 2});
  for (int k = 2; k <= 5; ++k)
    for (Seed s = 0; s < 10; ++s) {
      const std::size_t n = 20 + 8 * s;
      out.push_back({"random_c" + std::to_string(2 * k) + "free_" + std::to_string(s),
                     random_c2k_free(n, 3 * n, k, 77 + s), k});
    }
  return out;
}

Outcome shearer_chain() {
  std::size_t graphs = 0;
  std::size_t fails = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (const FreeInstance &item : free_corpus()) {
    if (item.graph.edge_count() == 0)
      continue;
    ++graphs;
    const ShearerFloor sf = shearer_floor(item.graph, item.k);
    min_ratio = std::min(min_ratio, sf.sum_sqrt_degree / sf.floor);
    if (!(sf.sum_sqrt_degree >= sf.floor) || !sf.chain_holds() || !sf.degeneracy_within_cap)
      ++fails;
  }
  return {fails == 0, std::to_string(graphs) + " graphs, failures " + std::to_string(fails) +
                          fmt(", smallest sum sqrt(d) / floor = %.2f", min_ratio)};
}

Outcome cited_bounds() {
  std::vector<Graph> corpus;
  corpus.push_back(polarity_graph(2));
  corpus.push_back(polarity_graph(3));
  corpus.push_back(classic(ClassicName::heawood));
  corpus.push_back(classic(ClassicName::petersen));
  corpus.push_back(complete_bipartite(3, 3));
  corpus.push_back(complete_bipartite(2, 9));
  for (std::size_t len = 5; len <= 20; ++len)
    corpus.push_back(classic(ClassicName::cycle, len));
  for (std::size_t len = 4; len <= 8; ++len)
    corpus.push_back(classic(ClassicName::complete, len));
  for (Seed s = 0; s < 120; ++s) {
    const std::size_t n = 8 + s % 13;
    corpus.push_back(random_c2k_free(n, 2 * n, 2, 5000 + s));
  }
  for (Seed s = 0; s < 80; ++s)
    corpus.push_back(random_graph(8 + s % 13, 0.15 + 0.01 * static_cast<double>(s % 50), 9000 + s));

  std::size_t hou_yan_checked = 0;
  std::size_t lls_checked = 0;
  std::size_t violations = 0;
  for (const Graph &g : corpus) {
    if (g.vertex_count() > 20)
      continue;
    const ExactResult opt = exact_max_bisection(g);
    tally.against_oracle(g, opt.witness, opt.optimum);
    const double n = static_cast<double>(g.vertex_count());
    const double m = static_cast<double>(g.edge_count());
    const double best = static_cast<double>(opt.optimum);
    if (is_connected(g) && g.min_degree() >= 2 && !contains_cycle_of_length(g, 4)) {
      ++hou_yan_checked;
      if (best < m / 2.0 + (n - 1.0) / 4.0)
        ++violations;
    }
    if (g.min_degree() >= 1) {
      ++lls_checked;
      const double delta = static_cast<double>(g.max_degree());
      if (best < m / 2.0 + (n - std::max(n / 3.0, delta - 1.0)) / 4.0)
        ++violations;
    }
    // the pipeline's answer must stay below the optimum too
    const int k = contains_cycle_of_length(g, 4) ? 3 : 2;
    const PipelineOutcome out = bisect_even_cycle_free(g, PipelineConfig::make(k, 50));
    tally.against_oracle(g, out.bisection, opt.optimum);
  }
  return {violations == 0 && hou_yan_checked > 0 && lls_checked > 0,
          std::to_string(hou_yan_checked) + " graphs for the C4-free min-degree-2 bound, " +
              std::to_string(lls_checked) + " for the no-isolated-vertex bound, violations " +
              std::to_string(violations)};
}

Outcome pipeline_surplus() {
  const auto dir = std::filesystem::temp_directory_path() / "evenbisect_acceptance_er";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  for (unsigned q : {3u, 5u, 7u, 11u, 13u})
    write_graph_file((dir / ("er" + std::to_string(q) + ".txt")).string(), polarity_graph(q),
                     {"family: polarity", "q=" + std::to_string(q)});

  std::vector<double> min_betas;
  std::size_t nonpositive = 0;
  std::size_t invariant = 0;
  for (Seed seed : {Seed{42}, Seed{1}, Seed{2}, Seed{3}, Seed{4}}) {
    RunOptions opts;
    opts.k = 2;
    opts.seed = seed;
    opts.with_oracle = true;
    opts.record_time = false;
    const BenchResult result = run_bench(dir, opts);
    double lowest = std::numeric_limits<double>::infinity();
    for (const RunRecord &r : result.records) {
      const Graph g = read_graph_file((dir / (r.graph_id + ".txt")).string()).graph;
      if (r.oracle_optimum)
        tally.against_oracle(g, r.bisection, *r.oracle_optimum);
      else
        tally.bisection(g, r.bisection);
      lowest = std::min(lowest, r.beta);
    }
    nonpositive += result.violations.nonpositive_beta;
    invariant += result.violations.total_invariant();
    min_betas.push_back(lowest);
  }
  std::filesystem::remove_all(dir);

  const double centre = median_of(min_betas);
  double spread = 0.0;
  for (double b : min_betas)
    spread = std::max(spread, std::abs(b - centre) / centre);
  std::string values;
  for (double b : min_betas)
    values += (values.empty() ? "" : " ") + fmt("%.4f", b);
  return {nonpositive == 0 && invariant == 0 && spread <= 0.2,
          "min beta per seed [" + values + "]" + fmt(", largest deviation from median %.1f%%", 100 * spread) +
              ", nonpositive " + std::to_string(nonpositive) + ", bench violations " +
              std::to_string(invariant)};
}

Outcome removal_trace() {
  std::mt19937_64 rng(8);
  std::size_t mismatches = 0;
  std::size_t monotone = 0;
  std::size_t bound = 0;
  std::size_t steps = 0;
  const double default_lambda = PipelineConfig::make(2).Lambda;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 10 + rng() % 40;
    Graph g = random_graph(n, 0.05 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng());
    if (g.edge_count() == 0)
      g = Graph::from_edge_list(n, {{0, 1}});
    const double Lambda = trial % 2 ? default_lambda : 0.5 + static_cast<double>(rng() % 20);
    const RemovalResult r = removal_sequence(g, Lambda);
    const auto naive = testing::naive_removal(g, Lambda);
    if (naive.size() != r.trace.steps.size()) {
      ++mismatches;
      continue;
    }
    const double nn = static_cast<double>(n);
    const double x = std::pow(nn, 1.5) / static_cast<double>(g.edge_count());
    for (std::size_t i = 0; i < naive.size(); ++i) {
      ++steps;
      const RemovalStep &s = r.trace.steps[i];
      if (s.edges != naive[i].edges || s.max_degree != naive[i].max_degree || s.density != naive[i].density)
        ++mismatches;
      if (i > 0) {
        if (!(s.density < r.trace.steps[i - 1].density))
          ++monotone;
        if (!(s.density < 1.0 / x * std::sqrt((nn - static_cast<double>(i)) / nn)))
          ++bound;
      }
    }
  }
  return {mismatches == 0 && monotone == 0 && bound == 0,
          "50 graphs, " + std::to_string(steps) + " steps, mismatches " + std::to_string(mismatches) +
              ", non-decreasing steps " + std::to_string(monotone) + ", bound violations " +
              std::to_string(bound)};
}

Outcome generator_certificates() {
  std::size_t fails = 0;
  for (unsigned q : {2u, 3u, 5u, 7u}) {
    const Graph g = polarity_graph(q);
    if (g.vertex_count() != q * q + q + 1 || g.edge_count() != q * (q + 1) * (q + 1) / 2 ||
        contains_cycle_of_length(g, 4))
      ++fails;
  }
  const Graph heawood = incidence_graph_plane(2);
  bool heawood_ok = heawood.vertex_count() == 14 && heawood.min_degree() == 3 && heawood.max_degree() == 3;
  for (std::size_t len = 3; len <= 5; ++len)
    heawood_ok = heawood_ok && !contains_cycle_of_length(heawood, len);
  heawood_ok = heawood_ok && contains_cycle_of_length(heawood, 6);
  fails += heawood_ok ? 0 : 1;

  std::size_t free_graphs = 0;
  for (const FreeInstance &item : free_corpus()) {
    ++free_graphs;
    const Graph &g = item.graph;
    const auto len = 2 * static_cast<std::size_t>(item.k);
    const TuranBounds caps = turan_bounds(item.k, g.vertex_count(), 1, 1);
    const double m = static_cast<double>(g.edge_count());
    bool ok = !contains_cycle_of_length(g, len) && m <= caps.bondy_simonovits;
    if (item.k == 2)
      ok = ok && m <= caps.kst_checked;
    for (Vertex v = 0; ok && v < g.vertex_count(); ++v)
      ok = neighborhood_edge_count(g, v) <= static_cast<std::size_t>(item.k) * g.degree(v);
    fails += ok ? 0 : 1;
  }
  return {fails == 0, "polarity q in {2,3,5,7}, Heawood, " + std::to_string(free_graphs) +
                          " even-cycle-free graphs; failures " + std::to_string(fails)};
}

} // namespace

int main() {
  std::printf("evenbisect acceptance suite\n");
  criterion(1, "hyperplane probability law", 10, hyperplane_law);
  criterion(2, "embedding exactness", 5, embedding_exactness);
  criterion(3, "rounding expectation guarantee", 60, rounding_guarantee);
  criterion(4, "subgraph lifting contract", 120, combine_contract);
  criterion(5, "degree-root floor and degeneracy chain", 5, shearer_chain);
  criterion(6, "oracle checks of the cited bisection bounds", 600, cited_bounds);
  criterion(7, "pipeline surplus on polarity graphs", 120, pipeline_surplus);
  criterion(8, "max-degree removal trace", 10, removal_trace);
  criterion(9, "generator certificates", 30, generator_certificates);
  criterion(10, "universal bisection invariants", 1, [] {
    return Outcome{tally.violations() == 0 && tally.checked > 0,
                   std::to_string(tally.checked) + " bisections checked; unbalanced " +
                       std::to_string(tally.unbalanced) + ", miscounted " +
                       std::to_string(tally.miscounted) + ", above oracle " +
                       std::to_string(tally.above_oracle)};
  });
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
