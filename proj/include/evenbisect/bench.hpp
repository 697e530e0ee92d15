#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "evenbisect/bisection.hpp"
#include "evenbisect/graph.hpp"
#include "evenbisect/graph_io.hpp"
#include "evenbisect/oracle.hpp"
#include "evenbisect/pipeline.hpp"

namespace evenbisect {

inline constexpr int csv_schema_version = 1;
inline constexpr std::size_t bench_oracle_limit = 20;

struct RunOptions {
  int k = 2;
  std::size_t trials = 200;
  Seed seed = default_seed;
  double eta = 0.01;
  bool with_oracle = false; // run the exact oracle when n <= 20
  bool record_time = true;

  PipelineConfig config() const { return PipelineConfig::make(k, trials, seed, eta); }
};

/// FNV-1a over the parameters that affect results.
inline std::string config_hash(const RunOptions &o) {
  std::ostringstream key;
  key << "k=" << o.k << ";trials=" << o.trials << ";seed=" << o.seed
      << ";eta=" << format_sig12(o.eta) << ";gate=" << format_sig12(PipelineConfig{}.degree_gate);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : key.str()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct RunRecord {
  std::string graph_id;
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  int k = 2;
  std::string regime;
  std::string branch; // winning branch
  std::size_t achieved = 0;
  double m_half = 0.0;
  double surplus = 0.0;
  double beta = 0.0;
  double sdp_bound = 0.0;
  double shearer_floor = 0.0;
  std::optional<std::size_t> oracle_optimum;
  std::optional<double> wall_time_ms;
  Seed seed = default_seed;
  std::string config_hash;

  Bisection bisection;
  PipelineOutcome outcome;
};

/// Family from a "family: <name>" comment, if any.
inline std::string family_of(const GraphFile &file) {
  for (const auto &c : file.comments)
    if (c.rfind("family:", 0) == 0)
      return detail::trim(c.substr(7));
  return "unknown";
}

/*
 * Runs the driver for opts.k on one graph and fills a record. The bisection
 * is serialized and parsed back against the graph before the record is
 * returned, so the stored cut is always a recount.
 */
inline RunRecord run_single(const Graph &g, const std::string &graph_id, const std::string &family,
                            const RunOptions &opts) {
  const auto start = std::chrono::steady_clock::now();
  PipelineOutcome outcome = bisect_even_cycle_free(g, opts.config());
  const auto stop = std::chrono::steady_clock::now();

  const Bisection checked = bisection_from_json(g, to_json(outcome.bisection));
  if (!is_valid_bisection(g, checked) || checked.cut != outcome.bisection.cut)
    throw contract_breach("bisection failed revalidation for " + graph_id);

  RunRecord r;
  r.graph_id = graph_id;
  r.family = family;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.k = opts.k;
  r.regime = outcome.regime;
  r.branch = outcome.best_branch;
  r.achieved = checked.cut;
  r.m_half = outcome.bounds.m_half;
  r.surplus = outcome.bounds.surplus();
  r.beta = outcome.bounds.beta();
  r.sdp_bound = outcome.bounds.sdp_bound;
  r.shearer_floor = outcome.bounds.shearer_floor;
  if (opts.with_oracle && g.vertex_count() <= bench_oracle_limit)
    r.oracle_optimum = exact_max_bisection(g).optimum;
  if (opts.record_time)
    r.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  r.seed = opts.seed;
  r.config_hash = config_hash(opts);
  r.bisection = checked;
  r.outcome = std::move(outcome);
  return r;
}

inline nlohmann::json to_json(const RunRecord &r) {
  nlohmann::json j = {{"schema_version", csv_schema_version},
                      {"graph_id", r.graph_id},
                      {"family", r.family},
                      {"n", r.n},
                      {"m", r.m},
                      {"k", r.k},
                      {"regime", r.regime},
                      {"branch", r.branch},
                      {"achieved", r.achieved},
                      {"m_half", sig12(r.m_half)},
                      {"surplus", sig12(r.surplus)},
                      {"beta", sig12(r.beta)},
                      {"sdp_bound", sig12(r.sdp_bound)},
                      {"shearer_floor", sig12(r.shearer_floor)},
                      {"oracle_optimum", nullptr},
                      {"wall_time_ms", nullptr},
                      {"seed", r.seed},
                      {"config_hash", r.config_hash}};
  if (r.oracle_optimum)
    j["oracle_optimum"] = *r.oracle_optimum;
  if (r.wall_time_ms)
    j["wall_time_ms"] = sig12(*r.wall_time_ms);
  return j;
}

inline const char *csv_header() {
  return "schema_version,graph_id,family,n,m,k,regime,branch,achieved,m_half,surplus,beta,"
         "sdp_bound,shearer_floor,oracle_optimum,wall_time_ms,seed,config_hash";
}

inline std::string csv_row(const RunRecord &r) {
  std::ostringstream row;
  row << csv_schema_version << ',' << r.graph_id << ',' << r.family << ',' << r.n << ','
      << r.m << ',' << r.k << ',' << r.regime << ',' << r.branch << ',' << r.achieved << ','
      << format_sig12(r.m_half) << ',' << format_sig12(r.surplus) << ','
      << format_sig12(r.beta) << ',' << format_sig12(r.sdp_bound) << ','
      << format_sig12(r.shearer_floor) << ',';
  if (r.oracle_optimum)
    row << *r.oracle_optimum;
  row << ',';
  if (r.wall_time_ms)
    row << format_sig12(*r.wall_time_ms);
  row << ',' << r.seed << ',' << r.config_hash;
  return row.str();
}

struct BenchViolations {
  std::size_t balance = 0;    // invalid or unbalanced bisection
  std::size_t oracle = 0;     // achieved above the exact optimum
  std::size_t floor = 0;      // achieved below m/2 - 2 sqrt(m)
  std::size_t lift = 0;       // sparse-side lift lost more than 2 sqrt(m)
  std::size_t nonpositive_beta = 0;

  std::size_t total_invariant() const { return balance + oracle + floor + lift; }
};

struct BenchResult {
  std::vector<RunRecord> records;
  BenchViolations violations;
  nlohmann::json summary;
};

inline double median_of(std::vector<double> v) {
  if (v.empty())
    return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

/// Graph files in a corpus directory: regular files, sorted by name.
inline std::vector<std::filesystem::path> corpus_files(const std::filesystem::path &dir) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(dir))
    throw input_error("corpus directory " + dir.string() + " does not exist");
  for (const auto &entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file())
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

/*
 * Runs every graph file of a corpus and aggregates the records. The CSV
 * text depends only on (corpus, options) unless opts.record_time is set.
 */
inline BenchResult run_bench(const std::filesystem::path &dir, const RunOptions &opts) {
  BenchResult out;
  for (const auto &path : corpus_files(dir)) {
    const GraphFile file = read_graph_file(path.string());
    RunRecord r = run_single(file.graph, path.stem().string(), family_of(file), opts);
    const Graph &g = file.graph;
    if (!is_valid_bisection(g, r.bisection))
      ++out.violations.balance;
    if (r.oracle_optimum && r.achieved > *r.oracle_optimum)
      ++out.violations.oracle;
    if (static_cast<double>(r.achieved) <
        r.m_half - 2.0 * std::sqrt(static_cast<double>(r.m)))
      ++out.violations.floor;
    if (!r.outcome.lift_contract_held)
      ++out.violations.lift;
    if (r.m > 0 && !(r.beta > 0.0))
      ++out.violations.nonpositive_beta;
    out.records.push_back(std::move(r));
  }

  std::map<std::string, std::vector<double>> betas;
  std::vector<double> all;
  for (const auto &r : out.records)
    if (r.m > 0) {
      betas[r.family].push_back(r.beta);
      all.push_back(r.beta);
    }
  nlohmann::json families = nlohmann::json::object();
  for (const auto &[family, values] : betas)
    families[family] = {{"records", values.size()},
                        {"min_beta", sig12(*std::min_element(values.begin(), values.end()))},
                        {"median_beta", sig12(median_of(values))}};
  out.summary = {{"records", out.records.size()},
                 {"families", families},
                 {"min_beta", all.empty() ? nlohmann::json(nullptr)
                                          : nlohmann::json(sig12(*std::min_element(
                                                all.begin(), all.end())))},
                 {"violations",
                  {{"balance", out.violations.balance},
                   {"oracle", out.violations.oracle},
                   {"floor", out.violations.floor},
                   {"lift", out.violations.lift},
                   {"total", out.violations.total_invariant()}}},
                 {"nonpositive_beta", out.violations.nonpositive_beta},
                 {"config_hash", config_hash(opts)}};
  return out;
}

inline void write_csv(std::ostream &out, const std::vector<RunRecord> &records) {
  out << csv_header() << '\n';
  for (const auto &r : records)
    out << csv_row(r) << '\n';
}

} // namespace evenbisect
