// Command-line front end: generate graphs, bisect them, compare with the
// exact oracle, and benchmark whole corpora.
//
//   evenbisect gen polarity --q 7 --out er7.txt
//   evenbisect gen classic --name petersen
//   evenbisect gen random-free --n 40 --m 80 --k 2 --seed 1
//   evenbisect bisect er7.txt --k 2 --trials 200 --seed 42 --verify-free
//   evenbisect oracle petersen.txt
//   evenbisect bench corpus/ --k 2 --out runs.csv
//   evenbisect verify-free er7.txt --k 2
//
// Exit codes: 0 ok, 1 error, 2 forbidden cycle found, 3 oracle size guard,
// 4 empty corpus.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "evenbisect/evenbisect.hpp"

namespace {

using namespace evenbisect;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_cycle = 2;
constexpr int exit_oracle_guard = 3;
constexpr int exit_empty_corpus = 4;

struct GenArgs {
  std::string family;
  unsigned q = 3;
  std::size_t a = 1;
  std::size_t b = 1;
  std::size_t n = 0;
  std::size_t m = 0;
  int k = 2;
  Seed seed = default_seed;
  std::string name;
  std::size_t length = 0;
  std::string out;
};

struct BisectArgs {
  std::string path;
  int k = 2;
  std::size_t trials = 200;
  Seed seed = default_seed;
  double eta = 0.01;
  bool verify_free = false;
  std::string csv;
};

struct BenchArgs {
  std::string dir;
  int k = 2;
  std::size_t trials = 200;
  Seed seed = default_seed;
  double eta = 0.01;
  std::string out;
  bool timing = false;
};

int cmd_gen(const GenArgs &args) {
  Graph g;
  std::vector<std::string> comments{"family: " + args.family};
  if (args.family == "polarity") {
    g = polarity_graph(args.q);
    comments.push_back("q=" + std::to_string(args.q));
  } else if (args.family == "incidence") {
    g = incidence_graph_plane(args.q);
    comments.push_back("q=" + std::to_string(args.q));
  } else if (args.family == "complete-bipartite") {
    g = complete_bipartite(args.a, args.b);
    comments.push_back("a=" + std::to_string(args.a) + " b=" + std::to_string(args.b));
  } else if (args.family == "random-free") {
    g = random_c2k_free(args.n, args.m, args.k, args.seed);
    comments.push_back("n=" + std::to_string(args.n) + " target_m=" + std::to_string(args.m) +
                       " k=" + std::to_string(args.k) + " seed=" + std::to_string(args.seed) +
                       " m=" + std::to_string(g.edge_count()));
  } else if (args.family == "classic") {
    g = classic(parse_classic(args.name), args.length);
    comments.push_back("name=" + args.name +
                       (args.length ? " length=" + std::to_string(args.length) : ""));
  } else {
    throw input_error("unknown family '" + args.family + "'");
  }
  if (args.out.empty())
    write_graph(std::cout, g, comments);
  else
    write_graph_file(args.out, g, comments);
  return exit_ok;
}

int report_cycle(const std::vector<Vertex> &cycle) {
  nlohmann::json j = {{"free", false}, {"cycle", cycle}};
  std::cout << j.dump() << '\n';
  return exit_cycle;
}

int cmd_bisect(const BisectArgs &args) {
  const GraphFile file = read_graph_file(args.path);
  if (args.verify_free)
    if (auto cycle = find_cycle_of_length(file.graph, 2 * static_cast<std::size_t>(args.k)))
      return report_cycle(*cycle);

  RunOptions opts;
  opts.k = args.k;
  opts.trials = args.trials;
  opts.seed = args.seed;
  opts.eta = args.eta;
  opts.with_oracle = false;
  const std::string id = std::filesystem::path(args.path).stem().string();
  const RunRecord r = run_single(file.graph, id, family_of(file), opts);

  nlohmann::json j = to_json(r);
  j["bisection"] = to_json(r.bisection);
  j["pipeline"] = to_json(r.outcome);
  std::cout << j.dump(2) << '\n';

  if (!args.csv.empty()) {
    const bool fresh = !std::filesystem::exists(args.csv) || std::filesystem::file_size(args.csv) == 0;
    std::ofstream csv(args.csv, std::ios::app | std::ios::binary);
    if (!csv)
      throw input_error("cannot append to " + args.csv);
    if (fresh)
      csv << csv_header() << '\n';
    csv << csv_row(r) << '\n';
  }
  return exit_ok;
}

int cmd_oracle(const std::string &path) {
  const GraphFile file = read_graph_file(path);
  try {
    const ExactResult r = exact_max_bisection(file.graph);
    nlohmann::json j = {{"optimum", r.optimum},
                        {"witness", to_json(r.witness)},
                        {"enumerated", r.enumerated}};
    std::cout << j.dump() << '\n';
    return exit_ok;
  } catch (const refusal_error &err) {
    std::cerr << "oracle: " << err.what() << '\n';
    return exit_oracle_guard;
  }
}

int cmd_bench(const BenchArgs &args) {
  if (corpus_files(args.dir).empty()) {
    std::cerr << "bench: corpus " << args.dir << " is empty\n";
    return exit_empty_corpus;
  }
  RunOptions opts;
  opts.k = args.k;
  opts.trials = args.trials;
  opts.seed = args.seed;
  opts.eta = args.eta;
  opts.with_oracle = true;
  opts.record_time = args.timing;
  const BenchResult result = run_bench(args.dir, opts);
  if (!args.out.empty()) {
    std::ofstream csv(args.out, std::ios::binary);
    if (!csv)
      throw input_error("cannot write " + args.out);
    write_csv(csv, result.records);
  } else {
    write_csv(std::cerr, result.records);
  }
  std::cout << result.summary.dump(2) << '\n';
  return result.violations.total_invariant() == 0 ? exit_ok : exit_error;
}

int cmd_verify_free(const std::string &path, int k) {
  const GraphFile file = read_graph_file(path);
  if (auto cycle = find_cycle_of_length(file.graph, 2 * static_cast<std::size_t>(k)))
    return report_cycle(*cycle);
  std::cout << nlohmann::json{{"free", true}, {"length", 2 * k}}.dump() << '\n';
  return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Max-bisection tools for graphs without a fixed even cycle"};
  app.require_subcommand(1);

  GenArgs gen;
  auto *gen_cmd = app.add_subcommand("gen", "Generate a graph file");
  gen_cmd->add_option("family", gen.family,
                      "polarity | incidence | complete-bipartite | random-free | classic")
      ->required();
  gen_cmd->add_option("--q", gen.q, "Prime field order");
  gen_cmd->add_option("--a", gen.a, "First side of K_{a,b}");
  gen_cmd->add_option("--b", gen.b, "Second side of K_{a,b}");
  gen_cmd->add_option("--n", gen.n, "Vertex count (random-free)");
  gen_cmd->add_option("--m", gen.m, "Target edge count (random-free)");
  gen_cmd->add_option("--k", gen.k, "Forbidden cycle C_2k (random-free)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--name", gen.name,
                      "petersen | heawood | tutte_coxeter | cycle | path | complete");
  gen_cmd->add_option("--length", gen.length, "Vertex count for cycle, path, complete");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  BisectArgs bis;
  auto *bisect_cmd = app.add_subcommand("bisect", "Run the bisection pipeline on a graph");
  bisect_cmd->add_option("graph", bis.path, "Graph file")->required();
  bisect_cmd->add_option("--k", bis.k, "Forbidden cycle C_2k")->check(CLI::Range(2, 64));
  bisect_cmd->add_option("--trials", bis.trials, "Rounding trials")->check(CLI::PositiveNumber);
  bisect_cmd->add_option("--seed", bis.seed, "Master seed");
  bisect_cmd->add_option("--eta", bis.eta, "Sparse-side gate");
  bisect_cmd->add_flag("--verify-free", bis.verify_free, "Check C_2k-freeness first");
  bisect_cmd->add_option("--csv", bis.csv, "Append the record to this CSV file");

  std::string oracle_path;
  auto *oracle_cmd = app.add_subcommand("oracle", "Exact max bisection (n <= 24)");
  oracle_cmd->add_option("graph", oracle_path, "Graph file")->required();

  BenchArgs bench;
  auto *bench_cmd = app.add_subcommand("bench", "Run every graph in a corpus directory");
  bench_cmd->add_option("corpus", bench.dir, "Directory of graph files")->required();
  bench_cmd->add_option("--k", bench.k, "Forbidden cycle C_2k")->check(CLI::Range(2, 64));
  bench_cmd->add_option("--trials", bench.trials, "Rounding trials")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Master seed");
  bench_cmd->add_option("--eta", bench.eta, "Sparse-side gate");
  bench_cmd->add_option("--out", bench.out, "CSV output (default stderr)");
  bench_cmd->add_flag("--timing", bench.timing, "Fill wall_time_ms (breaks byte-identical reruns)");

  std::string verify_path;
  int verify_k = 2;
  auto *verify_cmd = app.add_subcommand("verify-free", "Exact C_2k detection");
  verify_cmd->add_option("graph", verify_path, "Graph file")->required();
  verify_cmd->add_option("--k", verify_k, "Forbidden cycle C_2k")->check(CLI::Range(2, 64));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd)
      return cmd_gen(gen);
    if (*bisect_cmd)
      return cmd_bisect(bis);
    if (*oracle_cmd)
      return cmd_oracle(oracle_path);
    if (*bench_cmd)
      return cmd_bench(bench);
    if (*verify_cmd)
      return cmd_verify_free(verify_path, verify_k);
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
