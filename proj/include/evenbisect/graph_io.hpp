#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "evenbisect/graph.hpp"

namespace evenbisect {

/*
 * Plain text graph format:
 *
 *   # optional comment lines, anywhere
 *   n m
 *   u v        (m lines, 0-indexed endpoints)
 *
 * Duplicate edges are rejected on read, unlike Graph::from_edge_list which
 * collapses them.
 */
struct GraphFile {
  Graph graph;
  std::vector<std::string> comments; // without the leading '#', trimmed
};

namespace detail {

inline std::string trim(const std::string &s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos)
    return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

} // namespace detail

inline GraphFile read_graph(std::istream &in) {
  GraphFile out;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  auto fail = [&line_no](const std::string &what) {
    throw input_error("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = detail::trim(line);
    if (body.empty())
      continue;
    if (body.front() == '#') {
      out.comments.push_back(detail::trim(body.substr(1)));
      continue;
    }
    std::istringstream fields(body);
    long long a = -1;
    long long b = -1;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra))
      fail("expected two integers");
    if (a < 0 || b < 0)
      fail("negative value");
    if (!have_header) {
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      have_header = true;
      continue;
    }
    if (static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      fail("endpoint out of range");
    if (a == b)
      fail("self-loop");
    Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
    if (!seen.insert(e).second)
      fail("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    edges.push_back(e);
  }
  if (!have_header)
    throw input_error("missing 'n m' header");
  if (edges.size() != m)
    throw input_error("header declares " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  out.graph = Graph::from_edge_list(n, edges);
  return out;
}

inline GraphFile read_graph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw input_error("cannot open " + path);
  return read_graph(in);
}

inline void write_graph(std::ostream &out, const Graph &g,
                        const std::vector<std::string> &comments = {}) {
  for (const auto &c : comments)
    out << "# " << c << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge &e : g.edges())
    out << e.u << ' ' << e.v << '\n';
}

inline void write_graph_file(const std::string &path, const Graph &g,
                             const std::vector<std::string> &comments = {}) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw input_error("cannot write " + path);
  write_graph(out, g, comments);
  if (!out)
    throw input_error("write failed for " + path);
}

} // namespace evenbisect
