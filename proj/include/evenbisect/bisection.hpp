#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "evenbisect/graph.hpp"

namespace evenbisect {

/*
 * Two-sided vertex partition. side[v] == 0 puts v in A, 1 in B. Most
 * producers return balanced partitions (||A| - |B|| <= 1); the exact
 * max-cut oracle reuses the type for unbalanced witnesses.
 */
struct Bisection {
  std::vector<std::uint8_t> side;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::size_t cut = 0;

  bool balanced() const { return (size_a > size_b ? size_a - size_b : size_b - size_a) <= 1; }

  friend bool operator==(const Bisection &, const Bisection &) = default;
};

inline std::size_t count_cut(const Graph &g, const std::vector<std::uint8_t> &side) {
  std::size_t cut = 0;
  for (const Edge &e : g.edges())
    cut += side[e.u] != side[e.v] ? 1 : 0;
  return cut;
}

inline Bisection make_bisection(const Graph &g, std::vector<std::uint8_t> side) {
  if (side.size() != g.vertex_count())
    throw input_error("side vector has " + std::to_string(side.size()) + " entries for " +
                      std::to_string(g.vertex_count()) + " vertices");
  Bisection b;
  for (auto s : side) {
    if (s > 1)
      throw input_error("side labels must be 0 or 1");
    (s == 0 ? b.size_a : b.size_b) += 1;
  }
  b.cut = count_cut(g, side);
  b.side = std::move(side);
  return b;
}

/// Stored sizes and cut agree with the labels, and the split is balanced.
inline bool is_valid_bisection(const Graph &g, const Bisection &b) {
  if (b.side.size() != g.vertex_count())
    return false;
  std::size_t a = 0;
  for (auto s : b.side) {
    if (s > 1)
      return false;
    a += s == 0 ? 1 : 0;
  }
  return a == b.size_a && g.vertex_count() - a == b.size_b && b.balanced() &&
         count_cut(g, b.side) == b.cut;
}

/// Total order used for deterministic tie-breaks: larger cut first, then the
/// lexicographically smaller label vector.
inline bool better_bisection(const Bisection &lhs, const Bisection &rhs) {
  if (lhs.cut != rhs.cut)
    return lhs.cut > rhs.cut;
  return lhs.side < rhs.side;
}

/// Rounds to 12 significant digits so serialized reals print at most that many.
inline double sig12(double x) {
  if (!std::isfinite(x))
    return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline std::string format_sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline nlohmann::json to_json(const Bisection &b) {
  nlohmann::json sides = nlohmann::json::array();
  for (auto s : b.side)
    sides.push_back(static_cast<int>(s));
  return {{"side", sides}, {"cut", b.cut}};
}

/// Parses {"side": [...], "cut": int} and revalidates it against g.
inline Bisection bisection_from_json(const Graph &g, const nlohmann::json &j) {
  std::vector<std::uint8_t> side;
  for (const auto &s : j.at("side"))
    side.push_back(static_cast<std::uint8_t>(s.get<int>()));
  Bisection b = make_bisection(g, std::move(side));
  if (b.cut != j.at("cut").get<std::size_t>())
    throw input_error("stored cut " + j.at("cut").dump() + " does not match recount " +
                      std::to_string(b.cut));
  return b;
}

} // namespace evenbisect
