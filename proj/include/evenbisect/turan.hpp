#pragma once

#include <cmath>
#include <cstddef>

#include "evenbisect/errors.hpp"

namespace evenbisect {

/// Edge caps for C_2k-free graphs, evaluated at one instance size.
struct TuranBounds {
  double kst = 0.0;              // n^{3/2}/2, C4-free, without the o(1)
  double kst_checked = 0.0;      // n^{3/2}/2 + n/4, a valid finite-n C4 cap
  double bondy_simonovits = 0.0; // 100 k n^{1+1/k}
  double naor_verstraete = 0.0;  // a-by-b bipartite C_2k-free, a <= b
};

inline TuranBounds turan_bounds(int k, std::size_t n, std::size_t a, std::size_t b) {
  if (k < 2)
    throw input_error("turan_bounds needs k >= 2");
  if (a > b)
    throw input_error("turan_bounds needs a <= b");
  const double kk = k;
  const double nn = static_cast<double>(n);
  const double aa = static_cast<double>(a);
  const double bb = static_cast<double>(b);
  TuranBounds t;
  t.kst = std::pow(nn, 1.5) / 2.0;
  t.kst_checked = t.kst + nn / 4.0;
  t.bondy_simonovits = 100.0 * kk * std::pow(nn, 1.0 + 1.0 / kk);
  if (k % 2 == 1)
    t.naor_verstraete = 2.0 * kk * (std::pow(aa * bb, (kk + 1) / (2 * kk)) + aa + bb);
  else
    t.naor_verstraete = 2.0 * kk * (std::pow(aa, (kk + 2) / (2 * kk)) * std::sqrt(bb) + aa + bb);
  return t;
}

} // namespace evenbisect
