#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "cydisk/geometry.hpp"
#include "cydisk/half_series.hpp"
#include "cydisk/mirror.hpp"
#include "cydisk/rational.hpp"
#include "cydisk/series.hpp"

namespace cydisk {

// The derivative tower S_0 = seed / I_0, S_j = (1/I_j) q d/dq S_{j-1};
// returns S_levels. Linear in the seed.
inline HalfSeries nested_tower(const Geometry& g, const HalfSeries& seed, int levels) {
  if (levels < 0) throw std::invalid_argument("tower depth must be non-negative");
  const int tq = seed.trunc() / 2;
  HalfSeries s = seed / HalfSeries::lift(I_series(g, 0, tq));
  for (int j = 1; j <= levels; ++j)
    s = s.q_log_derivative() / HalfSeries::lift(I_series(g, j, tq));
  return s;
}

// The closed form at nesting depth `levels`:
//   2^p_max (1/I_levels) q d/dq { ... (1/I_1) q d/dq { tau / I_0 } }.
// Depth 0 applies no derivative: the bare 2^p_max tau / I_0.
inline HalfSeries nested_potential_level(const Geometry& g, int levels, int trunc_u) {
  if (levels < 0 || levels > g.p_max())
    throw std::invalid_argument("nesting depth must lie in [0, p_max]");
  return nested_tower(g, tau_series(g, trunc_u), levels) * rational_pow(Rational(2), g.p_max());
}

// The full tower, depth p_max: the disk potential as a series in u = q^(1/2).
inline HalfSeries nested_disk_potential_q(const Geometry& g, int trunc_u) {
  return nested_potential_level(g, g.p_max(), trunc_u);
}

// Disk potential before and after the mirror substitution q -> q(Q). The
// one-point invariants N_{1,d} are the coefficients of Q^(d/2) = U^d in
// in_Q, for odd d.
struct DiskPotential {
  Geometry geometry;
  HalfSeries in_q;  // variable u = q^(1/2)
  HalfSeries in_Q;  // variable U = Q^(1/2)
};

inline DiskPotential disk_potential_Q(const Geometry& g, int trunc_u) {
  HalfSeries in_q = nested_disk_potential_q(g, trunc_u);
  const QSeries q_of_Q = mirror_q_of_Q(g, trunc_u / 2 + 1);
  HalfSeries in_Q = substitute_half(in_q, q_of_Q);
  return DiskPotential{g, std::move(in_q), std::move(in_Q)};
}

inline std::map<int, Rational> extract_invariants(const DiskPotential& dp) {
  std::map<int, Rational> out;
  for (int d = 1; d <= dp.in_Q.trunc(); d += 2) out[d] = dp.in_Q[d];
  return out;
}

}  // namespace cydisk
