#pragma once

#include <stdexcept>
#include <vector>

#include "cydisk/geometry.hpp"
#include "cydisk/half_series.hpp"
#include "cydisk/jet.hpp"
#include "cydisk/rational.hpp"
#include "cydisk/series.hpp"

namespace cydisk {

// The hypersurface-count generating series
//   F(w, q) = sum_d q^d  prod_k prod_{r=1..a_k d} (a_k w + r)
//                      / prod_{r=1..d} (w + r)^n,
// with each q-coefficient carried as a w-jet through order jet_cap. The
// denominator divides the numerator coefficient-by-coefficient only after
// jet truncation, so the quotient is taken as a jet division.
inline JetSeries hypergeom_F(const Geometry& g, int jet_cap, int trunc) {
  if (jet_cap < 0) throw std::invalid_argument("jet cap must be non-negative");
  JetSeries out(trunc);
  out[0] = WJet(1);
  WJet num(std::vector<Rational>{Rational(1)}, jet_cap);
  WJet den = num;
  for (int d = 1; d <= trunc; ++d) {
    for (int ak : g.degrees())
      for (int r = ak * (d - 1) + 1; r <= ak * d; ++r)
        num *= WJet({Rational(r), Rational(ak)}, jet_cap);
    WJet lin({Rational(d), Rational(1)}, jet_cap);
    WJet lin_n(std::vector<Rational>{Rational(1)}, jet_cap);
    for (int e = 0; e < g.n(); ++e) lin_n *= lin;
    den *= lin_n;
    out[d] = num / den;
  }
  return out;
}

// M H = 1 + (q/w) d/dq (H / H(0, q)). Needs H(0, 0) = 1 so the normalization
// divides by a unit, and at least one known w-order to absorb the division
// by w; the result knows one w-order fewer than H.
inline JetSeries apply_M(const JetSeries& H) {
  if (H[0].eval0() != 1)
    throw std::invalid_argument("M operator needs constant term 1 at w = 0, q = 0");
  const JetSeries normalized = H / embed_jets(eval_w0(H));
  JetSeries out = divide_by_w(q_log_derivative(normalized));
  out[0] += WJet(1);
  return out;
}

// I_p(q) = (M^p F)(0, q). Each I_p is 1 + O(q).
inline QSeries I_series(const Geometry& g, int p, int trunc) {
  if (p < 0) throw std::invalid_argument("series index must be non-negative");
  JetSeries h = hypergeom_F(g, p, trunc);
  for (int j = 0; j < p; ++j) h = apply_M(h);
  return eval_w0(h);
}

// Mirror-map exponent: J(q) = (1/I_0) sum_{d>=1} q^d (prod_k (a_k d)!) / (d!)^n
//                              * sum_k sum_{r=d+1..a_k d} a_k / r.
inline QSeries J_series(const Geometry& g, int trunc) {
  QSeries sum(trunc);
  for (int d = 1; d <= trunc; ++d) {
    Rational outer(1);
    for (int ak : g.degrees()) outer *= Rational(factorial(ak * d));
    outer /= rational_pow(Rational(factorial(d)), g.n());
    Rational inner(0);
    for (int ak : g.degrees())
      for (int r = d + 1; r <= ak * d; ++r) inner += Rational(ak, r);
    sum[d] = outer * inner;
  }
  return sum / I_series(g, 0, trunc);
}

// Odd-supported seed tau(q) = 2 sum_{d odd} q^(d/2) (prod_k (a_k d)!!) / (d!!)^n.
inline HalfSeries tau_series(const Geometry& g, int trunc_u) {
  HalfSeries out(trunc_u);
  for (int d = 1; d <= trunc_u; d += 2) {
    Rational c(2);
    for (int ak : g.degrees()) c *= Rational(double_factorial(ak * d));
    c /= rational_pow(Rational(double_factorial(d)), g.n());
    out[d] = c;
  }
  return out;
}

// Inverse mirror map: q as a series in Q, where Q = q exp(J(q)).
inline QSeries mirror_q_of_Q(const Geometry& g, int trunc) {
  return invert_unit_relation(exp_series(J_series(g, trunc)));
}

}  // namespace cydisk
