#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cydisk/rational.hpp"
#include "cydisk/series.hpp"

namespace cydisk {

// Series in u = q^(1/2), indexed by u-exponent. Half-integer powers of q are
// therefore the odd indices, and a series supported only on them is called
// odd-supported. Arithmetic follows the same minimum-truncation rule as
// PowerSeries; truncation counts u-orders.
class HalfSeries {
 public:
  explicit HalfSeries(int trunc_u) : s_(trunc_u) {}
  HalfSeries(int trunc_u, std::vector<Rational> coeffs) : s_(trunc_u, std::move(coeffs)) {}

  // A series in q viewed in u via q = u^2. The result is known through
  // u^(2t+1): the top odd coefficient is known to vanish.
  static HalfSeries lift(const QSeries& q) {
    HalfSeries out(2 * q.trunc() + 1);
    for (int d = 0; d <= q.trunc(); ++d) out.s_[2 * d] = q[d];
    return out;
  }

  int trunc() const { return s_.trunc(); }
  const Rational& operator[](int d) const { return s_[d]; }
  Rational& operator[](int d) { return s_[d]; }

  bool is_zero() const { return s_.is_zero(); }

  bool odd_supported() const {
    for (int d = 0; d <= trunc(); d += 2)
      if (s_[d] != 0) return false;
    return true;
  }

  HalfSeries truncated(int t) const { return HalfSeries(s_.truncated(t)); }

  // q d/dq in the u-grading: the coefficient of u^d picks up d/2.
  HalfSeries q_log_derivative() const {
    HalfSeries out(trunc());
    for (int d = 1; d <= trunc(); ++d) out.s_[d] = Rational(d, 2) * s_[d];
    return out;
  }

  friend HalfSeries operator+(const HalfSeries& a, const HalfSeries& b) { return HalfSeries(a.s_ + b.s_); }
  friend HalfSeries operator-(const HalfSeries& a, const HalfSeries& b) { return HalfSeries(a.s_ - b.s_); }
  friend HalfSeries operator-(const HalfSeries& a) { return HalfSeries(-a.s_); }
  friend HalfSeries operator*(const HalfSeries& a, const HalfSeries& b) { return HalfSeries(a.s_ * b.s_); }
  friend HalfSeries operator/(const HalfSeries& a, const HalfSeries& b) { return HalfSeries(a.s_ / b.s_); }
  friend HalfSeries operator*(const HalfSeries& a, const Rational& r) { return HalfSeries(a.s_ * r); }
  friend HalfSeries operator*(const Rational& r, const HalfSeries& a) { return HalfSeries(a.s_ * r); }
  friend bool operator==(const HalfSeries& a, const HalfSeries& b) { return a.s_ == b.s_; }

 private:
  explicit HalfSeries(QSeries s) : s_(std::move(s)) {}

  QSeries s_;  // index = u-exponent
};

// Rewrites an odd-supported series sum c_d u^d, u = q^(1/2), through the
// substitution q = q_of_Q(Q) as a series in U = Q^(1/2). Requires
// q_of_Q = Q + O(Q^2), so that q^(d/2) = U^d * (q_of_Q(Q)/Q)^(d/2) with a
// well-defined square root. The result is known through
// min(in.trunc(), 2 * q_of_Q.trunc() - 1).
inline HalfSeries substitute_half(const HalfSeries& in, const QSeries& q_of_Q) {
  if (!in.odd_supported())
    throw std::invalid_argument("substitution requires an odd-supported series");
  if (q_of_Q.trunc() < 1 || q_of_Q[0] != 0 || q_of_Q[1] != 1)
    throw std::invalid_argument("substitution needs q(Q) = Q + O(Q^2)");

  const int tq = q_of_Q.trunc();
  QSeries v(tq - 1);  // q_of_Q / Q
  for (int d = 0; d < tq; ++d) v[d] = q_of_Q[d + 1];
  const QSeries root = sqrt_series(v);
  const QSeries root_sq = root * root;

  const int t = std::min(in.trunc(), 2 * tq - 1);
  HalfSeries out(t);
  QSeries pow = root;  // root^d for the current odd d
  for (int d = 1; d <= t; d += 2) {
    if (in[d] != 0)
      for (int j = 0; j <= pow.trunc() && d + 2 * j <= t; ++j) out[d + 2 * j] += in[d] * pow[j];
    if (d + 2 <= t) pow = pow * root_sq;
  }
  return out;
}

}  // namespace cydisk
