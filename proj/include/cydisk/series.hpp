#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cydisk/rational.hpp"

namespace cydisk {

// Truncated formal power series over an exact commutative ring R.
//
// A series with trunc() == T is known modulo q^(T+1). Binary operations on
// operands of different truncation return the minimum of the two, so a result
// never claims coefficients it cannot actually know. R must provide ring
// arithmetic, exact division where requested, equality, construction from
// int, and an ADL-visible is_unit().
template <typename R>
class PowerSeries {
 public:
  explicit PowerSeries(int trunc) : c_(checked(trunc) + 1) {}

  PowerSeries(int trunc, std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != checked(trunc) + 1)
      throw std::invalid_argument("coefficient count must equal trunc + 1");
  }

  static PowerSeries constant(R value, int trunc) {
    PowerSeries s(trunc);
    s.c_[0] = std::move(value);
    return s;
  }

  // The series q itself.
  static PowerSeries identity(int trunc) {
    if (trunc < 1) throw std::invalid_argument("identity needs trunc >= 1");
    PowerSeries s(trunc);
    s.c_[1] = R(1);
    return s;
  }

  int trunc() const { return static_cast<int>(c_.size()) - 1; }

  const R& operator[](int d) const { return c_.at(static_cast<size_t>(d)); }
  R& operator[](int d) { return c_.at(static_cast<size_t>(d)); }
  const std::vector<R>& coeffs() const { return c_; }

  PowerSeries truncated(int t) const {
    if (t < 0 || t > trunc())
      throw std::invalid_argument("truncation must shrink within the known range");
    return PowerSeries(t, std::vector<R>(c_.begin(), c_.begin() + t + 1));
  }

  bool is_zero() const {
    for (const R& c : c_)
      if (!(c == R(0))) return false;
    return true;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int t = std::min(a.trunc(), b.trunc());
    PowerSeries out(t);
    for (int d = 0; d <= t; ++d) out.c_[d] = a.c_[d] + b.c_[d];
    return out;
  }

  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int t = std::min(a.trunc(), b.trunc());
    PowerSeries out(t);
    for (int d = 0; d <= t; ++d) out.c_[d] = a.c_[d] - b.c_[d];
    return out;
  }

  friend PowerSeries operator-(const PowerSeries& a) {
    PowerSeries out(a.trunc());
    for (int d = 0; d <= a.trunc(); ++d) out.c_[d] = -a.c_[d];
    return out;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int t = std::min(a.trunc(), b.trunc());
    PowerSeries out(t);
    for (int i = 0; i <= t; ++i) {
      if (a.c_[i] == R(0)) continue;
      for (int j = 0; i + j <= t; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
  }

  // Long division; the divisor's constant term must be a unit.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    if (!is_unit(b.c_[0])) throw std::domain_error("non-unit divisor");
    const int t = std::min(a.trunc(), b.trunc());
    PowerSeries out(t);
    for (int d = 0; d <= t; ++d) {
      R s = a.c_[d];
      for (int j = 0; j < d; ++j) s -= out.c_[j] * b.c_[d - j];
      out.c_[d] = s / b.c_[0];
    }
    return out;
  }

  friend PowerSeries operator*(const PowerSeries& a, const R& r) {
    PowerSeries out(a.trunc());
    for (int d = 0; d <= a.trunc(); ++d) out.c_[d] = a.c_[d] * r;
    return out;
  }
  friend PowerSeries operator*(const R& r, const PowerSeries& a) { return a * r; }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    if (a.trunc() != b.trunc()) return false;
    for (int d = 0; d <= a.trunc(); ++d)
      if (!(a.c_[d] == b.c_[d])) return false;
    return true;
  }

 private:
  static int checked(int trunc) {
    if (trunc < 0) throw std::invalid_argument("trunc must be non-negative");
    return trunc;
  }

  std::vector<R> c_;  // c_[d] is the coefficient of q^d
};

using QSeries = PowerSeries<Rational>;

// q d/dq: multiplies the coefficient of q^d by d. Truncation is preserved.
template <typename R>
PowerSeries<R> q_log_derivative(const PowerSeries<R>& s) {
  PowerSeries<R> out(s.trunc());
  for (int d = 1; d <= s.trunc(); ++d) out[d] = R(d) * s[d];
  return out;
}

// d/dq; the result is one order shorter than the input.
template <typename R>
PowerSeries<R> derivative(const PowerSeries<R>& s) {
  if (s.trunc() < 1) throw std::invalid_argument("derivative needs trunc >= 1");
  PowerSeries<R> out(s.trunc() - 1);
  for (int d = 1; d <= s.trunc(); ++d) out[d - 1] = R(d) * s[d];
  return out;
}

// exp of a series with zero constant term.
template <typename R>
PowerSeries<R> exp_series(const PowerSeries<R>& s) {
  if (!(s[0] == R(0))) throw std::domain_error("constant-term mismatch");
  const int t = s.trunc();
  PowerSeries<R> out(t);
  out[0] = R(1);
  for (int d = 1; d <= t; ++d) {
    R acc(0);
    for (int k = 1; k <= d; ++k) acc += R(k) * s[k] * out[d - k];
    out[d] = acc / R(d);
  }
  return out;
}

// log of a series with constant term one.
template <typename R>
PowerSeries<R> log_series(const PowerSeries<R>& s) {
  if (!(s[0] == R(1))) throw std::domain_error("constant-term mismatch");
  const int t = s.trunc();
  PowerSeries<R> out(t);
  for (int d = 1; d <= t; ++d) {
    R acc = R(d) * s[d];
    for (int k = 1; k < d; ++k) acc -= R(k) * out[k] * s[d - k];
    out[d] = acc / R(d);
  }
  return out;
}

// Square root with constant term one.
template <typename R>
PowerSeries<R> sqrt_series(const PowerSeries<R>& s) {
  if (!(s[0] == R(1))) throw std::domain_error("constant-term mismatch");
  const int t = s.trunc();
  PowerSeries<R> out(t);
  out[0] = R(1);
  for (int d = 1; d <= t; ++d) {
    R acc = s[d];
    for (int k = 1; k < d; ++k) acc -= out[k] * out[d - k];
    out[d] = acc / R(2);
  }
  return out;
}

// f(g) for g with zero constant term (Horner from the top coefficient down).
template <typename R>
PowerSeries<R> compose(const PowerSeries<R>& f, const PowerSeries<R>& g) {
  if (!(g[0] == R(0)))
    throw std::invalid_argument("composition requires zero constant term");
  const int t = std::min(f.trunc(), g.trunc());
  const PowerSeries<R> gt = g.truncated(t);
  PowerSeries<R> out = PowerSeries<R>::constant(f[t], t);
  for (int k = t - 1; k >= 0; --k) {
    out = out * gt;
    out[0] += f[k];
  }
  return out;
}

// Solves Q = q U(q) for q as a series in Q, given a unit U with U(0) = 1.
// Newton iteration on f(x) = x U(x) - Q; each pass doubles the valid order,
// and f is carried one order past U so the update stays valid through
// U.trunc(). The result x satisfies x(Q) = Q + O(Q^2).
template <typename R>
PowerSeries<R> invert_unit_relation(const PowerSeries<R>& U) {
  if (!(U[0] == R(1))) throw std::domain_error("constant-term mismatch");
  const int t = U.trunc();
  if (t < 1) throw std::invalid_argument("inversion needs trunc >= 1");
  PowerSeries<R> f(t + 1);
  for (int d = 0; d <= t; ++d) f[d + 1] = U[d];
  const PowerSeries<R> fp = derivative(f);  // trunc t, so the quotient below keeps order t
  const PowerSeries<R> id = PowerSeries<R>::identity(t);
  PowerSeries<R> x = id;
  for (int pass = 0; pass <= t + 1; ++pass) {
    const PowerSeries<R> err = compose(f, x) - id;
    if (err.is_zero()) return x;
    x = x - err / compose(fp, x);
  }
  throw std::logic_error("inversion did not converge");
}

}  // namespace cydisk
