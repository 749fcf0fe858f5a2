#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cydisk/rational.hpp"
#include "cydisk/series.hpp"

namespace cydisk {

// Truncated polynomial in the auxiliary variable w (a w-jet).
//
// cap() is the highest w-degree whose coefficient is known; arithmetic meets
// caps the same way PowerSeries meets truncations. Exactly-known polynomials
// (scalars in particular) carry the sentinel cap kExactCap, since every
// higher coefficient is known to vanish. Coefficients beyond the stored
// vector but within the cap are zero.
class WJet {
 public:
  static constexpr int kExactCap = std::numeric_limits<int>::max();

  WJet() : c_{Rational(0)}, cap_(kExactCap) {}
  WJet(int v) : c_{Rational(v)}, cap_(kExactCap) {}  // NOLINT: ring embedding
  WJet(Rational v) : c_{std::move(v)}, cap_(kExactCap) {}  // NOLINT

  WJet(std::vector<Rational> coeffs, int cap) : c_(std::move(coeffs)), cap_(cap) {
    if (cap < 0) throw std::invalid_argument("jet cap must be non-negative");
    if (c_.empty()) c_.push_back(Rational(0));
    if (cap != kExactCap && static_cast<int>(c_.size()) > cap + 1)
      c_.resize(static_cast<size_t>(cap) + 1);
  }

  int cap() const { return cap_; }
  int stored_degree() const { return static_cast<int>(c_.size()) - 1; }

  Rational coeff(int j) const {
    if (j < 0 || j > cap_) throw std::out_of_range("jet coefficient beyond cap");
    return j <= stored_degree() ? c_[static_cast<size_t>(j)] : Rational(0);
  }

  Rational eval0() const { return c_[0]; }  // value at w = 0

  bool is_scalar() const {
    for (size_t j = 1; j < c_.size(); ++j)
      if (c_[j] != 0) return false;
    return cap_ == kExactCap;
  }

  friend WJet operator+(const WJet& a, const WJet& b) {
    const int cap = std::min(a.cap_, b.cap_);
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t j = 0; j < c.size(); ++j) {
      if (j < a.c_.size()) c[j] += a.c_[j];
      if (j < b.c_.size()) c[j] += b.c_[j];
    }
    return WJet(std::move(c), cap);
  }

  friend WJet operator-(const WJet& a, const WJet& b) { return a + (-b); }

  friend WJet operator-(const WJet& a) {
    std::vector<Rational> c(a.c_);
    for (Rational& x : c) x = -x;
    return WJet(std::move(c), a.cap_);
  }

  WJet& operator+=(const WJet& o) { return *this = *this + o; }
  WJet& operator-=(const WJet& o) { return *this = *this - o; }

  friend WJet operator*(const WJet& a, const WJet& b) {
    const int cap = std::min(a.cap_, b.cap_);
    const int natural = a.stored_degree() + b.stored_degree();
    const int top = cap == kExactCap ? natural : std::min(cap, natural);
    std::vector<Rational> c(static_cast<size_t>(top) + 1, Rational(0));
    for (int i = 0; i <= a.stored_degree(); ++i) {
      if (a.c_[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; i + j <= top && j <= b.stored_degree(); ++j)
        c[static_cast<size_t>(i + j)] +=
            a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
    return WJet(std::move(c), cap);
  }

  WJet& operator*=(const WJet& o) { return *this = *this * o; }

  // Exact within the cap; the divisor's w^0 coefficient must be nonzero. A
  // quotient by a non-scalar jet is an infinite series in w, so it needs a
  // finite cap on at least one side.
  friend WJet operator/(const WJet& a, const WJet& b) {
    if (b.c_[0] == 0) throw std::domain_error("non-unit divisor");
    const int cap = std::min(a.cap_, b.cap_);
    if (b.is_scalar() || (cap == kExactCap && a.stored_degree() == 0 &&
                          a.c_[0] == 0)) {
      std::vector<Rational> c(a.c_);
      for (Rational& x : c) x /= b.c_[0];
      return WJet(std::move(c), cap);
    }
    if (cap == kExactCap)
      throw std::domain_error("non-polynomial jet quotient needs a finite cap");
    std::vector<Rational> c(static_cast<size_t>(cap) + 1, Rational(0));
    for (int d = 0; d <= cap; ++d) {
      Rational s = d <= a.stored_degree() ? a.c_[static_cast<size_t>(d)] : Rational(0);
      for (int j = 0; j < d; ++j)
        if (d - j <= b.stored_degree())
          s -= c[static_cast<size_t>(j)] * b.c_[static_cast<size_t>(d - j)];
      c[static_cast<size_t>(d)] = s / b.c_[0];
    }
    return WJet(std::move(c), cap);
  }

  // Equal when every coefficient both sides can see agrees.
  friend bool operator==(const WJet& a, const WJet& b) {
    const int cap = std::min(a.cap_, b.cap_);
    const int top = std::min<long long>(cap, std::max(a.stored_degree(), b.stored_degree()));
    for (int j = 0; j <= top; ++j) {
      const Rational x = j <= a.stored_degree() ? a.c_[static_cast<size_t>(j)] : Rational(0);
      const Rational y = j <= b.stored_degree() ? b.c_[static_cast<size_t>(j)] : Rational(0);
      if (x != y) return false;
    }
    return true;
  }

  // Quotient by w of a jet with vanishing constant term; drops the cap by one.
  WJet shifted_down() const {
    if (c_[0] != 0) throw std::domain_error("w-division of jet with nonzero constant term");
    if (cap_ == 0) throw std::domain_error("jet cap exhausted");
    std::vector<Rational> c(c_.begin() + 1, c_.end());
    return WJet(std::move(c), cap_ == kExactCap ? kExactCap : cap_ - 1);
  }

 private:
  std::vector<Rational> c_;  // c_[j] is the coefficient of w^j; never empty
  int cap_;
};

inline bool is_unit(const WJet& j) { return j.eval0() != 0; }

// Series in q whose coefficients are w-jets.
using JetSeries = PowerSeries<WJet>;

// The w = 0 slice.
inline QSeries eval_w0(const JetSeries& s) {
  QSeries out(s.trunc());
  for (int d = 0; d <= s.trunc(); ++d) out[d] = s[d].eval0();
  return out;
}

// A plain q-series viewed as a jet series of scalars.
inline JetSeries embed_jets(const QSeries& s) {
  JetSeries out(s.trunc());
  for (int d = 0; d <= s.trunc(); ++d) out[d] = WJet(s[d]);
  return out;
}

// The smallest cap over all coefficients: how many w-orders the series knows.
inline int jet_order(const JetSeries& s) {
  int cap = WJet::kExactCap;
  for (int d = 0; d <= s.trunc(); ++d) cap = std::min(cap, s[d].cap());
  return cap;
}

// Coefficient-wise quotient by w; every w^0 coefficient must vanish.
inline JetSeries divide_by_w(const JetSeries& s) {
  JetSeries out(s.trunc());
  for (int d = 0; d <= s.trunc(); ++d) {
    if (s[d].eval0() != 0) throw std::domain_error("M-operator divisibility violated");
    out[d] = s[d].shifted_down();
  }
  return out;
}

}  // namespace cydisk
