#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace cydisk {

// All scalar arithmetic in this library is exact: arbitrary-precision
// rationals, kept in lowest terms with positive denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_unit(const Rational& r) { return r != 0; }

// base^e for any integer exponent; base must be nonzero when e < 0.
inline Rational rational_pow(Rational base, long long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero base with negative exponent");
    base = Rational(1) / base;  // the (num, den) ctor rejects negative denominators
    e = -e;
  }
  Rational out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

// "num/den", or just "num" when the denominator is 1.
inline std::string fraction_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

}  // namespace cydisk
