#pragma once

#include <random>
#include <vector>

#include "cydisk/rational.hpp"
#include "cydisk/series.hpp"

namespace testutil {

inline cydisk::Rational rand_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return cydisk::Rational(num(rng)) / den(rng);
}

// Random series with the given constant term.
inline cydisk::QSeries rand_series(std::mt19937& rng, int trunc, const cydisk::Rational& c0) {
  cydisk::QSeries s(trunc);
  s[0] = c0;
  for (int d = 1; d <= trunc; ++d) s[d] = rand_rational(rng);
  return s;
}

inline cydisk::QSeries make_series(std::vector<cydisk::Rational> coeffs) {
  const int t = static_cast<int>(coeffs.size()) - 1;
  return cydisk::QSeries(t, std::move(coeffs));
}

}  // namespace testutil
