#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cydisk/rational.hpp"

namespace cydisk {

inline Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial needs a non-negative argument");
  thread_local std::vector<Int> cache{Int(1)};
  while (static_cast<int>(cache.size()) <= n)
    cache.push_back(cache.back() * static_cast<int>(cache.size()));
  return cache[static_cast<size_t>(n)];
}

// k!! for odd k: k (k-2) (k-4) ... 1.
inline Int double_factorial(int k) {
  if (k < 1 || k % 2 == 0)
    throw std::invalid_argument("double factorial needs a positive odd argument");
  thread_local std::vector<Int> cache{Int(1)};  // cache[i] = (2i+1)!!
  while (static_cast<int>(cache.size()) <= (k - 1) / 2)
    cache.push_back(cache.back() * (2 * static_cast<int>(cache.size()) + 1));
  return cache[static_cast<size_t>((k - 1) / 2)];
}

// Input datum: a complete intersection of l hypersurfaces of odd degrees
// a_1..a_l in projective space with n = sum(a_k) homogeneous coordinates,
// cut down to complex dimension n - l - 1. The constraints keep the target
// Calabi-Yau and of odd complex dimension, so n - l must be positive
// (evenness is automatic for odd degrees).
class Geometry {
 public:
  explicit Geometry(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw std::invalid_argument("degrees must be non-empty");
    for (int a : degrees_) {
      if (a < 1) throw std::invalid_argument("degrees must be positive");
      if (a % 2 == 0) throw std::invalid_argument("degrees must be odd");
      n_ += a;
    }
    if (n_ == l()) throw std::invalid_argument("n - l must be positive and even");
  }

  const std::vector<int>& degrees() const { return degrees_; }
  int n() const { return n_; }
  int l() const { return static_cast<int>(degrees_.size()); }
  int m() const { return n_ / 2; }                  // number of weight pairs
  int p_max() const { return (n_ - l() - 2) / 2; }  // depth of the nested formula

 private:
  std::vector<int> degrees_;
  int n_ = 0;
};

}  // namespace cydisk
