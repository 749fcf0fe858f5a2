#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "cydisk/disk.hpp"
#include "cydisk/geometry.hpp"
#include "cydisk/half_series.hpp"
#include "cydisk/jet.hpp"
#include "cydisk/mirror.hpp"
#include "cydisk/rational.hpp"
#include "cydisk/series.hpp"

namespace cydisk {

// First u-order where two series disagree (within the shared truncation),
// or -1 when they agree everywhere both are known.
inline int first_difference(const HalfSeries& a, const HalfSeries& b) {
  const int t = std::min(a.trunc(), b.trunc());
  for (int d = 0; d <= t; ++d)
    if (a[d] != b[d]) return d;
  return -1;
}

// Torus weights lambda_1..lambda_m: nonzero and pairwise distinct in
// absolute value. Freedom from denominator collisions at a given geometry
// and truncation is a separate check (validate_weights).
class WeightAssignment {
 public:
  explicit WeightAssignment(std::vector<Rational> lambdas) : lambdas_(std::move(lambdas)) {
    for (size_t i = 0; i < lambdas_.size(); ++i) {
      if (lambdas_[i] == 0) throw std::invalid_argument("weights must be nonzero");
      for (size_t j = i + 1; j < lambdas_.size(); ++j)
        if (lambdas_[i] == lambdas_[j] || lambdas_[i] == -lambdas_[j])
          throw std::invalid_argument("weights must be distinct in absolute value");
    }
  }

  int m() const { return static_cast<int>(lambdas_.size()); }
  const std::vector<Rational>& lambdas() const { return lambdas_; }

 private:
  std::vector<Rational> lambdas_;
};

// The full weight vector (lambda_1, -lambda_1, ..., lambda_m, -lambda_m)
// padded with a single 0 when n is odd.
struct AlphaVector {
  int n = 0;
  std::vector<Rational> alphas;
};

inline AlphaVector alpha_from_lambda(int n, const WeightAssignment& w) {
  if (w.m() != n / 2) throw std::invalid_argument("weight count must equal floor(n / 2)");
  AlphaVector out;
  out.n = n;
  out.alphas.reserve(static_cast<size_t>(n));
  for (const Rational& lam : w.lambdas()) {
    out.alphas.push_back(lam);
    out.alphas.push_back(-lam);
  }
  if (n % 2 == 1) out.alphas.push_back(Rational(0));
  return out;
}

// A denominator of the fixed-point sum that would vanish for this weight
// choice. `index` is the offending factor's inner index: the odd multiple s
// for an edge-factor collision, the positive step r for a vertex-series one.
struct WeightCollision {
  enum class Kind { edge_factor, y_denominator };
  Kind kind = Kind::edge_factor;
  int i = 0;      // fixed-point index, 0-based
  int gamma = 0;  // odd edge degree
  int k = 0;      // colliding weight index, 0-based
  int index = 0;
};

// Scans every denominator the fixed-point sum touches through u^trunc_u and
// returns the collisions found (empty means the assignment is usable).
inline std::vector<WeightCollision> validate_weights(const Geometry& g,
                                                     const WeightAssignment& w,
                                                     int trunc_u) {
  const AlphaVector alpha = alpha_from_lambda(g.n(), w);
  std::vector<WeightCollision> out;
  for (int i = 0; i < 2 * (g.n() / 2); ++i) {
    for (int gamma = 1; gamma <= trunc_u; gamma += 2) {
      const Rational h = alpha.alphas[static_cast<size_t>(i)] / gamma;
      for (int k = 0; k < g.n(); ++k) {
        for (int s = 1; s <= trunc_u; s += 2) {
          if (k == i && s == gamma) continue;
          if (s * h - alpha.alphas[static_cast<size_t>(k)] == 0)
            out.push_back({WeightCollision::Kind::edge_factor, i, gamma, k, s});
        }
        for (int r = 1; r <= (trunc_u - gamma) / 2; ++r) {
          if (alpha.alphas[static_cast<size_t>(i)] - alpha.alphas[static_cast<size_t>(k)] +
                  2 * r * h ==
              0)
            out.push_back({WeightCollision::Kind::y_denominator, i, gamma, k, r});
        }
      }
    }
  }
  return out;
}

// Contribution of the degree-gamma half-edge at the fixed point with weight
// alpha_i (gamma odd):
//   prod_k (a_k gamma)!!
//   / ( gamma * prod_{k, s odd <= gamma, (k,s) != (i,gamma)} (s alpha_i / gamma - alpha_k) )
//   * (alpha_i / gamma)^((n gamma + l) / 2).
// The exponent is integral because n and l share parity and gamma is odd.
inline Rational disk_edge_factor(const Geometry& g, int i, int gamma, const AlphaVector& alpha) {
  if (alpha.n != g.n()) throw std::invalid_argument("weight vector does not match geometry");
  if (i < 0 || i >= 2 * (g.n() / 2)) throw std::invalid_argument("fixed-point index out of range");
  if (gamma < 1 || gamma % 2 == 0) throw std::invalid_argument("edge degree must be positive odd");

  const Rational h = alpha.alphas[static_cast<size_t>(i)] / gamma;
  Rational num(1);
  for (int ak : g.degrees()) num *= Rational(double_factorial(ak * gamma));
  Rational den(gamma);
  for (int k = 0; k < g.n(); ++k)
    for (int s = 1; s <= gamma; s += 2) {
      if (k == i && s == gamma) continue;
      const Rational f = s * h - alpha.alphas[static_cast<size_t>(k)];
      if (f == 0) throw std::domain_error("weight collision");
      den *= f;
    }
  const long long e = (static_cast<long long>(g.n()) * gamma + g.l()) / 2;
  return num / den * rational_pow(h, e);
}

// Vertex series
//   Y(x, hbar, q) = sum_d q^d  prod_k prod_{r=1..a_k d} (a_k x + r hbar)
//                            / prod_{r=1..d} prod_k (x - alpha_k + r hbar).
inline QSeries y_series(const Geometry& g, const Rational& x, const Rational& hbar,
                        const AlphaVector& alpha, int trunc) {
  QSeries out(trunc);
  out[0] = 1;
  Rational num(1), den(1);
  for (int d = 1; d <= trunc; ++d) {
    for (int ak : g.degrees())
      for (int r = ak * (d - 1) + 1; r <= ak * d; ++r) num *= ak * x + r * hbar;
    for (const Rational& ak : alpha.alphas) {
      const Rational f = x - ak + d * hbar;
      if (f == 0) throw std::domain_error("weight collision");
      den *= f;
    }
    out[d] = num / den;
  }
  return out;
}

namespace detail {

// D^s applied to x^l Y / I_0 with D = (1/I_j)(x + hbar q d/dq) at step j;
// the I_0..I_s tower is passed in so grids can share it.
inline QSeries ds_y0_from_tower(const Geometry& g, int s, const Rational& x,
                                const Rational& hbar, const AlphaVector& alpha, int trunc,
                                const std::vector<QSeries>& tower) {
  QSeries cur =
      y_series(g, x, hbar, alpha, trunc) * rational_pow(x, g.l()) / tower[0];
  for (int j = 1; j <= s; ++j)
    cur = (x * cur + hbar * q_log_derivative(cur)) / tower[static_cast<size_t>(j)];
  return cur;
}

inline std::vector<QSeries> i_tower(const Geometry& g, int top, int trunc) {
  std::vector<QSeries> out;
  out.reserve(static_cast<size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) out.push_back(I_series(g, j, trunc));
  return out;
}

}  // namespace detail

// The derivative chain D^s Y_0 evaluated at a single fixed point.
inline QSeries ds_y0_series(const Geometry& g, int s, const Rational& x, const Rational& hbar,
                            const AlphaVector& alpha, int trunc) {
  if (s < 0) throw std::invalid_argument("derivative order must be non-negative");
  return detail::ds_y0_from_tower(g, s, x, hbar, alpha, trunc, detail::i_tower(g, s, trunc));
}

using EdgeFactorFn = std::function<Rational(const Geometry&, int, int, const AlphaVector&)>;

// Localization sum over fixed points i and odd edge degrees gamma:
//   sum_i sum_gamma q^(gamma/2) D_{i,gamma} alpha_i^(-l) hbar^p (D^s Y_0)|_{hbar = 2 alpha_i / gamma},
// assembled as a series in u = q^(1/2). The edge factor is injectable so a
// deliberately corrupted one can be fed through the same plumbing.
inline HalfSeries fixed_point_sum(const Geometry& g, int p, int s, const WeightAssignment& w,
                                  int trunc_u, const EdgeFactorFn& edge) {
  if (p < 0 || s < 0 || p + s > g.p_max())
    throw std::invalid_argument("orders must satisfy p, s >= 0 and p + s <= p_max");
  if (trunc_u < 1) throw std::invalid_argument("trunc_u must be positive");
  const AlphaVector alpha = alpha_from_lambda(g.n(), w);
  const std::vector<QSeries> tower = detail::i_tower(g, s, (trunc_u - 1) / 2);

  HalfSeries out(trunc_u);
  for (int i = 0; i < 2 * g.m(); ++i) {
    const Rational& a_i = alpha.alphas[static_cast<size_t>(i)];
    for (int gamma = 1; gamma <= trunc_u; gamma += 2) {
      const Rational hbar = Rational(2) * a_i / gamma;
      const Rational scale = edge(g, i, gamma, alpha) *
                             rational_pow(a_i, -static_cast<long long>(g.l())) *
                             rational_pow(hbar, p);
      const int tq = (trunc_u - gamma) / 2;
      const QSeries contrib = detail::ds_y0_from_tower(g, s, a_i, hbar, alpha, tq, tower);
      for (int j = 0; j <= tq; ++j) out[gamma + 2 * j] += scale * contrib[j];
    }
  }
  return out;
}

inline HalfSeries fixed_point_sum(const Geometry& g, int p, int s, const WeightAssignment& w,
                                  int trunc_u) {
  return fixed_point_sum(g, p, s, w, trunc_u,
                         [](const Geometry& gg, int i, int gamma, const AlphaVector& a) {
                           return disk_edge_factor(gg, i, gamma, a);
                         });
}

// Independent closed form for I_0 * fixed_point_sum(p, 0): per odd t, the
// residue at w = 0 of the weight-dependent product
//   2^p prod_k (a_k t)!!  *  w^(p_max - p - 1) prod_k prod_{s odd <= t} 1 / (s - alpha_k w),
// i.e. the coefficient of w^(p - p_max) of the product, which vanishes for
// p < p_max (the integrand is analytic) and needs a genuine expansion only
// at w^0.
inline HalfSeries residue_oracle(const Geometry& g, int p, int trunc_u,
                                 const AlphaVector& alpha) {
  if (p < 0 || p > g.p_max()) throw std::domain_error("out of implemented range");
  if (alpha.n != g.n()) throw std::invalid_argument("weight vector does not match geometry");
  HalfSeries out(trunc_u);
  const int target = p - g.p_max();
  if (target < 0) return out;
  for (int t = 1; t <= trunc_u; t += 2) {
    Rational num = rational_pow(Rational(2), p);
    for (int ak : g.degrees()) num *= Rational(double_factorial(ak * t));
    WJet acc(std::vector<Rational>{Rational(1)}, target);
    for (int k = 0; k < g.n(); ++k)
      for (int s = 1; s <= t; s += 2) {
        std::vector<Rational> geo(static_cast<size_t>(target) + 1);
        Rational term(1, s);
        for (int j = 0; j <= target; ++j) {
          geo[static_cast<size_t>(j)] = term;
          term *= alpha.alphas[static_cast<size_t>(k)] / s;
        }
        acc *= WJet(std::move(geo), target);
      }
    out[t] = num * acc.coeff(target);
  }
  return out;
}

// Deterministic rejection sampler: draws lambda_1..lambda_m from the odd
// primes below 200 without replacement, keeps assignments that pass
// validate_weights at trunc_u, and skips repeats of an earlier draw.
inline std::vector<WeightAssignment> sample_weights(const Geometry& g, int count,
                                                    std::uint64_t seed, int trunc_u) {
  static const int kOddPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,
                                   41,  43,  47,  53,  59,  61,  67,  71,  73,  79,  83,
                                   89,  97,  101, 103, 107, 109, 113, 127, 131, 137, 139,
                                   149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199};
  if (count < 0) throw std::invalid_argument("sample count must be non-negative");
  if (g.m() > static_cast<int>(std::size(kOddPrimes)))
    throw std::invalid_argument("weight pool too small for this geometry");
  std::mt19937_64 rng(seed);
  std::vector<WeightAssignment> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 20000) throw std::runtime_error("weight sampling did not converge");
    std::vector<int> pool(std::begin(kOddPrimes), std::end(kOddPrimes));
    std::vector<Rational> lams;
    lams.reserve(static_cast<size_t>(g.m()));
    for (int j = 0; j < g.m(); ++j) {
      // rng() % size is deterministic across platforms, unlike the
      // distribution adaptors; the tiny modulo bias is irrelevant here.
      const size_t idx = static_cast<size_t>(rng() % pool.size());
      lams.push_back(Rational(pool[idx]));
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    bool repeat = false;
    for (const WeightAssignment& prev : out)
      if (prev.lambdas() == lams) repeat = true;
    if (repeat) continue;
    WeightAssignment cand(std::move(lams));
    if (!validate_weights(g, cand, trunc_u).empty()) continue;
    out.push_back(std::move(cand));
  }
  return out;
}

enum class IdentityKind { residue, vanishing, nested_formula, weight_independence, theorem };

inline const char* identity_name(IdentityKind k) {
  switch (k) {
    case IdentityKind::residue: return "residue";
    case IdentityKind::vanishing: return "vanishing";
    case IdentityKind::nested_formula: return "nested-formula";
    case IdentityKind::weight_independence: return "weight-independence";
    case IdentityKind::theorem: return "theorem";
  }
  return "?";
}

struct IdentityCheck {
  IdentityKind kind = IdentityKind::residue;
  int p = -1;              // -1 when not applicable
  int s = -1;              // -1 when not applicable
  int sample = -1;         // weight-sample index, -1 when not applicable
  bool pass = false;
  int first_diff_u = -1;   // first differing u-order, -1 when passing
  double elapsed_ms = 0.0;
};

struct VerifyReport {
  int trunc_u = 0;  // requested order; checks run with two extra guard orders
  bool all_pass = false;
  double total_ms = 0.0;
  std::vector<IdentityCheck> checks;
};

// Runs the full identity battery for one geometry over the given weight
// samples: residue match of the localization sum, vanishing below the top
// order, agreement with every nesting depth of the closed formula, weight
// independence across samples, and the disk-potential equality itself.
// Everything is evaluated at trunc_u + 2 so that agreement is not an
// artifact of the requested truncation.
inline VerifyReport verify_identities(const Geometry& g,
                                      const std::vector<WeightAssignment>& samples,
                                      int trunc_u) {
  if (samples.size() < 2) throw std::invalid_argument("need >= 2 weight samples");
  const int T = trunc_u + 2;
  for (const WeightAssignment& w : samples)
    if (!validate_weights(g, w, T).empty())
      throw std::invalid_argument("weight sample fails validation at the working truncation");

  VerifyReport rep;
  rep.trunc_u = trunc_u;
  const auto wall0 = std::chrono::steady_clock::now();

  std::map<std::tuple<int, int, int>, HalfSeries> cache;
  const auto fps = [&](int sample, int p, int s) -> const HalfSeries& {
    const auto key = std::make_tuple(sample, p, s);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, fixed_point_sum(g, p, s, samples[static_cast<size_t>(sample)], T))
               .first;
    return it->second;
  };

  const auto run = [&](IdentityKind kind, int p, int s, int sample, auto&& body) {
    IdentityCheck c;
    c.kind = kind;
    c.p = p;
    c.s = s;
    c.sample = sample;
    const auto t0 = std::chrono::steady_clock::now();
    c.first_diff_u = body();
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    c.pass = c.first_diff_u < 0;
    rep.checks.push_back(c);
  };

  const int nsam = static_cast<int>(samples.size());
  const HalfSeries i0 = HalfSeries::lift(I_series(g, 0, T / 2));
  const HalfSeries zero(T);

  for (int j = 0; j < nsam; ++j) {
    const AlphaVector alpha = alpha_from_lambda(g.n(), samples[static_cast<size_t>(j)]);
    for (int p = 0; p <= g.p_max(); ++p)
      run(IdentityKind::residue, p, -1, j,
          [&] { return first_difference(i0 * fps(j, p, 0), residue_oracle(g, p, T, alpha)); });
  }

  for (int j = 0; j < nsam; ++j)
    for (int p = 0; p + 1 <= g.p_max(); ++p)
      for (int s = 0; p + s <= g.p_max() - 1; ++s)
        run(IdentityKind::vanishing, p, s, j,
            [&] { return first_difference(fps(j, p, s), zero); });

  for (int s = 0; s <= g.p_max(); ++s) {
    const HalfSeries level = nested_potential_level(g, s, T);
    for (int j = 0; j < nsam; ++j)
      run(IdentityKind::nested_formula, g.p_max() - s, s, j,
          [&] { return first_difference(Rational(2) * fps(j, g.p_max() - s, s), level); });
  }

  for (int p = 0; p <= g.p_max(); ++p)
    for (int s = 0; p + s <= g.p_max(); ++s)
      for (int j = 1; j < nsam; ++j)
        run(IdentityKind::weight_independence, p, s, j,
            [&] { return first_difference(fps(j, p, s), fps(0, p, s)); });

  const HalfSeries potential = nested_disk_potential_q(g, T);
  for (int j = 0; j < nsam; ++j)
    run(IdentityKind::theorem, 0, g.p_max(), j,
        [&] { return first_difference(Rational(2) * fps(j, 0, g.p_max()), potential); });

  rep.total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - wall0).count();
  rep.all_pass = true;
  for (const IdentityCheck& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

}  // namespace cydisk
