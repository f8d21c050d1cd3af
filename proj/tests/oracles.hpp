#pragma once

// Test-side oracles. Nothing here calls into the solver library, so
// agreement with them is independent evidence.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>

namespace oracle {

using C = std::complex<double>;

/// Monic coefficients {a, b, c} of (x - z0)(x - z1)(x - z2).
inline std::array<C, 3> expand(const std::array<C, 3>& z) {
  return {-(z[0] + z[1] + z[2]), z[0] * z[1] + z[0] * z[2] + z[1] * z[2], -(z[0] * z[1] * z[2])};
}

inline C horner(C a, C b, C c, C x) { return ((x + a) * x + b) * x + c; }

inline C depressed(double p, double q, C x) { return x * x * x + p * x + q; }

/// Smallest max-distance over the six pairings, by brute force.
inline double matched_distance(std::array<C, 3> a, const std::array<C, 3>& b) {
  std::array<int, 3> perm{0, 1, 2};
  double best = INFINITY;
  do {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Two monic cubics agree when they agree at four distinct points.
inline double sample_disagreement(const std::array<C, 3>& lhs, const std::array<C, 3>& rhs) {
  double worst = 0.0;
  for (double x : {-2.0, -0.5, 1.0, 3.0}) {
    worst = std::max(worst, std::abs(horner(lhs[0], lhs[1], lhs[2], x) - horner(rhs[0], rhs[1], rhs[2], x)));
  }
  return worst;
}

/// Real roots of x^3 + px + q by bracketing every sign change on a fine grid
/// plus bisection. Only used where the roots are known to be simple.
inline std::vector<double> real_roots_by_scan(double p, double q) {
  const double bound = 1.0 + std::max(std::abs(p), std::abs(q));
  const int steps = 20000;
  std::vector<double> out;
  auto f = [&](double x) { return x * x * x + p * x + q; };
  double lo = -bound;
  for (int i = 1; i <= steps; ++i) {
    double hi = -bound + 2.0 * bound * i / steps;
    if (f(lo) == 0.0) out.push_back(lo);
    if (f(lo) * f(hi) < 0.0) {
      double a = lo, b = hi;
      for (int k = 0; k < 200; ++k) {
        const double m = 0.5 * (a + b);
        (f(a) * f(m) <= 0.0 ? b : a) = m;
      }
      out.push_back(0.5 * (a + b));
    }
    lo = hi;
  }
  return out;
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

inline double signed_log_uniform(std::mt19937_64& rng, double lo, double hi) {
  const double m = log_uniform(rng, lo, hi);
  return std::bernoulli_distribution(0.5)(rng) ? m : -m;
}

/// Exact rational x^3 + p x + q at x = xn/xd, times xd^3 * pd * qd, in 128 bits.
inline __int128 scaled_depressed_value(std::int64_t pn, std::int64_t pd, std::int64_t qn, std::int64_t qd,
                                       std::int64_t xn, std::int64_t xd) {
  const __int128 x = xn, d = xd;
  return x * x * x * pd * qd + static_cast<__int128>(pn) * qd * x * d * d +
         static_cast<__int128>(qn) * pd * d * d * d;
}

}  // namespace oracle
