#include "cubic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cubic/rs_decomposition.hpp"

namespace cubic {
namespace {

VerificationReport build_report(const std::array<double, 3>& residuals, const std::array<ComplexValue, 3>& x,
                                double sum, double pairwise, double product, double tol) {
  VerificationReport report;
  report.residuals = residuals;
  report.vieta_errors = {
      std::abs(x[0] + x[1] + x[2] - sum),
      std::abs(x[0] * x[1] + x[0] * x[2] + x[1] * x[2] - pairwise),
      std::abs(x[0] * x[1] * x[2] - product),
  };
  report.tolerance = tol;
  report.pass = std::isfinite(tol);  // an overflowed tolerance proves nothing
  for (double e : report.residuals) report.pass = report.pass && e <= tol;
  for (double e : report.vieta_errors) report.pass = report.pass && e <= tol;
  return report;
}

}  // namespace

VerificationReport verify_roots(const DepressedCubic& d, const RootTriple& roots, double tol) {
  std::array<double, 3> residuals{};
  for (std::size_t i = 0; i < 3; ++i) residuals[i] = std::abs(d.evaluate(roots.roots[i]));
  return build_report(residuals, roots.roots, 0.0, d.p, -d.q, tol);
}

VerificationReport verify_roots(const GeneralCubic& c, const RootTriple& roots, double tol) {
  std::array<double, 3> residuals{};
  for (std::size_t i = 0; i < 3; ++i) residuals[i] = std::abs(c.evaluate(roots.roots[i]));
  return build_report(residuals, roots.roots, -c.a(), c.b(), -c.c(), tol);
}

std::array<double, 4> trig_identity_residuals(double theta) {
  std::array<double, 3> c{};
  for (int k = 0; k < 3; ++k) c[k] = std::cos(theta / 3.0 + 2.0 * std::numbers::pi * k / 3.0);
  const double sum = c[0] + c[1] + c[2];
  const double pairwise = c[0] * c[1] + c[0] * c[2] + c[1] * c[2];
  const double product = c[0] * c[1] * c[2];
  const double cube_sum = c[0] * c[0] * c[0] + c[1] * c[1] * c[1] + c[2] * c[2] * c[2];
  const double cos_theta = std::cos(theta);
  return {std::abs(sum), std::abs(pairwise + 0.75), std::abs(product - cos_theta / 4.0),
          std::abs(cube_sum - 0.75 * cos_theta)};
}

double decomposition_identity_residual(ComplexValue r, ComplexValue s, ComplexValue x) {
  const ComplexValue lhs = x * x * x - 3.0 * r * s * x + r * s * (r + s);
  const ComplexValue xr = x - r;
  const ComplexValue xs = x - s;
  const ComplexValue rhs = s / (s - r) * xr * xr * xr + r / (r - s) * xs * xs * xs;
  return std::abs(lhs - rhs);
}

double ratio_cube_residual(ComplexValue r, ComplexValue s, ComplexValue x) {
  const ComplexValue ratio = (x - r) / (x - s);
  return std::abs(ratio * ratio * ratio - r / s);
}

RootTriple brute_force_roots(const DepressedCubic& d) {
  const auto f = [&d](double x) { return (x * x + d.p) * x + d.q; };
  const double bound = 1.0 + std::max(std::abs(d.p), std::abs(d.q));
  double lo = -bound;
  double hi = bound;
  for (int i = 0; i < 2000; ++i) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x0 = std::abs(f(lo)) < std::abs(f(hi)) ? lo : hi;
  for (int i = 0; i < 4; ++i) {
    const double slope = 3.0 * x0 * x0 + d.p;
    if (slope == 0.0) break;
    const double next = x0 - f(x0) / slope;
    if (!(std::abs(f(next)) < std::abs(f(x0)))) break;
    x0 = next;
  }

  // x^3 + px + q = (x - x0)(x^2 + x0 x + (x0^2 + p))
  const double linear = x0;
  const double constant = x0 * x0 + d.p;
  const double disc = linear * linear - 4.0 * constant;
  RootTriple out;
  out.tag = classify(d);
  out.roots[0] = {x0, 0.0};
  if (disc >= 0.0) {
    const double big = -(linear + std::copysign(std::sqrt(disc), linear)) / 2.0;
    const double small = big == 0.0 ? 0.0 : constant / big;
    out.roots[1] = {big, 0.0};
    out.roots[2] = {small, 0.0};
    for (std::size_t k = 1; k < 3; ++k) {
      double x = out.roots[k].real();
      for (int i = 0; i < 4; ++i) {
        const double slope = 3.0 * x * x + d.p;
        if (slope == 0.0) break;
        const double next = x - f(x) / slope;
        if (!(std::abs(f(next)) < std::abs(f(x)))) break;
        x = next;
      }
      out.roots[k] = {x, 0.0};
    }
  } else {
    ComplexValue z{-linear / 2.0, std::sqrt(-disc) / 2.0};
    for (int i = 0; i < 4; ++i) {
      const ComplexValue slope = 3.0 * z * z + d.p;
      const ComplexValue next = z - d.evaluate(z) / slope;
      if (!(std::abs(d.evaluate(next)) < std::abs(d.evaluate(z)))) break;
      z = next;
    }
    out.roots[1] = std::conj(z);
    out.roots[2] = z;
  }
  canonicalize(out);
  return out;
}

}  // namespace cubic
