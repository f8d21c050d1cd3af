#include "cubic/complex.hpp"

#include <cmath>

namespace cubic {

double principal_arg(ComplexValue z) {
  if (z.imag() == 0.0 && z.real() < 0.0) return std::numbers::pi;
  return std::atan2(z.imag(), z.real());
}

ComplexValue principal_cube_root(ComplexValue z) {
  if (z == ComplexValue{}) return {};
  if (z.imag() == 0.0 && z.real() > 0.0) return {real_cube_root(z.real()), 0.0};
  return std::polar(real_cube_root(std::abs(z)), principal_arg(z) / 3.0);
}

// std::cbrt is not correctly rounded (cbrt(27) != 3 on glibc); one Newton
// step with an fma-compensated cube fixes that.
double real_cube_root(double x) {
  const double r = std::cbrt(x);
  if (r == 0.0 || !std::isfinite(r)) return r;
  const double r2 = r * r;
  const double r2_err = std::fma(r, r, -r2);
  const double r3 = r2 * r;
  const double r3_err = std::fma(r2, r, -r3);
  const double residual = (r3 - x) + (r3_err + r2_err * r);
  return r - residual / (3.0 * r2);
}

std::array<ComplexValue, 3> cube_roots_all(ComplexValue z) {
  const ComplexValue base = principal_cube_root(z);
  return {base, base * kOmega, base * kOmegaSq};
}

ComplexValue cube_root(ComplexValue z, CubeRootBranch branch) {
  switch (branch) {
    case CubeRootBranch::Principal:
      return principal_cube_root(z);
    case CubeRootBranch::PrincipalTimesOmega:
      return principal_cube_root(z) * kOmega;
    case CubeRootBranch::PrincipalTimesOmegaSq:
      return principal_cube_root(z) * kOmegaSq;
    case CubeRootBranch::RealPreferring:
      if (z.imag() == 0.0) return {real_cube_root(z.real()), 0.0};
      return principal_cube_root(z);
  }
  return principal_cube_root(z);
}

}  // namespace cubic
