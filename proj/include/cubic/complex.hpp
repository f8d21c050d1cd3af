#pragma once

#include <array>
#include <complex>
#include <numbers>

namespace cubic {

using ComplexValue = std::complex<double>;

/// Principal argument in (-pi, pi]. The negative real axis maps to +pi even
/// when the imaginary part is -0.0.
double principal_arg(ComplexValue z);

/// omega = exp(2*pi*i/3) = (-1 + sqrt(3) i) / 2.
inline constexpr double kHalfSqrt3 = 0.86602540378443864676;
inline const ComplexValue kOmega{-0.5, kHalfSqrt3};
inline const ComplexValue kOmegaSq{-0.5, -kHalfSqrt3};

enum class CubeRootBranch {
  Principal,
  PrincipalTimesOmega,
  PrincipalTimesOmegaSq,
  RealPreferring,  // real cube root for real input, principal otherwise
};

/// |z|^(1/3) * exp(i Arg(z) / 3); zero maps to zero.
ComplexValue principal_cube_root(ComplexValue z);

/// Sign-preserving real cube root.
double real_cube_root(double x);

/// principal_cube_root(z) * {1, omega, omega^2}.
std::array<ComplexValue, 3> cube_roots_all(ComplexValue z);

ComplexValue cube_root(ComplexValue z, CubeRootBranch branch);

}  // namespace cubic
