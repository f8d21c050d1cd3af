#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cubic/complex.hpp"
#include "cubic/polynomial.hpp"
#include "cubic/roots.hpp"

namespace cubic {

struct VerificationReport {
  std::array<double, 3> residuals{};
  /// |sum - expected|, |pairwise sum - expected|, |product - expected|.
  std::array<double, 3> vieta_errors{};
  std::optional<std::vector<double>> identity_errors;
  double tolerance = 0.0;
  bool pass = false;
};

/// Residuals |x^3 + px + q| and Vieta errors |sum x|, |sum x_i x_j - p|,
/// |prod x + q|. pass iff every error <= tol.
VerificationReport verify_roots(const DepressedCubic& d, const RootTriple& roots, double tol);

/// Same checks against x^3 + ax^2 + bx + c (sum = -a, pairwise = b, product = -c).
VerificationReport verify_roots(const GeneralCubic& c, const RootTriple& roots, double tol);

/// With c_k = cos(theta/3 + 2*pi*k/3), the deviations of
///   sum c_k from 0, sum_{j<k} c_j c_k from -3/4,
///   prod c_k from cos(theta)/4, sum c_k^3 from 3 cos(theta)/4.
/// The product and cube-sum carry a plus sign: the roots -2 sqrt(rs) c_k
/// multiply to -q = -rs(r + s) = -2 |r|^3 cos(theta), which forces it.
std::array<double, 4> trig_identity_residuals(double theta);

/// |x^3 - 3rs x + rs(r+s) - [s/(s-r) (x-r)^3 + r/(r-s) (x-s)^3]|.
double decomposition_identity_residual(ComplexValue r, ComplexValue s, ComplexValue x);

/// |((x-r)/(x-s))^3 - r/s| for a root x != s.
double ratio_cube_residual(ComplexValue r, ComplexValue s, ComplexValue x);

/// Closed-form-free oracle: bisection then Newton for a real root on
/// [-R, R] with R = 1 + max(|p|, |q|), deflation to a quadratic for the rest.
RootTriple brute_force_roots(const DepressedCubic& d);

}  // namespace cubic
