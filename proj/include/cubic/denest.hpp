#pragma once

#include <optional>
#include <string>

#include "cubic/exact_rational.hpp"
#include "cubic/polynomial.hpp"

namespace cubic {

/// A real number with an exact rational form when one is known.
struct Scalar {
  double value = 0.0;
  std::optional<ExactRational> exact;

  static Scalar from(const ExactRational& r) { return {r.to_double(), r}; }
  static Scalar from(double v) { return {v, std::nullopt}; }
};

/// cbrt(a + sqrt(b)) + cbrt(a - sqrt(b)) with real cube roots, b >= 0.
struct NestedRadical {
  Scalar a;
  Scalar b;
};

/// The depressed cubic satisfied by the radical. With u, v the two cube roots,
/// u^3 + v^3 = 2a and u v = cbrt(a^2 - b), so x = u + v solves
/// x^3 - 3 cbrt(a^2 - b) x - 2a = 0. The cube root is the real one since
/// a^2 - b may be negative. Throws InvalidInput when b < 0.
DepressedCubic radical_to_cubic(const NestedRadical& n);

/// Direct numeric evaluation of the radical.
double evaluate_radical(const NestedRadical& n);

struct DenestResult {
  double value = 0.0;
  DepressedCubic cubic;
  std::optional<ExactRational> exact;
  /// Why no exact value was reported, when none was.
  std::string note;
};

/// Evaluates the radical and, when the reconstructed cubic has rational
/// coefficients, searches it for a rational root matching the value.
DenestResult denest(const NestedRadical& n);

}  // namespace cubic
