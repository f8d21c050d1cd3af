#pragma once

#include <array>

#include "cubic/complex.hpp"
#include "cubic/polynomial.hpp"
#include "cubic/roots.hpp"

namespace cubic {

/// A = -q/2 + sqrt(disc), B = -q/2 - sqrt(disc), disc = (q/2)^2 + (p/3)^3.
struct CardanoIntermediates {
  double disc = 0.0;  // (q/2)^2 + (p/3)^3
  ComplexValue sqrt_disc{};
  ComplexValue a{};
  ComplexValue b{};
  ComplexValue cbrt_a{};
  ComplexValue cbrt_b{};
};

struct CardanoResult {
  RootTriple roots;
  CardanoIntermediates intermediates;
};

/// Roots {cbrt(A) + cbrt(B), w cbrt(A) + w^2 cbrt(B), w^2 cbrt(A) + w cbrt(B)}
/// with the cube roots paired so that cbrt(A) cbrt(B) = -p/3.
///
/// Independent principal cube roots of A and B break the first root whenever
/// disc < 0, so only one cube root is taken (of whichever of A, B is larger
/// in magnitude) and the other follows from the pairing. Real A, B use real
/// cube roots.
CardanoResult cardano_solve(const DepressedCubic& d);

struct ComparisonReport {
  CaseTag tag = CaseTag::DegenerateP0;
  RootTriple chen;
  RootTriple cardano;
  /// chen.roots[i] is matched with cardano.roots[perm[i]].
  std::array<std::size_t, 3> perm{};
  double max_matched_distance = 0.0;
  std::array<double, 3> chen_residuals{};
  std::array<double, 3> cardano_residuals{};
};

ComparisonReport compare_methods(const DepressedCubic& d);

}  // namespace cubic
