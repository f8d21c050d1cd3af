#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "cubic/exact_rational.hpp"
#include "cubic/exact_value.hpp"

namespace cubic {

/// Upper bound on candidate divisor pairs examined by the rational root search.
inline constexpr std::size_t kRationalRootBudget = 1'000'000;

struct RationalRootSearch {
  std::vector<ExactRational> roots;  // distinct rational roots found
  bool exhausted = false;            // budget ran out before the search finished
};

/// Rational roots of c[0] x^3 + c[1] x^2 + c[2] x + c[3] by the rational root
/// theorem on the integerized polynomial: candidates are +-(divisor of the
/// constant)/(divisor of the leading coefficient).
RationalRootSearch find_rational_roots(const std::array<ExactRational, 4>& coefficients,
                                       std::size_t budget = kRationalRootBudget);

/// Exact roots of x^3 + p x + q when the cubic has a rational root (after the
/// substitution x = sqrt(m) y when q is a single surd k*sqrt(m) and p is
/// rational). Order is unspecified.
std::optional<std::array<ExactValue, 3>> exact_depressed_roots(const ExactValue& p, const ExactValue& q);

/// x^3 + p x + q evaluated exactly.
ExactValue evaluate_exact(const ExactValue& p, const ExactValue& q, const ExactValue& x);

}  // namespace cubic
