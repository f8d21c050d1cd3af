#pragma once

#include "cubic/complex.hpp"
#include "cubic/polynomial.hpp"
#include "cubic/roots.hpp"
#include "cubic/rs_decomposition.hpp"

namespace cubic {

// Roots of x^3 - 3rs x + rs(r + s) = 0, which is x^3 + px + q = 0 once
// p = -3rs and q = rs(r + s). For r != s the left side splits as
//   s/(s-r) (x-r)^3 + r/(r-s) (x-s)^3,
// so every root satisfies ((x-r)/(x-s))^3 = r/s.

/// r = s: (x - r)^2 (x + 2r), roots {r, r, -2r}.
RootTriple solve_equal(double r);

/// Real r != s: one real root -cbrt(r)cbrt(s)(cbrt(r) + cbrt(s)) and its two
/// omega-twisted companions, using real cube roots throughout.
RootTriple solve_real_distinct(double r, double s);

/// s = conj(r): three real roots -2|r| cos(theta/3 + 2*pi*k/3), theta = Arg(r).
RootTriple solve_conjugate(ComplexValue r);

/// The case-free expression
///   -u v (u + v), -u v (omega u + omega^2 v), -u v (omega^2 u + omega v)
/// with u, v the cube roots of r and s picked by `branch`. The root set does
/// not depend on the branch.
RootTriple solve_unified(const RsPair& pair, CubeRootBranch branch);
RootTriple solve_unified(const DepressedCubic& d, CubeRootBranch branch = CubeRootBranch::RealPreferring);

/// x = (r - s u) / (1 - u) over the three cube roots u of r/s.
/// Throws InvalidCase when r = s or s = 0.
RootTriple solve_moebius(ComplexValue r, ComplexValue s);

/// p = 0 or q = 0, where the decomposition does not apply.
RootTriple solve_degenerate(const DepressedCubic& d);

/// Case dispatch on the depressed cubic (no lifting, no exact annotations).
RootTriple solve_depressed(const DepressedCubic& d);

enum class Method { Chen, Unified, Moebius, Cardano };

struct SolveOptions {
  Method method = Method::Chen;
  CubeRootBranch branch = CubeRootBranch::RealPreferring;
  /// One Newton step per root against the original cubic.
  bool polish = false;
  /// Attach exact root values when the coefficients allow it.
  bool exact = true;
};

/// depress -> compute_rs -> case dispatch -> lift_roots. Moebius falls back to
/// the case solver when r = s or the cubic is degenerate.
RootTriple solve(const GeneralCubic& c, const SolveOptions& options = {});

/// Newton step on each root; a step is kept only if it lowers |f|.
void polish_roots(RootTriple& triple, const GeneralCubic& c);

}  // namespace cubic
