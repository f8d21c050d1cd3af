#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "cubic/complex.hpp"
#include "cubic/exact_rational.hpp"
#include "cubic/polynomial.hpp"

namespace cubic {

enum class CaseTag { Equal, RealDistinct, ConjugatePair, DegenerateP0, DegenerateQ0 };

std::string_view to_string(CaseTag tag);
std::optional<CaseTag> case_tag_from_string(std::string_view name);

/// Relative tolerance on 4p^3 + 27q^2 below which r and s are treated as equal.
inline constexpr double kEqualCaseTolerance = 1e-12;

/// The pair (r, s) with p = -3rs and q = rs(r + s), i.e. the roots of
/// t^2 + (3q/p) t - p/3 = 0.
///
/// Canonical orientation: r >= s for RealDistinct, Im(r) > 0 and s = conj(r)
/// for ConjugatePair. For the degenerate tags r and s are left at zero.
struct RsPair {
  ComplexValue r{};
  ComplexValue s{};
  CaseTag tag = CaseTag::DegenerateP0;
  /// Present when p and q are rational and the quadratic has rational roots.
  std::optional<std::pair<ExactRational, ExactRational>> exact;

  bool degenerate() const { return tag == CaseTag::DegenerateP0 || tag == CaseTag::DegenerateQ0; }
  RsPair swapped() const;
};

/// 4p^3 + 27q^2.
double discriminant(const DepressedCubic& d);

/// Case tag from the zero tests on p, q and the sign of the discriminant.
/// p = 0 wins over q = 0.
CaseTag classify(const DepressedCubic& d);

RsPair compute_rs(const DepressedCubic& d);

}  // namespace cubic
