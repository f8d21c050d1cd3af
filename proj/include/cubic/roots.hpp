#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "cubic/complex.hpp"
#include "cubic/exact_value.hpp"
#include "cubic/rs_decomposition.hpp"

namespace cubic {

/// roots[i] = amplitude * cos(offsets[i]) + translation, where
/// offsets[i] = theta/3 + 2*pi*k[i]/3. Offsets follow the root order.
struct TrigForm {
  double amplitude = 0.0;  // -2 sqrt(rs)
  double theta = 0.0;      // Arg(r)
  std::array<double, 3> offsets{};
  std::array<int, 3> k{};
  double translation = 0.0;

  double evaluate(std::size_t i) const;
};

struct Multiplicity {
  std::size_t index;  // first occurrence in RootTriple::roots
  int count;

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

struct RootTriple {
  std::array<ComplexValue, 3> roots{};
  CaseTag tag = CaseTag::DegenerateP0;
  /// Roots that occur more than once.
  std::vector<Multiplicity> multiplicity;
  std::optional<TrigForm> trig;
  /// Exact values aligned with `roots`.
  std::optional<std::array<ExactValue, 3>> exact;
};

/// Number of real roots implied by the case tag for x^3 + px + q.
int expected_real_count(CaseTag tag, double p, double q);

/// Snaps floating-point output onto the structure real coefficients force:
/// the `real_count` roots with the smallest |Im| become exactly real, the
/// other two become an exact conjugate pair.
void enforce_real_structure(std::array<ComplexValue, 3>& roots, int real_count);

/// enforce_real_structure with the count implied by the tag; for Equal the
/// two closest roots are also merged into their mean.
void enforce_case_structure(std::array<ComplexValue, 3>& roots, CaseTag tag, double p, double q);

/// Sorts roots (real ascending, then complex by ascending imaginary part),
/// permutes the trig/exact annotations to match and recomputes multiplicity.
void canonicalize(RootTriple& triple);

/// Roots sorted by (real, imaginary) for set comparisons.
std::array<ComplexValue, 3> sorted_roots(std::array<ComplexValue, 3> roots);

/// Permutation `perm` minimizing max_i |a[i] - b[perm[i]]| (ties broken by the sum).
struct RootMatching {
  std::array<std::size_t, 3> perm{};
  double max_distance = 0.0;
};
RootMatching match_roots(const std::array<ComplexValue, 3>& a, const std::array<ComplexValue, 3>& b);

}  // namespace cubic
