#include "cubic/rs_decomposition.hpp"

#include <algorithm>
#include <cmath>

namespace cubic {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Equal: return "equal";
    case CaseTag::RealDistinct: return "real_distinct";
    case CaseTag::ConjugatePair: return "conjugate_pair";
    case CaseTag::DegenerateP0: return "degenerate_p0";
    case CaseTag::DegenerateQ0: return "degenerate_q0";
  }
  return "unknown";
}

std::optional<CaseTag> case_tag_from_string(std::string_view name) {
  for (CaseTag tag : {CaseTag::Equal, CaseTag::RealDistinct, CaseTag::ConjugatePair,
                      CaseTag::DegenerateP0, CaseTag::DegenerateQ0}) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

RsPair RsPair::swapped() const {
  RsPair out = *this;
  std::swap(out.r, out.s);
  if (out.exact) std::swap(out.exact->first, out.exact->second);
  return out;
}

double discriminant(const DepressedCubic& d) {
  return 4.0 * d.p * d.p * d.p + 27.0 * d.q * d.q;
}

namespace {

// 4p^3 and 27q^2 after x -> 2^e x, which maps (p, q) to (p/4^e, q/8^e) and
// keeps both terms near 1 so neither overflows. Powers of two make the
// scaling exact.
struct ScaledTerms {
  double cubic_term;
  double square_term;
  int exponent;
};

ScaledTerms scaled_terms(const DepressedCubic& d) {
  const int e = std::max((std::ilogb(d.p) + 1) / 2, (std::ilogb(d.q) + 2) / 3);
  const double p = std::ldexp(d.p, -2 * e);
  const double q = std::ldexp(d.q, -3 * e);
  return {4.0 * p * p * p, 27.0 * q * q, e};
}

}  // namespace

CaseTag classify(const DepressedCubic& d) {
  if (d.p == 0.0) return CaseTag::DegenerateP0;
  if (d.q == 0.0) return CaseTag::DegenerateQ0;
  const ScaledTerms t = scaled_terms(d);
  const double delta = t.cubic_term + t.square_term;
  if (std::abs(delta) <= kEqualCaseTolerance * (std::abs(t.cubic_term) + std::abs(t.square_term))) {
    return CaseTag::Equal;
  }
  return delta > 0.0 ? CaseTag::RealDistinct : CaseTag::ConjugatePair;
}

namespace {

// Roots of t^2 + (3q/p) t - p/3 in exact arithmetic when the quadratic's
// discriminant is a rational square.
std::optional<std::pair<ExactRational, ExactRational>> exact_rs(const DepressedCubic& d) {
  if (!d.exact_p || !d.exact_q || !d.exact_p->is_rational() || !d.exact_q->is_rational()) {
    return std::nullopt;
  }
  try {
    const ExactRational p = d.exact_p->rational();
    const ExactRational q = d.exact_q->rational();
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    const ExactRational linear = ExactRational(3) * q / p;
    const ExactRational constant = -p / ExactRational(3);
    const ExactRational disc = linear * linear - ExactRational(4) * constant;
    const auto root = exact_square_root(disc);
    if (!root) return std::nullopt;
    ExactRational r = (-linear + *root) / ExactRational(2);
    ExactRational s = (-linear - *root) / ExactRational(2);
    if (r < s) std::swap(r, s);
    return std::pair{r, s};
  } catch (const ExactOverflow&) {
    return std::nullopt;
  }
}

// (4p^3 + 27q^2) / (3p^2) without forming either overflowing term.
double quadratic_discriminant(const DepressedCubic& d) {
  const ScaledTerms t = scaled_terms(d);
  const double p = std::ldexp(d.p, -2 * t.exponent);
  return std::ldexp((t.cubic_term + t.square_term) / (3.0 * p * p), 2 * t.exponent);
}

}  // namespace

RsPair compute_rs(const DepressedCubic& d) {
  RsPair out;
  out.tag = classify(d);
  if (out.degenerate()) return out;

  const double linear = 3.0 * d.q / d.p;  // t^2 + linear t + constant
  const double constant = -d.p / 3.0;
  switch (out.tag) {
    case CaseTag::Equal: {
      const double r = -linear / 2.0;
      out.r = out.s = {r, 0.0};
      break;
    }
    case CaseTag::RealDistinct: {
      // Same sign as the cubic discriminant: (3q/p)^2 + 4p/3 = (4p^3 + 27q^2) / (3p^2).
      const double disc = quadratic_discriminant(d);
      const double big = -(linear + std::copysign(std::sqrt(disc), linear)) / 2.0;
      const double small = constant / big;
      out.r = {std::max(big, small), 0.0};
      out.s = {std::min(big, small), 0.0};
      break;
    }
    case CaseTag::ConjugatePair: {
      const double disc = quadratic_discriminant(d);
      out.r = {-linear / 2.0, std::sqrt(-disc) / 2.0};
      out.s = std::conj(out.r);
      break;
    }
    default:
      break;
  }
  out.exact = exact_rs(d);
  if (out.exact && out.tag == CaseTag::Equal && out.exact->first != out.exact->second) {
    // Tolerance-equal but exactly distinct: keep the floating-point verdict,
    // drop the exact pair so the two never disagree.
    out.exact.reset();
  }
  if (out.exact && out.tag == CaseTag::RealDistinct && out.exact->first != out.exact->second) {
    out.r = {out.exact->first.to_double(), 0.0};
    out.s = {out.exact->second.to_double(), 0.0};
  } else if (out.tag == CaseTag::RealDistinct && out.exact) {
    out.exact.reset();
  }
  return out;
}

}  // namespace cubic
