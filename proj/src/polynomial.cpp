#include "cubic/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "cubic/errors.hpp"
#include "cubic/roots.hpp"

namespace cubic {

GeneralCubic GeneralCubic::from_coefficients(double lead, double a, double b, double c) {
  for (double v : {lead, a, b, c}) {
    if (!std::isfinite(v)) throw InvalidInput("non-finite cubic coefficient");
  }
  if (lead == 0.0) throw InvalidInput("leading coefficient is zero; not a cubic");
  return GeneralCubic(a / lead, b / lead, c / lead);
}

GeneralCubic GeneralCubic::from_exact(const std::array<ExactValue, 4>& coefficients) {
  const ComplexValue lead = coefficients[0].to_complex();
  GeneralCubic out = from_coefficients(lead.real(), coefficients[1].to_complex().real(),
                                       coefficients[2].to_complex().real(),
                                       coefficients[3].to_complex().real());
  for (const auto& v : coefficients) {
    if (v.to_complex().imag() != 0.0) throw InvalidInput("complex cubic coefficient");
  }
  if (coefficients[0].is_rational()) {
    try {
      const ExactValue inverse = ExactRational(1) / coefficients[0].rational();
      out.exact_ = std::array<ExactValue, 3>{coefficients[1] * inverse, coefficients[2] * inverse,
                                             coefficients[3] * inverse};
    } catch (const ExactOverflow&) {
      out.exact_.reset();
    }
  }
  return out;
}

double GeneralCubic::residual_scale() const {
  const double m = std::max({1.0, std::abs(a_), std::abs(b_), std::abs(c_)});
  return m * m;
}

ComplexValue GeneralCubic::evaluate(ComplexValue x) const {
  return ((x + a_) * x + b_) * x + c_;
}

double DepressedCubic::residual_scale() const {
  return std::pow(std::max({1.0, std::abs(p), std::abs(q)}), 1.5);
}

ComplexValue DepressedCubic::evaluate(ComplexValue x) const {
  return (x * x + p) * x + q;
}

Depressed depress(const GeneralCubic& c) {
  const double a = c.a();
  const double b = c.b();
  Depressed out;
  out.cubic.p = -a * a / 3.0 + b;
  out.cubic.q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c.c();
  out.shift.delta = a / 3.0;
  if (!std::isfinite(out.cubic.p) || !std::isfinite(out.cubic.q)) {
    throw InvalidInput("depressed coefficients overflow");
  }
  if (const auto& exact = c.exact()) {
    try {
      const auto& [ea, eb, ec] = *exact;
      const ExactValue third = ExactRational(1, 3);
      out.cubic.exact_p = -(ea * ea * third) + eb;
      out.cubic.exact_q = ExactValue(ExactRational(2, 27)) * ea * ea * ea - ea * eb * third + ec;
      out.shift.exact_delta = ea * third;
      // Exact coefficients are authoritative when they are plain rationals.
      if (out.cubic.exact_p->is_rational()) out.cubic.p = out.cubic.exact_p->rational().to_double();
      if (out.cubic.exact_q->is_rational()) out.cubic.q = out.cubic.exact_q->rational().to_double();
    } catch (const ExactOverflow&) {
      out.cubic.exact_p.reset();
      out.cubic.exact_q.reset();
      out.shift.exact_delta.reset();
    }
  }
  return out;
}

RootTriple lift_roots(RootTriple roots, const Shift& shift) {
  for (auto& z : roots.roots) z -= shift.delta;
  if (roots.trig) roots.trig->translation -= shift.delta;
  if (roots.exact) {
    if (shift.exact_delta) {
      try {
        for (auto& v : *roots.exact) v = v - *shift.exact_delta;
      } catch (const ExactOverflow&) {
        roots.exact.reset();
      }
    } else if (shift.delta != 0.0) {
      roots.exact.reset();
    }
  }
  return roots;
}

}  // namespace cubic
