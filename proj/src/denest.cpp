#include "cubic/denest.hpp"

#include <cmath>

#include "cubic/complex.hpp"
#include "cubic/errors.hpp"
#include "cubic/exact_roots.hpp"

namespace cubic {
namespace {

void validate(const NestedRadical& n) {
  if (!std::isfinite(n.a.value) || !std::isfinite(n.b.value)) throw InvalidInput("non-finite radical");
  if (n.b.value < 0.0 || (n.b.exact && n.b.exact->sign() < 0)) {
    throw InvalidInput("b must be non-negative for a real square root");
  }
}

}  // namespace

DepressedCubic radical_to_cubic(const NestedRadical& n) {
  validate(n);
  DepressedCubic out;
  out.p = -3.0 * real_cube_root(n.a.value * n.a.value - n.b.value);
  out.q = -2.0 * n.a.value;
  if (n.a.exact && n.b.exact) {
    try {
      const ExactRational& a = *n.a.exact;
      const ExactRational inner = a * a - *n.b.exact;
      out.exact_q = ExactValue(ExactRational(-2) * a);
      out.q = out.exact_q->rational().to_double();
      if (const auto root = exact_cube_root(inner)) {
        out.exact_p = ExactValue(ExactRational(-3) * *root);
        out.p = out.exact_p->rational().to_double();
      }
    } catch (const ExactOverflow&) {
      out.exact_p.reset();
      out.exact_q.reset();
    }
  }
  return out;
}

double evaluate_radical(const NestedRadical& n) {
  validate(n);
  // Only the cancellation-free cube root is taken; the other follows from
  // u v = cbrt(a^2 - b), like the Cardano pairing.
  const double root_b = std::sqrt(n.b.value);
  const double far = n.a.value + std::copysign(root_b, n.a.value);
  if (far == 0.0) return 0.0;
  double inner = n.a.value * n.a.value - n.b.value;
  if (n.a.exact && n.b.exact) {
    try {
      inner = (*n.a.exact * *n.a.exact - *n.b.exact).to_double();
    } catch (const ExactOverflow&) {
    }
  }
  const double u = real_cube_root(far);
  return u + real_cube_root(inner) / u;
}

DenestResult denest(const NestedRadical& n) {
  DenestResult out;
  out.cubic = radical_to_cubic(n);
  out.value = evaluate_radical(n);
  if (!out.cubic.exact_q) {
    out.note = "inputs are not exact rationals";
    return out;
  }
  if (!out.cubic.exact_p) {
    out.note = "a^2 - b is not a rational cube; the cubic has an irrational coefficient";
    return out;
  }
  const ExactRational p = out.cubic.exact_p->rational();
  const ExactRational q = out.cubic.exact_q->rational();
  RationalRootSearch search;
  try {
    search = find_rational_roots({ExactRational(1), ExactRational(0), p, q});
  } catch (const ExactOverflow&) {
    out.note = "coefficients too large for exact search";
    return out;
  }
  for (const auto& root : search.roots) {
    if (std::abs(root.to_double() - out.value) <= 1e-9 * std::max(1.0, std::abs(out.value))) {
      out.exact = root;
      return out;
    }
  }
  out.note = search.exhausted ? "search exhausted" : "no rational root";
  return out;
}

}  // namespace cubic
