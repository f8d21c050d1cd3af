#include "cubic/cardano.hpp"

#include <cmath>

#include "cubic/chen.hpp"
#include "cubic/rs_decomposition.hpp"

namespace cubic {

CardanoResult cardano_solve(const DepressedCubic& d) {
  CardanoIntermediates mid;
  const double half_q = d.q / 2.0;
  const double third_p = d.p / 3.0;
  const double cube_third_p = third_p * third_p * third_p;
  mid.disc = half_q * half_q + cube_third_p;

  if (mid.disc >= 0.0) {
    const double root = std::sqrt(mid.disc);
    mid.sqrt_disc = {root, 0.0};
    // The side that adds magnitudes is computed directly; the other comes from
    // A B = -(p/3)^3 to avoid cancellation.
    const double far = -half_q - std::copysign(root, half_q);
    const double near = far == 0.0 ? 0.0 : -cube_third_p / far;
    const bool far_is_a = std::signbit(half_q);
    mid.a = {far_is_a ? far : near, 0.0};
    mid.b = {far_is_a ? near : far, 0.0};
  } else {
    mid.sqrt_disc = {0.0, std::sqrt(-mid.disc)};
    mid.a = -half_q + mid.sqrt_disc;
    mid.b = -half_q - mid.sqrt_disc;
  }

  const bool real = mid.disc >= 0.0;
  const auto root_of = [real](ComplexValue z) {
    return real ? ComplexValue{real_cube_root(z.real()), 0.0} : principal_cube_root(z);
  };
  const bool use_a = std::abs(mid.a) >= std::abs(mid.b);
  const ComplexValue lead = root_of(use_a ? mid.a : mid.b);
  const ComplexValue partner = lead == ComplexValue{} ? root_of(use_a ? mid.b : mid.a) : -third_p / lead;
  mid.cbrt_a = use_a ? lead : partner;
  mid.cbrt_b = use_a ? partner : lead;

  std::array<ComplexValue, 3> roots{
      mid.cbrt_a + mid.cbrt_b,
      kOmega * mid.cbrt_a + kOmegaSq * mid.cbrt_b,
      kOmegaSq * mid.cbrt_a + kOmega * mid.cbrt_b,
  };
  const CaseTag tag = classify(d);
  enforce_case_structure(roots, tag, d.p, d.q);

  CardanoResult out;
  out.roots.roots = roots;
  out.roots.tag = tag;
  canonicalize(out.roots);
  out.intermediates = mid;
  return out;
}

ComparisonReport compare_methods(const DepressedCubic& d) {
  ComparisonReport report;
  report.tag = classify(d);
  report.chen = solve_depressed(d);
  report.cardano = cardano_solve(d).roots;
  const RootMatching match = match_roots(report.chen.roots, report.cardano.roots);
  report.perm = match.perm;
  report.max_matched_distance = match.max_distance;
  for (std::size_t i = 0; i < 3; ++i) {
    report.chen_residuals[i] = std::abs(d.evaluate(report.chen.roots[i]));
    report.cardano_residuals[i] = std::abs(d.evaluate(report.cardano.roots[i]));
  }
  return report;
}

}  // namespace cubic
