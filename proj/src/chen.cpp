#include "cubic/chen.hpp"

#include <cmath>
#include <numbers>

#include "cubic/cardano.hpp"
#include "cubic/errors.hpp"
#include "cubic/exact_roots.hpp"

namespace cubic {
namespace {

RootTriple finish(std::array<ComplexValue, 3> roots, CaseTag tag, double p, double q) {
  RootTriple out;
  enforce_case_structure(roots, tag, p, q);
  out.roots = roots;
  out.tag = tag;
  canonicalize(out);
  return out;
}

// -u v (omega^j u + omega^-j v) for j = 0, 1, 2.
std::array<ComplexValue, 3> twisted_roots(ComplexValue u, ComplexValue v) {
  const ComplexValue uv = u * v;
  return {-uv * (u + v), -uv * (kOmega * u + kOmegaSq * v), -uv * (kOmegaSq * u + kOmega * v)};
}

void check_finite(const RootTriple& triple) {
  for (const auto& z : triple.roots) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericFailure("non-finite root");
    }
  }
}

}  // namespace

RootTriple solve_equal(double r) {
  RootTriple out;
  out.roots = {ComplexValue{r, 0.0}, ComplexValue{r, 0.0}, ComplexValue{-2.0 * r, 0.0}};
  out.tag = CaseTag::Equal;
  canonicalize(out);
  return out;
}

RootTriple solve_real_distinct(double r, double s) {
  const double u = real_cube_root(r);
  const double v = real_cube_root(s);
  auto roots = twisted_roots(u, v);
  return finish(roots, CaseTag::RealDistinct, -3.0 * r * s, r * s * (r + s));
}

RootTriple solve_conjugate(ComplexValue r) {
  TrigForm trig;
  trig.amplitude = -2.0 * std::abs(r);  // sqrt(rs) = |r| when s = conj(r)
  trig.theta = principal_arg(r);
  RootTriple out;
  for (int k = 0; k < 3; ++k) {
    trig.k[k] = k;
    trig.offsets[k] = trig.theta / 3.0 + 2.0 * std::numbers::pi * k / 3.0;
    out.roots[k] = {trig.amplitude * std::cos(trig.offsets[k]), 0.0};
  }
  out.trig = trig;
  out.tag = CaseTag::ConjugatePair;
  canonicalize(out);
  return out;
}

RootTriple solve_unified(const RsPair& pair, CubeRootBranch branch) {
  if (pair.degenerate()) throw InvalidCase("unified formula requires p != 0 and q != 0");
  const ComplexValue u = cube_root(pair.r, branch);
  const ComplexValue v = cube_root(pair.s, branch);
  const double p = (-3.0 * pair.r * pair.s).real();
  const double q = (pair.r * pair.s * (pair.r + pair.s)).real();
  return finish(twisted_roots(u, v), pair.tag, p, q);
}

RootTriple solve_unified(const DepressedCubic& d, CubeRootBranch branch) {
  const RsPair pair = compute_rs(d);
  if (pair.degenerate()) return solve_degenerate(d);
  return solve_unified(pair, branch);
}

RootTriple solve_moebius(ComplexValue r, ComplexValue s) {
  if (r == s) throw InvalidCase("Moebius form needs r != s");
  if (s == ComplexValue{}) throw InvalidCase("Moebius form needs s != 0");
  std::array<ComplexValue, 3> roots{};
  const auto units = cube_roots_all(r / s);
  for (std::size_t i = 0; i < 3; ++i) roots[i] = (r - s * units[i]) / (1.0 - units[i]);
  // Real r, s: one real root; conjugate r, s: three.
  const CaseTag tag = r.imag() != 0.0 ? CaseTag::ConjugatePair : CaseTag::RealDistinct;
  return finish(roots, tag, (-3.0 * r * s).real(), (r * s * (r + s)).real());
}

RootTriple solve_degenerate(const DepressedCubic& d) {
  if (d.p != 0.0 && d.q != 0.0) throw InvalidCase("solve_degenerate needs p = 0 or q = 0");
  if (d.p == 0.0) {
    // x^3 = -q
    const double t = real_cube_root(-d.q);
    std::array<ComplexValue, 3> roots{ComplexValue{t, 0.0}, t * kOmega, t * kOmegaSq};
    return finish(roots, CaseTag::DegenerateP0, d.p, d.q);
  }
  // x (x^2 + p)
  std::array<ComplexValue, 3> roots{};
  const double w = std::sqrt(std::abs(d.p));
  if (d.p < 0.0) {
    roots = {ComplexValue{0.0, 0.0}, ComplexValue{w, 0.0}, ComplexValue{-w, 0.0}};
  } else {
    roots = {ComplexValue{0.0, 0.0}, ComplexValue{0.0, w}, ComplexValue{0.0, -w}};
  }
  return finish(roots, CaseTag::DegenerateQ0, d.p, d.q);
}

RootTriple solve_depressed(const DepressedCubic& d) {
  const RsPair pair = compute_rs(d);
  switch (pair.tag) {
    case CaseTag::Equal:
      return solve_equal(pair.exact ? pair.exact->first.to_double() : pair.r.real());
    case CaseTag::RealDistinct:
      return solve_real_distinct(pair.r.real(), pair.s.real());
    case CaseTag::ConjugatePair:
      return solve_conjugate(pair.r);
    default:
      return solve_degenerate(d);
  }
}

void polish_roots(RootTriple& triple, const GeneralCubic& c) {
  for (auto& z : triple.roots) {
    if (z.imag() < 0.0) continue;  // the lower member of a pair is its conjugate
    const ComplexValue f = c.evaluate(z);
    const ComplexValue df = (3.0 * z + 2.0 * c.a()) * z + c.b();
    if (df == ComplexValue{}) continue;
    const ComplexValue next = z - f / df;
    if (std::isfinite(next.real()) && std::isfinite(next.imag()) && next.imag() >= 0.0 &&
        std::abs(c.evaluate(next)) < std::abs(f)) {
      z = next;
    }
  }
  // Canonical order puts a pair as (lower, upper) at the end.
  if (triple.roots[2].imag() > 0.0) triple.roots[1] = std::conj(triple.roots[2]);
  canonicalize(triple);
}

RootTriple solve(const GeneralCubic& c, const SolveOptions& options) {
  const Depressed depressed = depress(c);
  const DepressedCubic& d = depressed.cubic;
  const RsPair pair = compute_rs(d);

  RootTriple roots;
  switch (options.method) {
    case Method::Chen:
      roots = solve_depressed(d);
      break;
    case Method::Unified:
      roots = pair.degenerate() ? solve_degenerate(d) : solve_unified(pair, options.branch);
      break;
    case Method::Moebius:
      if (pair.degenerate() || pair.tag == CaseTag::Equal) {
        roots = solve_depressed(d);
      } else {
        roots = solve_moebius(pair.r, pair.s);
      }
      break;
    case Method::Cardano:
      roots = cardano_solve(d).roots;
      break;
  }
  roots.tag = pair.tag;
  check_finite(roots);

  if (options.exact && d.exact_p && d.exact_q) {
    if (auto exact = exact_depressed_roots(*d.exact_p, *d.exact_q)) {
      std::array<ComplexValue, 3> approx{};
      for (std::size_t i = 0; i < 3; ++i) approx[i] = (*exact)[i].to_complex();
      const RootMatching match = match_roots(roots.roots, approx);
      if (match.max_distance <= 1e-6 * std::max(1.0, d.residual_scale())) {
        std::array<ExactValue, 3> aligned;
        for (std::size_t i = 0; i < 3; ++i) aligned[i] = (*exact)[match.perm[i]];
        roots.exact = aligned;
      }
    }
  }

  RootTriple lifted = lift_roots(std::move(roots), depressed.shift);
  if (lifted.exact) {
    for (std::size_t i = 0; i < 3; ++i) lifted.roots[i] = (*lifted.exact)[i].to_complex();
  }
  if (depressed.shift.delta != 0.0) canonicalize(lifted);
  if (options.polish) polish_roots(lifted, c);
  check_finite(lifted);
  return lifted;
}

}  // namespace cubic
