#pragma once

#include <array>
#include <optional>

#include "cubic/exact_value.hpp"

namespace cubic {

struct RootTriple;

/// Monic cubic x^3 + a x^2 + b x + c, normalized from lead*x^3 + ... at
/// construction. `exact` carries the same coefficients in exact form when
/// every input was exact and the leading coefficient was rational.
class GeneralCubic {
 public:
  /// Throws InvalidInput on a zero leading coefficient or non-finite input.
  static GeneralCubic from_coefficients(double lead, double a, double b, double c);
  static GeneralCubic monic(double a, double b, double c) { return from_coefficients(1.0, a, b, c); }
  /// Coefficients in exact form, highest degree first.
  static GeneralCubic from_exact(const std::array<ExactValue, 4>& coefficients);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  const std::optional<std::array<ExactValue, 3>>& exact() const { return exact_; }

  /// Residual scale max(1, |a|, |b|, |c|)^2 used by the round-trip bound.
  double residual_scale() const;
  ComplexValue evaluate(ComplexValue x) const;

 private:
  GeneralCubic(double a, double b, double c) : a_(a), b_(b), c_(c) {}
  double a_;
  double b_;
  double c_;
  std::optional<std::array<ExactValue, 3>> exact_;
};

/// x^3 + p x + q.
struct DepressedCubic {
  double p = 0.0;
  double q = 0.0;
  std::optional<ExactValue> exact_p;
  std::optional<ExactValue> exact_q;

  /// max(1, |p|, |q|)^(3/2).
  double residual_scale() const;
  ComplexValue evaluate(ComplexValue x) const;
};

/// original_root = depressed_root - delta, with delta = a/3.
struct Shift {
  double delta = 0.0;
  std::optional<ExactValue> exact_delta;
};

struct Depressed {
  DepressedCubic cubic;
  Shift shift;
};

/// p = -a^2/3 + b, q = 2a^3/27 - ab/3 + c, delta = a/3.
Depressed depress(const GeneralCubic& c);

RootTriple lift_roots(RootTriple roots, const Shift& shift);

}  // namespace cubic
