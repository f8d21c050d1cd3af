#pragma once

#include <string>
#include <vector>

#include "cubic/complex.hpp"
#include "cubic/exact_rational.hpp"

namespace cubic {

/// coefficient * sqrt(radicand) with radicand squarefree. A negative radicand
/// denotes i*sqrt(|radicand|); radicand 1 is a plain rational.
struct SurdTerm {
  ExactRational coefficient;
  std::int64_t radicand = 1;

  friend bool operator==(const SurdTerm&, const SurdTerm&) = default;
};

/// Finite sum of surd terms, kept sorted by radicand with like terms merged and
/// zero terms dropped. Closed under +, - and *, which is all the exact root
/// pipeline needs.
class ExactValue {
 public:
  ExactValue() = default;
  ExactValue(ExactRational r);  // NOLINT(google-explicit-constructor)

  /// coefficient * sqrt(n) for any integer n; square factors of n are pulled out.
  static ExactValue surd(const ExactRational& coefficient, std::int64_t n);
  /// sqrt(x) for a rational x (negative x gives an imaginary value).
  static ExactValue sqrt(const ExactRational& x);

  const std::vector<SurdTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// The rational value; only valid when is_rational().
  ExactRational rational() const;
  /// A single term rational * sqrt(m) with m > 0.
  bool is_real_monomial() const;

  ComplexValue to_complex() const;
  /// "2*sqrt(2)+2*sqrt(6)", "-3/2-1/2*sqrt(3)*i", "0".
  std::string to_string() const;

  ExactValue operator-() const;
  friend ExactValue operator+(const ExactValue& a, const ExactValue& b);
  friend ExactValue operator-(const ExactValue& a, const ExactValue& b);
  friend ExactValue operator*(const ExactValue& a, const ExactValue& b);

  friend bool operator==(const ExactValue&, const ExactValue&) = default;

 private:
  void add_term(const SurdTerm& term);
  std::vector<SurdTerm> terms_;
};

}  // namespace cubic
