#include "cubic/exact_value.hpp"

#include <algorithm>
#include <cmath>

namespace cubic {

ExactValue::ExactValue(ExactRational r) {
  if (!r.is_zero()) terms_.push_back({r, 1});
}

ExactValue ExactValue::surd(const ExactRational& coefficient, std::int64_t n) {
  ExactValue out;
  if (coefficient.is_zero() || n == 0) return out;
  const auto split = squarefree_split(n);
  out.add_term({coefficient * ExactRational(split.square_root_part), split.squarefree_part});
  return out;
}

ExactValue ExactValue::sqrt(const ExactRational& x) {
  // sqrt(n/d) = sqrt(n*d) / d
  const std::int64_t nd = (ExactRational(x.num()) * ExactRational(x.den())).num();
  return surd(ExactRational(1, x.den()), nd);
}

bool ExactValue::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().radicand == 1);
}

ExactRational ExactValue::rational() const {
  return terms_.empty() ? ExactRational{} : terms_.front().coefficient;
}

bool ExactValue::is_real_monomial() const {
  return terms_.size() == 1 && terms_.front().radicand > 0;
}

ComplexValue ExactValue::to_complex() const {
  ComplexValue out{};
  for (const auto& t : terms_) {
    const double magnitude = t.coefficient.to_double() *
                             std::sqrt(static_cast<double>(t.radicand < 0 ? -t.radicand : t.radicand));
    out += t.radicand < 0 ? ComplexValue{0.0, magnitude} : ComplexValue{magnitude, 0.0};
  }
  return out;
}

std::string ExactValue::to_string() const {
  if (terms_.empty()) return "0";
  // Real terms first so "a+b*sqrt(m)*i" reads naturally.
  std::vector<SurdTerm> ordered = terms_;
  std::stable_partition(ordered.begin(), ordered.end(),
                        [](const SurdTerm& t) { return t.radicand > 0; });
  std::string out;
  for (const auto& t : ordered) {
    const std::int64_t m = t.radicand < 0 ? -t.radicand : t.radicand;
    std::string c = abs(t.coefficient).to_string();
    std::string body;
    if (m == 1) {
      body = t.radicand < 0 ? (c == "1" ? "i" : c + "*i") : c;
    } else {
      body = (c == "1" ? "" : c + "*") + "sqrt(" + std::to_string(m) + ")";
      if (t.radicand < 0) body += "*i";
    }
    if (t.coefficient.sign() < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    out += body;
  }
  return out;
}

void ExactValue::add_term(const SurdTerm& term) {
  if (term.coefficient.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term.radicand,
                             [](const SurdTerm& t, std::int64_t m) { return t.radicand < m; });
  if (it != terms_.end() && it->radicand == term.radicand) {
    it->coefficient += term.coefficient;
    if (it->coefficient.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, term);
  }
}

ExactValue ExactValue::operator-() const {
  ExactValue out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

ExactValue operator+(const ExactValue& a, const ExactValue& b) {
  ExactValue out = a;
  for (const auto& t : b.terms_) out.add_term(t);
  return out;
}

ExactValue operator-(const ExactValue& a, const ExactValue& b) { return a + (-b); }

ExactValue operator*(const ExactValue& a, const ExactValue& b) {
  ExactValue out;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      // sqrt(m1) sqrt(m2) = sqrt(m1 m2), except i*i = -1 when both are imaginary.
      ExactRational coefficient = x.coefficient * y.coefficient;
      std::int64_t product = 0;
      if (__builtin_mul_overflow(x.radicand, y.radicand, &product)) {
        throw ExactOverflow("surd radicand overflow");
      }
      const bool both_imaginary = x.radicand < 0 && y.radicand < 0;
      if (both_imaginary) coefficient = -coefficient;
      const auto split = squarefree_split(both_imaginary ? -product : product);
      out.add_term({coefficient * ExactRational(split.square_root_part), split.squarefree_part});
    }
  }
  return out;
}

}  // namespace cubic
