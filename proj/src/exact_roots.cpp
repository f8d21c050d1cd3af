#include "cubic/exact_roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cubic {
namespace {

struct BudgetExceeded {};

// Positive divisors of n > 0, charging each trial division to `budget`.
std::vector<std::int64_t> divisors(std::int64_t n, std::size_t& budget) {
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (budget == 0) throw BudgetExceeded{};
    --budget;
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / std::gcd(a, b), b, &out)) throw ExactOverflow("lcm overflow");
  return out;
}

}  // namespace

RationalRootSearch find_rational_roots(const std::array<ExactRational, 4>& coefficients,
                                       std::size_t budget) {
  RationalRootSearch out;
  std::int64_t common = 1;
  for (const auto& c : coefficients) common = lcm_checked(common, c.den());
  std::array<std::int64_t, 4> ints{};
  for (std::size_t i = 0; i < 4; ++i) ints[i] = (coefficients[i] * ExactRational(common)).num();

  // Strip the leading zeros (lower degree) and trailing zeros (root at 0).
  std::size_t first = 0;
  while (first < 4 && ints[first] == 0) ++first;
  if (first >= 3) return out;  // constant polynomial: nothing to find
  std::size_t last = 3;
  if (ints[last] == 0) {
    out.roots.emplace_back(0);
    while (ints[last] == 0) --last;
  }
  if (last == first) return out;

  const std::int64_t lead = ints[first] < 0 ? -ints[first] : ints[first];
  const std::int64_t constant = ints[last] < 0 ? -ints[last] : ints[last];
  // Cauchy bound on |root|.
  double bound = 0.0;
  for (std::size_t i = first + 1; i <= last; ++i) {
    bound = std::max(bound, std::abs(static_cast<double>(ints[i])) / static_cast<double>(lead));
  }
  bound += 1.0;

  const auto evaluate = [&](const ExactRational& x) {
    ExactRational acc;
    for (std::size_t i = first; i <= last; ++i) acc = acc * x + ExactRational(ints[i]);
    return acc;
  };

  try {
    const auto numerators = divisors(constant, budget);
    const auto denominators = divisors(lead, budget);
    for (const std::int64_t d : denominators) {
      for (const std::int64_t n : numerators) {
        if (budget == 0) throw BudgetExceeded{};
        --budget;
        if (std::gcd(n, d) != 1) continue;
        if (static_cast<double>(n) / static_cast<double>(d) > bound) continue;
        for (const std::int64_t sign : {1, -1}) {
          const ExactRational candidate(sign * n, d);
          try {
            if (evaluate(candidate).is_zero()) out.roots.push_back(candidate);
          } catch (const ExactOverflow&) {
            out.exhausted = true;
          }
        }
      }
    }
  } catch (const BudgetExceeded&) {
    out.exhausted = true;
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
  return out;
}

namespace {

std::optional<std::array<ExactValue, 3>> rational_depressed_roots(const ExactRational& p,
                                                                  const ExactRational& q) {
  const auto search = find_rational_roots({ExactRational(1), ExactRational(0), p, q});
  if (search.roots.empty()) return std::nullopt;
  // Deflate by x - rho: x^2 + rho x + (rho^2 + p), discriminant -3 rho^2 - 4p.
  const ExactRational rho = search.roots.front();
  const ExactRational disc = ExactRational(-3) * rho * rho - ExactRational(4) * p;
  const ExactValue root_disc = ExactValue::sqrt(disc);
  const ExactValue half_minus_rho = ExactValue(-rho / ExactRational(2));
  const ExactValue half = ExactValue(ExactRational(1, 2));
  return std::array<ExactValue, 3>{ExactValue(rho), half_minus_rho + half * root_disc,
                                   half_minus_rho - half * root_disc};
}

}  // namespace

std::optional<std::array<ExactValue, 3>> exact_depressed_roots(const ExactValue& p, const ExactValue& q) {
  try {
    if (p.is_rational() && q.is_rational()) return rational_depressed_roots(p.rational(), q.rational());
    if (p.is_rational() && q.is_real_monomial()) {
      // x = sqrt(m) y turns x^3 + p x + k sqrt(m) into y^3 + (p/m) y + k/m.
      const SurdTerm term = q.terms().front();
      const ExactRational m(term.radicand);
      auto scaled = rational_depressed_roots(p.rational() / m, term.coefficient / m);
      if (!scaled) return std::nullopt;
      const ExactValue root_m = ExactValue::surd(ExactRational(1), term.radicand);
      for (auto& y : *scaled) y = y * root_m;
      return scaled;
    }
  } catch (const ExactOverflow&) {
  }
  return std::nullopt;
}

ExactValue evaluate_exact(const ExactValue& p, const ExactValue& q, const ExactValue& x) {
  return x * x * x + p * x + q;
}

}  // namespace cubic
