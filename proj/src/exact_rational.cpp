#include "cubic/exact_rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace cubic {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ExactOverflow("rational multiply overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ExactOverflow("rational add overflow");
  return out;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw ExactOverflow("rational negate overflow");
  return -a;
}

}  // namespace

ExactRational::ExactRational(std::int64_t num) : num_(num), den_(1) {}

ExactRational::ExactRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::optional<ExactRational> ExactRational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  try {
    bool negative = false;
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
    }
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
      auto num = parse(text.substr(i, slash - i));
      auto den = parse(text.substr(slash + 1));
      if (!num || !den || den->is_zero()) return std::nullopt;
      ExactRational out = *num / *den;
      return negative ? -out : out;
    }
    std::int64_t mantissa = 0;
    std::int64_t scale = 1;
    bool any_digit = false;
    bool after_point = false;
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (c >= '0' && c <= '9') {
        mantissa = checked_add(checked_mul(mantissa, 10), c - '0');
        if (after_point) scale = checked_mul(scale, 10);
        any_digit = true;
      } else if (c == '.' && !after_point) {
        after_point = true;
      } else {
        break;
      }
    }
    if (!any_digit) return std::nullopt;
    ExactRational out(mantissa, scale);
    if (i < text.size()) {
      if (text[i] != 'e' && text[i] != 'E') return std::nullopt;
      ++i;
      bool neg_exp = false;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg_exp = text[i] == '-';
        ++i;
      }
      if (i == text.size()) return std::nullopt;
      int exponent = 0;
      for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9' || exponent > 40) return std::nullopt;
        exponent = exponent * 10 + (text[i] - '0');
      }
      std::int64_t power = 1;
      for (int k = 0; k < exponent; ++k) power = checked_mul(power, 10);
      out = neg_exp ? out / ExactRational(power) : out * ExactRational(power);
    }
    return negative ? -out : out;
  } catch (const ExactOverflow&) {
    return std::nullopt;
  }
}

double ExactRational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string ExactRational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ExactRational ExactRational::operator-() const {
  ExactRational out;
  out.num_ = checked_neg(num_);
  out.den_ = den_;
  return out;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  const std::int64_t g = std::gcd(den_, rhs.den_);
  const std::int64_t left = checked_mul(num_, rhs.den_ / g);
  const std::int64_t right = checked_mul(rhs.num_, den_ / g);
  *this = ExactRational(checked_add(left, right), checked_mul(den_ / g, rhs.den_));
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) { return *this += -rhs; }

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  const std::int64_t g1 = std::gcd(num_, rhs.den_);
  const std::int64_t g2 = std::gcd(rhs.num_, den_);
  const std::int64_t n = checked_mul(num_ / g1, rhs.num_ / g2);
  const std::int64_t d = checked_mul(den_ / g2, rhs.den_ / g1);
  *this = ExactRational(n, d);
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero rational");
  ExactRational inverse;
  inverse.num_ = rhs.num_ < 0 ? checked_neg(rhs.den_) : rhs.den_;
  inverse.den_ = rhs.num_ < 0 ? checked_neg(rhs.num_) : rhs.num_;
  return *this *= inverse;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  const __int128 left = static_cast<__int128>(a.num_) * b.den_;
  const __int128 right = static_cast<__int128>(b.num_) * a.den_;
  return left <=> right;
}

ExactRational abs(const ExactRational& x) { return x.sign() < 0 ? -x : x; }

ExactRational cube(const ExactRational& x) { return x * x * x; }

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t icbrt(std::int64_t n) {
  if (n < 0) {
    if (n == std::numeric_limits<std::int64_t>::min()) return -2097152;
    return -icbrt(-n);
  }
  auto r = static_cast<std::int64_t>(std::cbrt(static_cast<double>(n)));
  const auto cubed = [](std::int64_t v) { return static_cast<__int128>(v) * v * v; };
  while (r > 0 && cubed(r) > n) --r;
  while (cubed(r + 1) <= n) ++r;
  return r;
}

std::optional<ExactRational> exact_cube_root(const ExactRational& x) {
  const std::int64_t rn = icbrt(x.num());
  const std::int64_t rd = icbrt(x.den());
  if (static_cast<__int128>(rn) * rn * rn != x.num()) return std::nullopt;
  if (static_cast<__int128>(rd) * rd * rd != x.den()) return std::nullopt;
  return ExactRational(rn, rd);
}

std::optional<ExactRational> exact_square_root(const ExactRational& x) {
  if (x.sign() < 0) return std::nullopt;
  const std::int64_t rn = isqrt(x.num());
  const std::int64_t rd = isqrt(x.den());
  if (static_cast<__int128>(rn) * rn != x.num()) return std::nullopt;
  if (static_cast<__int128>(rd) * rd != x.den()) return std::nullopt;
  return ExactRational(rn, rd);
}

SquarefreeSplit squarefree_split(std::int64_t n) {
  if (n == 0) return {0, 0};
  const std::int64_t sign = n < 0 ? -1 : 1;
  if (n == std::numeric_limits<std::int64_t>::min()) throw ExactOverflow("squarefree_split range");
  std::uint64_t rest = static_cast<std::uint64_t>(n < 0 ? -n : n);
  std::int64_t root = 1;
  std::int64_t free = 1;
  // Trial division up to the cube root of the 64-bit range leaves at most two
  // prime factors, so a perfect-square test settles the remainder.
  for (std::uint64_t p = 2; p <= 2097152 && p * p <= rest; ++p) {
    int count = 0;
    while (rest % p == 0) {
      rest /= p;
      ++count;
    }
    for (int k = 0; k + 1 < count; k += 2) root = checked_mul(root, static_cast<std::int64_t>(p));
    if (count % 2 == 1) free = checked_mul(free, static_cast<std::int64_t>(p));
  }
  if (rest > 1) {
    const auto r = static_cast<std::int64_t>(isqrt(static_cast<std::int64_t>(rest)));
    if (static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(r) == rest && r > 1) {
      root = checked_mul(root, r);
    } else {
      free = checked_mul(free, static_cast<std::int64_t>(rest));
    }
  }
  return {root, sign * free};
}

}  // namespace cubic
