#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubic {

/// Thrown when an exact computation leaves the 64-bit range. Callers on the
/// exact pipeline catch it and fall back to floating point.
class ExactOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Reduced fraction num/den with den > 0 over 64-bit integers. Every
/// operation is overflow-checked.
class ExactRational {
 public:
  constexpr ExactRational() = default;
  ExactRational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  ExactRational(std::int64_t num, std::int64_t den);

  /// Accepts "n", "-n", "n/d", and finite decimals such as "0.125" or "1e-3".
  static std::optional<ExactRational> parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  double to_double() const;
  std::string to_string() const;

  ExactRational operator-() const;
  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational&, const ExactRational&) = default;
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

ExactRational abs(const ExactRational& x);
ExactRational cube(const ExactRational& x);

/// Exact rational cube root, if x is a perfect cube in Q.
std::optional<ExactRational> exact_cube_root(const ExactRational& x);
/// Exact rational square root, if x >= 0 is a perfect square in Q.
std::optional<ExactRational> exact_square_root(const ExactRational& x);

/// Largest integer r with r^2 <= n (n >= 0).
std::int64_t isqrt(std::int64_t n);
/// Largest-magnitude integer r with sign(r) = sign(n) and |r|^3 <= |n|.
std::int64_t icbrt(std::int64_t n);

/// Writes n = k^2 * m with m squarefree and the sign of n carried by m.
struct SquarefreeSplit {
  std::int64_t square_root_part;  // k >= 1
  std::int64_t squarefree_part;   // m
};
SquarefreeSplit squarefree_split(std::int64_t n);

}  // namespace cubic
