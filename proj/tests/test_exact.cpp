#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "cubic/exact_roots.hpp"
#include "cubic/exact_value.hpp"
#include "oracles.hpp"

using namespace cubic;

TEST_CASE("rational arithmetic stays reduced") {
  const ExactRational a(6, -8);
  CHECK(a.num() == -3);
  CHECK(a.den() == 4);
  CHECK((a + ExactRational(3, 4)).is_zero());
  CHECK(ExactRational(1, 3) * ExactRational(3) == ExactRational(1));
  CHECK(ExactRational(1, 2) < ExactRational(2, 3));
  CHECK(ExactRational(9, 2).to_string() == "9/2");
  CHECK_THROWS_AS(ExactRational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(ExactRational::parse("0.125") == ExactRational(1, 8));
  CHECK(ExactRational::parse("-3/4") == ExactRational(-3, 4));
  CHECK(ExactRational::parse("1e-3") == ExactRational(1, 1000));
  CHECK(ExactRational::parse("2.5e1") == ExactRational(25));
  CHECK_FALSE(ExactRational::parse("abc"));
  CHECK_FALSE(ExactRational::parse("1/0"));
}

TEST_CASE("overflow is reported, not wrapped") {
  const ExactRational big(std::numeric_limits<std::int64_t>::max() / 2);
  CHECK_THROWS_AS(big * ExactRational(3), ExactOverflow);
  CHECK_THROWS_AS(big + big + big, ExactOverflow);
}

TEST_CASE("exact roots of rationals") {
  CHECK(exact_cube_root(ExactRational(-27, 8)) == ExactRational(-3, 2));
  CHECK_FALSE(exact_cube_root(ExactRational(2)));
  CHECK(exact_square_root(ExactRational(49, 4)) == ExactRational(7, 2));
  CHECK_FALSE(exact_square_root(ExactRational(-4)));
  CHECK(isqrt(99) == 9);
  CHECK(icbrt(-28) == -3);
  const auto split = squarefree_split(-72);
  CHECK(split.square_root_part == 6);
  CHECK(split.squarefree_part == -2);
}

TEST_CASE("surd values") {
  const ExactValue r2 = ExactValue::surd(2, 8);  // 2*sqrt(8) = 4*sqrt(2)
  CHECK(r2.to_string() == "4*sqrt(2)");
  CHECK((r2 * r2).rational() == ExactRational(32));
  const ExactValue i = ExactValue::sqrt(-1);
  CHECK((i * i).rational() == ExactRational(-1));
  const ExactValue z = ExactValue(ExactRational(-3, 2)) + ExactValue::surd(ExactRational(1, 2), -3);
  CHECK(z.to_string() == "-3/2+1/2*sqrt(3)*i");
  CHECK(std::abs(z.to_complex() - std::complex<double>(-1.5, std::sqrt(3.0) / 2)) < 1e-15);
  CHECK((z - z).is_zero());
}

TEST_CASE("rational root search") {
  // (x - 1)(x - 2)(x - 3)
  auto found = find_rational_roots({ExactRational(1), ExactRational(-6), ExactRational(11), ExactRational(-6)});
  CHECK(found.roots.size() == 3);
  CHECK_FALSE(found.exhausted);
  // 8x^3 - 1 has the single rational root 1/2
  found = find_rational_roots({ExactRational(8), ExactRational(0), ExactRational(0), ExactRational(-1)});
  REQUIRE(found.roots.size() == 1);
  CHECK(found.roots[0] == ExactRational(1, 2));
  // x^3 + 3x - 2: candidates +-1, +-2 all fail
  found = find_rational_roots({ExactRational(1), ExactRational(0), ExactRational(3), ExactRational(-2)});
  CHECK(found.roots.empty());
  CHECK_FALSE(found.exhausted);
  found = find_rational_roots({ExactRational(1), ExactRational(0), ExactRational(3), ExactRational(-2)}, 2);
  CHECK(found.exhausted);
}

TEST_CASE("exact depressed roots") {
  const auto equal = exact_depressed_roots(ExactRational(-12), ExactRational(16));
  REQUIRE(equal);
  std::array<std::complex<double>, 3> z{};
  for (int i = 0; i < 3; ++i) z[i] = (*equal)[i].to_complex();
  CHECK(oracle::matched_distance(z, {2.0, 2.0, -4.0}) == 0.0);

  const auto surd = exact_depressed_roots(ExactRational(-48), ExactValue::surd(-64, 2));
  REQUIRE(surd);
  for (const auto& x : *surd) CHECK(evaluate_exact(ExactRational(-48), ExactValue::surd(-64, 2), x).is_zero());

  CHECK_FALSE(exact_depressed_roots(ExactRational(3), ExactRational(-2)));
}

TEST_CASE("property: reported rational roots are exact roots") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  for (int i = 0; i < 500; ++i) {
    const ExactRational root(d(rng), den(rng));
    const ExactRational b(d(rng)), c(d(rng));
    // (x - root)(x^2 + b x + c)
    const std::array<ExactRational, 4> coeff{ExactRational(1), b - root, c - root * b, -root * c};
    const auto found = find_rational_roots(coeff);
    bool has = false;
    for (const auto& x : found.roots) {
      CHECK(((coeff[0] * x + coeff[1]) * x + coeff[2]) * x + coeff[3] == ExactRational(0));
      has = has || x == root;
    }
    CHECK(has);
  }
}
