#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "cubic/complex.hpp"
#include "oracles.hpp"

using namespace cubic;
using std::numbers::pi;

TEST_CASE("principal_arg convention") {
  CHECK(principal_arg({-1.0, 0.0}) == doctest::Approx(pi));
  CHECK(principal_arg({-1.0, -0.0}) == doctest::Approx(pi));
  CHECK(principal_arg({0.0, -1.0}) == doctest::Approx(-pi / 2));
  CHECK(principal_arg({1.0, 0.0}) == 0.0);
}

TEST_CASE("principal_cube_root examples") {
  CHECK(principal_cube_root(8.0) == ComplexValue(2.0, 0.0));
  const ComplexValue m8 = principal_cube_root(-8.0);
  CHECK(std::abs(m8 - ComplexValue(1.0, std::sqrt(3.0))) < 1e-15);
  const ComplexValue z = std::polar(4.0, 3 * pi / 4);
  CHECK(std::abs(principal_cube_root(z) - std::polar(std::cbrt(4.0), pi / 4)) < 1e-15);
  CHECK(principal_cube_root(0.0) == ComplexValue(0.0, 0.0));
}

TEST_CASE("real_cube_root examples") {
  CHECK(real_cube_root(-1.0) == -1.0);
  CHECK(real_cube_root(0.0) == 0.0);
  CHECK(real_cube_root(27.0) == 3.0);
}

TEST_CASE("cube_roots_all examples") {
  const auto ones = cube_roots_all(1.0);
  CHECK(oracle::matched_distance(ones, {1.0, kOmega, kOmegaSq}) < 1e-15);
  const auto m8 = cube_roots_all(-8.0);
  CHECK(oracle::matched_distance(m8, {ComplexValue(1, std::sqrt(3.0)), -2.0, ComplexValue(1, -std::sqrt(3.0))}) <
        1e-14);
  // r/s for r = -1/2, s = -4
  for (const auto& u : cube_roots_all(-0.5 / -4.0)) CHECK(std::abs(u * u * u - 0.125) < 1e-16);
}

TEST_CASE("cube_root branches") {
  const ComplexValue z{-8.0, 0.0};
  CHECK(cube_root(z, CubeRootBranch::RealPreferring) == ComplexValue(-2.0, 0.0));
  CHECK(std::abs(cube_root(z, CubeRootBranch::PrincipalTimesOmega) - principal_cube_root(z) * kOmega) < 1e-15);
  CHECK(std::abs(cube_root(z, CubeRootBranch::PrincipalTimesOmegaSq) - principal_cube_root(z) * kOmegaSq) < 1e-15);
  const ComplexValue w{1.0, 2.0};
  CHECK(cube_root(w, CubeRootBranch::RealPreferring) == principal_cube_root(w));
}

TEST_CASE("property: cube of the principal root") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(-pi, pi);
  double worst = 0.0;
  for (int i = 0; i < 1'000'000; ++i) {
    const ComplexValue z = std::polar(oracle::log_uniform(rng, 1e-6, 1e6), angle(rng));
    const ComplexValue w = principal_cube_root(z);
    worst = std::max(worst, std::abs(w * w * w - z) / std::abs(z));
    const double arg = principal_arg(w);
    REQUIRE(arg > -pi / 3);
    REQUIRE(arg <= pi / 3 + 1e-15);
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("property: arg boundary on the negative axis") {
  CHECK(principal_arg(principal_cube_root(-5.0)) == doctest::Approx(pi / 3));
}

TEST_CASE("property: real cube root is multiplicative") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10000; ++i) {
    const double x = oracle::signed_log_uniform(rng, 1e-6, 1e6);
    const double y = oracle::signed_log_uniform(rng, 1e-6, 1e6);
    const double lhs = real_cube_root(x) * real_cube_root(y);
    REQUIRE(std::abs(lhs - real_cube_root(x * y)) <= 1e-12 * std::abs(lhs));
  }
}

TEST_CASE("property: cube_roots_all closed under omega") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  for (int i = 0; i < 1000; ++i) {
    const auto roots = cube_roots_all({n(rng), n(rng)});
    std::array<ComplexValue, 3> rotated{};
    for (int k = 0; k < 3; ++k) rotated[k] = roots[k] * kOmega;
    REQUIRE(oracle::matched_distance(roots, rotated) < 1e-14 * (1 + std::abs(roots[0])));
  }
}
