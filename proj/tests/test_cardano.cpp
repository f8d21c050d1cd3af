#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubic/cardano.hpp"
#include "oracles.hpp"

using namespace cubic;
using oracle::C;

namespace {

DepressedCubic dc(double p, double q) { return DepressedCubic{p, q, std::nullopt, std::nullopt}; }

const double kSqrt3 = std::sqrt(3.0);

}  // namespace

TEST_CASE("cardano on x^3 - 6x - 9") {
  const auto result = cardano_solve(dc(-6, -9));
  const auto& m = result.intermediates;
  // (q/2)^2 + (p/3)^3 = 81/4 - 8
  CHECK(m.disc == 49.0 / 4);
  CHECK(m.sqrt_disc == C(3.5));
  CHECK(m.a == C(8.0));
  CHECK(m.b == C(1.0));
  CHECK(m.cbrt_a == C(2.0));
  CHECK(m.cbrt_b == C(1.0));
  CHECK(oracle::matched_distance(result.roots.roots, {3.0, C(-1.5, kSqrt3 / 2), C(-1.5, -kSqrt3 / 2)}) < 1e-14);
}

TEST_CASE("cardano on the repeated root") {
  const auto result = cardano_solve(dc(-12, 16));
  CHECK(result.intermediates.disc == 0.0);
  CHECK(result.intermediates.a == C(-8.0));
  CHECK(result.intermediates.b == C(-8.0));
  CHECK(result.intermediates.cbrt_a == C(-2.0));
  CHECK(oracle::matched_distance(result.roots.roots, {-4.0, 2.0, 2.0}) < 1e-14);
}

TEST_CASE("cardano with p = 0") {
  const auto result = cardano_solve(dc(0, -8));
  CHECK(result.intermediates.a == C(8.0));
  CHECK(result.intermediates.b == C(0.0));
  CHECK(oracle::matched_distance(result.roots.roots, {2.0, 2.0 * C(-0.5, kSqrt3 / 2), 2.0 * C(-0.5, -kSqrt3 / 2)}) <
        1e-14);
}

TEST_CASE("casus irreducibilis goes through complex cube roots") {
  const auto result = cardano_solve(dc(-48, -64 * std::sqrt(2.0)));
  CHECK(result.intermediates.disc < 0);
  CHECK(result.intermediates.sqrt_disc.real() == 0.0);
  CHECK(result.intermediates.sqrt_disc.imag() > 0.0);
  CHECK(result.intermediates.cbrt_a.imag() != 0.0);
  for (const auto& x : result.roots.roots) CHECK(x.imag() == 0.0);
}

TEST_CASE("compare_methods examples") {
  CHECK(compare_methods(dc(-6, -9)).max_matched_distance <= 1e-10);
  CHECK(compare_methods(dc(-12, 16)).max_matched_distance <= 1e-10);
  const auto report = compare_methods(dc(-48, -64 * std::sqrt(2.0)));
  CHECK(report.max_matched_distance <= 1e-9);
  CHECK(report.tag == CaseTag::ConjugatePair);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(report.chen.roots[i] - report.cardano.roots[report.perm[i]]) <= report.max_matched_distance);
  }
}

TEST_CASE("property: pairing, reality and agreement") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 10000; ++i) {
    const double p = oracle::signed_log_uniform(rng, 1e-3, 1e3);
    const double q = oracle::signed_log_uniform(rng, 1e-3, 1e3);
    const auto result = cardano_solve(dc(p, q));
    const auto& m = result.intermediates;
    REQUIRE(std::abs(m.cbrt_a * m.cbrt_b + p / 3) <= 1e-10 * std::max(1.0, std::abs(p)));
    if (m.disc >= 0) {
      REQUIRE(m.a.imag() == 0.0);
      REQUIRE(m.b.imag() == 0.0);
      REQUIRE(m.cbrt_a.imag() == 0.0);
      REQUIRE(m.cbrt_b.imag() == 0.0);
    }
    const auto report = compare_methods(dc(p, q));
    double mag = 1.0;
    for (const auto& x : report.chen.roots) mag = std::max(mag, std::abs(x));
    REQUIRE(report.max_matched_distance <= 1e-8 * mag);
    REQUIRE(oracle::matched_distance(report.chen.roots, report.cardano.roots) == report.max_matched_distance);
  }
}
