#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <clocale>
#include <numbers>
#include <random>

#include "cubic/chen.hpp"
#include "cubic/output.hpp"
#include "cubic/parse.hpp"

using namespace cubic;
using std::numbers::pi;

TEST_CASE("parse_cubic examples") {
  auto c = parse_cubic("x^3-12x+16=0");
  CHECK(c.a() == 0.0);
  CHECK(c.b() == -12.0);
  CHECK(c.c() == 16.0);

  c = parse_cubic("x^3-48x-64*sqrt(2)");
  CHECK(c.b() == -48.0);
  CHECK(c.c() == doctest::Approx(-90.50966799));
  REQUIRE(c.exact());
  CHECK((*c.exact())[2].to_string() == "-64*sqrt(2)");

  c = parse_cubic("x^3");
  CHECK(c.a() == 0.0);
  CHECK(c.b() == 0.0);
  CHECK(c.c() == 0.0);
}

TEST_CASE("parse forms") {
  auto c = parse_cubic(" 2x^3 - 4 x^2 + x^2 + 3/4*x - 0.5 = 0 ");
  CHECK(c.a() == -1.5);
  CHECK(c.b() == 0.375);
  CHECK(c.c() == -0.25);
  c = parse_cubic("x^3 - 3/4x + sqrt(3)/8");
  CHECK(c.c() == doctest::Approx(std::sqrt(3.0) / 8));
  CHECK((*c.exact())[2].to_string() == "1/8*sqrt(3)");
  c = parse_cubic("-x + x^3 + 1e-2");
  CHECK(c.b() == -1.0);
  CHECK(c.c() == 0.01);
  c = parse_cubic("x^3+sqrt(2)*x");
  CHECK(c.b() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("parse errors carry a column") {
  auto column_of = [](const char* text) -> std::size_t {
    try {
      parse_cubic(text);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("x^3+x^") == 7);
  CHECK(column_of("x^3 + 2y") == 8);
  CHECK(column_of("x^4+1") == 3);
  CHECK(column_of("x^2+1") == 1);
  CHECK(column_of("x^3 - x + 1/0") == 13);
  CHECK(column_of("") == 1);
  CHECK(column_of("x^3 = 1") != 0);
  CHECK_THROWS_AS(parse_cubic("x^3 - x^3 + x"), ParseError);
  try {
    parse_cubic("x^3 $");
  } catch (const ParseError& e) {
    CHECK(e.annotated().find("\n  x^3 $\n      ^") != std::string::npos);
  }
}

TEST_CASE("parsing ignores the C locale") {
  const char* old = std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
  const auto c = parse_cubic("x^3 - 0.75x + 0.125");
  CHECK(c.b() == -0.75);
  CHECK(c.c() == 0.125);
  CHECK(format_number(0.5, 12) == "0.5");
  if (old) std::setlocale(LC_NUMERIC, "C");
}

TEST_CASE("number and angle formatting") {
  CHECK(format_number(-0.0, 12) == "0");
  CHECK(format_number(0.1 + 0.2, 12) == "0.3");
  CHECK(format_number(0.1 + 0.2, 17) == "0.30000000000000004");
  CHECK(format_complex(-1.5, -0.5, 12) == "-1.5 - 0.5*i");
  CHECK(format_complex(0.0, 2.0, 12) == "2*i");
  CHECK(format_angle(pi / 9, 12) == "pi/9");
  CHECK(format_angle(14 * pi / 9, 12) == "14*pi/9");
  CHECK(format_angle(-pi, 12) == "-pi");
  CHECK(format_angle(1.0, 6) == "1");
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int i = 0; i < 200; ++i) {
    const auto c = GeneralCubic::monic(u(rng), u(rng), u(rng));
    SolveOptions options;
    options.polish = i % 2 == 0;
    auto record = make_record("x", "chen", c, solve(c, options));
    if (i % 3 == 0) record.note = "n";
    const nlohmann::json j = record;
    const auto back = nlohmann::json::parse(j.dump()).get<OutputRecord>();
    CHECK(nlohmann::json(back) == j);
    CHECK(back.roots == record.roots);
    CHECK(back.p == record.p);
  }
  const auto c = parse_cubic("x^3-6x-9");
  const auto record = make_record("x^3-6x-9", "chen", c, solve(c));
  const nlohmann::json j = record;
  CHECK(j["rs"]["case"] == "real_distinct");
  CHECK(j["exact"][0] == "3");
  CHECK(j["trig"].is_null());
}

TEST_CASE("text renderings") {
  const auto c = parse_cubic("x^3-0.75x+0.125");
  const auto record = make_record("x^3-0.75x+0.125", "chen", c, solve(c));
  const std::string trig = format_trig(record, 12);
  CHECK(trig.find("amplitude = -2*sqrt(rs) = -1") != std::string::npos);
  CHECK(trig.find("theta = Arg(r) = pi/3") != std::string::npos);
  CHECK(trig.find("-1*cos(pi/9) = -0.939692620786") != std::string::npos);
  const std::string exact = format_exact(record, 12);
  CHECK(exact.find("(no exact form)") != std::string::npos);
  const auto d = parse_cubic("x^3-12x+16");
  const std::string text = format_text(make_record("in", "chen", d, solve(d)), 12);
  CHECK(text.find("case: equal (r = 2, s = 2)") != std::string::npos);
  CHECK(text.find("multiplicity 2") != std::string::npos);
}
