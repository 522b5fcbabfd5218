#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lcq/rational.hpp"

using lcq::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-1, -2).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(5).str() == "5");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("29/11")->str() == "29/11");
  CHECK(Rational::parse("-3")->str() == "-3");
  CHECK(Rational::parse("+5")->str() == "5");
  CHECK(Rational::parse("6/4")->str() == "3/2");
  CHECK(!Rational::parse("1/0"));
  CHECK(!Rational::parse("1/-2"));
  CHECK(!Rational::parse("a"));
  CHECK(!Rational::parse(""));
  CHECK(!Rational::parse("1.5"));
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(2, 5) == Rational(11, 15));
  CHECK(Rational(1, 3) - Rational(2, 5) == Rational(-1, 15));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK((-Rational(3, 7)).str() == "-3/7");
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(7, 2) >= Rational(7, 2));
}

TEST_CASE("pow, floor, ceil, abs") {
  CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(Rational::pow(Rational(0), 0) == Rational(1));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(-5, 3).abs() == Rational(5, 3));
}

TEST_CASE("decimal rendering") {
  CHECK(Rational(46).decimal(20) == "4.6000000000000000000e+01");
  CHECK(Rational(1, 3).decimal(20) == "3.3333333333333333333e-01");
  CHECK(Rational(-1, 4).decimal(3) == "-2.50e-01");
  CHECK(Rational(0).decimal(20) == "0");
  // Rounding can carry past the leading digit.
  CHECK(Rational(999, 1000).decimal(2) == "1.0e+00");
  CHECK(Rational(2, 3).decimal(4) == "6.667e-01");
}

TEST_CASE("canonical form survives random arithmetic") {
  lcq::testing::Rng rng(12345);
  for (int i = 0; i < 200; ++i) {
    Rational a = lcq::testing::rand_rational(rng, 50, 30);
    Rational b = lcq::testing::rand_rational(rng, 50, 30);
    for (const Rational& r : {a + b, a - b, a * b}) {
      CHECK(r.denominator() > 0);
      mpz_class g;
      mpz_class num = r.numerator(), den = r.denominator();
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_SUITE_END();
