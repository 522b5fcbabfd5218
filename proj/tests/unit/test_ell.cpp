#include <doctest.h>

#include "helpers.hpp"
#include "lcq/ell.hpp"

using namespace lcq;
using namespace lcq::testing;

TEST_SUITE_BEGIN("ell");

TEST_CASE("apply_L on worked examples") {
  SequenceWindow ones = window_of({1, 1, 1, 1, 1});
  SequenceWindow b = apply_L(ones);
  CHECK(b.start == 1);
  CHECK(b.terms == std::vector<Rational>{0, 0, 0});

  SequenceWindow mc = generate(matrix_criterion_spec(), 3);
  SequenceWindow bm = apply_L(mc);
  CHECK(bm.at(2) == Rational(19));  // b_2 = a_2^2 - a_3 a_1 = 4 + 15

  SequenceWindow geo = window_of({1, 2, 4, 8, 16});
  CHECK(apply_L(geo).terms == std::vector<Rational>{0, 0, 0});

  CHECK_THROWS_AS(apply_L(window_of({1, 2})), std::invalid_argument);
}

TEST_CASE("iterate_L") {
  SequenceWindow w = generate(tight_constant_spec(), 10);
  CHECK(iterate_L(w, 0).terms == w.terms);

  SequenceWindow l2 = iterate_L(w, 2);
  CHECK(l2.start == 2);
  for (const Rational& t : l2.terms) CHECK(t == Rational(0));

  CHECK(iterate_L(w, 1).terms == apply_L(w).terms);
  CHECK_THROWS_AS(iterate_L(window_of({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("turan_ratio") {
  SequenceWindow geo = window_of({1, 3, 9, 27});
  CHECK(*turan_ratio(geo, 1) == Rational(1));
  CHECK(*turan_ratio(geo, 2) == Rational(1));

  SequenceWindow t = generate(tight_constant_spec(), 2);
  CHECK(*turan_ratio(t, 1) == Rational(5, 8));

  SequenceWindow z = window_of({1, 0, 1});
  CHECK(!turan_ratio(z, 1));

  CHECK_THROWS_AS(turan_ratio(geo, 0), std::out_of_range);
  CHECK_THROWS_AS(turan_ratio(geo, 3), std::out_of_range);
}

TEST_CASE("first_violation") {
  CHECK(!first_violation(window_of({0, 0, 0})));

  SequenceWindow fib = window_of({0, 1, 1, 2, 3, 5, 8});
  SequenceWindow b = apply_L(fib);
  auto idx = first_violation(b);
  REQUIRE(idx.has_value());
  CHECK(*idx == 2);
  CHECK(b.at(*idx) == Rational(-1));

  SequenceWindow w = window_of({5, -1, 3});
  CHECK(*first_violation(w) == 1);
}

TEST_CASE("oracle on the failure example") {
  OracleReport r = oracle_inf_lc(failure_spec(), 1, 10);
  REQUIRE(r.levels.size() == 2);
  auto neg = r.levels[1].first_negative;
  REQUIRE(neg.has_value());
  CHECK(*neg <= 6);
  CHECK(*neg == 5);
  CHECK(r.levels[1].window.at(4) == Rational(25));
  CHECK(r.levels[1].window.at(5) == Rational(-71));
}

TEST_CASE("oracle on the tight-constant example") {
  OracleReport r = oracle_inf_lc(tight_constant_spec(), 3, 40);
  REQUIRE(r.levels.size() == 4);
  CHECK(!r.levels[1].first_negative);
  for (const Rational& t : r.levels[1].window.terms) CHECK(t > Rational(0));
  for (const Rational& t : r.levels[2].window.terms) CHECK(t == Rational(0));
  for (const Rational& t : r.levels[3].window.terms) CHECK(t == Rational(0));
  CHECK(!r.first_refutation());
}

TEST_CASE("oracle on the constant-one sequence") {
  RecurrenceSpec one = parse_spec("order=1; p=[0]; q=[1]; initial=[1]");
  OracleReport r = oracle_inf_lc(one, 2, 20);
  for (const Rational& t : r.levels[1].window.terms) CHECK(t == Rational(0));
  for (const Rational& t : r.levels[2].window.terms) CHECK(t == Rational(0));
}

TEST_CASE("oracle validates depth and horizon") {
  CHECK_THROWS_AS(oracle_inf_lc(failure_spec(), 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(oracle_inf_lc(failure_spec(), 4, 8), std::invalid_argument);
  CHECK_NOTHROW(oracle_inf_lc(failure_spec(), 4, 9));
}

TEST_CASE("r_factor_check") {
  SequenceWindow pascal = window_of({1, 2, 1});
  CHECK(!r_factor_check(pascal, kDefaultRFactor));

  SequenceWindow geo = window_of({1, 2, 4, 8, 16});
  CHECK(*r_factor_check(geo, Rational(2)) == 1);

  // r = 1 reduces to plain log-concavity.
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    std::vector<Rational> terms;
    for (int k = 0; k < 9; ++k) terms.push_back(rand_rational(rng));
    SequenceWindow w = window_of(std::move(terms));
    CHECK(r_factor_check(w, Rational(1)) == first_violation(apply_L(w)));
  }

  CHECK_THROWS_AS(r_factor_check(window_of({1, 2}), Rational(1)), std::invalid_argument);
}

TEST_CASE("the default factor certifies the irrational threshold") {
  CHECK(certifies_r_threshold(kDefaultRFactor));
  CHECK(certifies_r_threshold(Rational(3)));
  CHECK(!certifies_r_threshold(Rational(2)));
  CHECK(!certifies_r_threshold(Rational(29, 12)));  // 2.41... below the threshold
}

TEST_CASE("shrinkage property") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    std::uniform_int_distribution<int> len(3, 20);
    std::vector<Rational> terms;
    int n = len(rng);
    for (int k = 0; k < n; ++k) terms.push_back(rand_rational(rng));
    SequenceWindow w = window_of(std::move(terms), i % 4);
    SequenceWindow b = apply_L(w);
    CHECK(b.size() == w.size() - 2);
    CHECK(b.start == w.start + 1);
  }
}

TEST_CASE("geometric kernel: L annihilates geometric windows") {
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    Rational c = rand_rational(rng);
    Rational r = rand_rational(rng);
    std::vector<Rational> terms;
    Rational t = c;
    for (int k = 0; k < 10; ++k) {
      terms.push_back(t);
      t *= r;
    }
    for (const Rational& v : apply_L(window_of(std::move(terms))).terms) {
      CHECK(v == Rational(0));
    }
  }
}

TEST_CASE("b_n is the negated 2x2 Hankel determinant") {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> terms;
    for (int k = 0; k < 12; ++k) terms.push_back(rand_rational(rng));
    SequenceWindow w = window_of(std::move(terms));
    SequenceWindow b = apply_L(w);
    for (long n = b.start; n <= b.last_index(); ++n) {
      Rational hankel_det = w.at(n - 1) * w.at(n + 1) - w.at(n) * w.at(n);
      CHECK(b.at(n) == -hankel_det);
    }
  }
}

TEST_CASE("level-1 oracle matches the constant-coefficient closed form") {
  Rng rng(19);
  for (int i = 0; i < 40; ++i) {
    ConstantSecondOrder cs = rand_const_distinct_real(rng);
    Rational s = cs.a * cs.b * cs.alpha - cs.b * cs.b + cs.a * cs.a * cs.beta;
    OracleReport r = oracle_inf_lc(cs.to_spec(), 1, 41);
    for (long n = 1; n <= 40; ++n) {
      REQUIRE(r.levels[1].window.at(n) == -s * Rational::pow(-cs.beta, n - 1));
    }
  }
}

TEST_CASE("b_n = a_n^2 (1 - tau_n) whenever tau_n is defined") {
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> terms;
    for (int k = 0; k < 10; ++k) terms.push_back(rand_rational(rng));
    SequenceWindow w = window_of(std::move(terms));
    SequenceWindow b = apply_L(w);
    for (long n = b.start; n <= b.last_index(); ++n) {
      auto tau = turan_ratio(w, n);
      if (!tau) continue;
      CHECK(b.at(n) == w.at(n) * w.at(n) * (Rational(1) - *tau));
    }
  }
}

TEST_SUITE_END();
