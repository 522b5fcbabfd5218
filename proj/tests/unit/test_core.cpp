#include <doctest.h>

#include "helpers.hpp"
#include "lcq/recurrence.hpp"

using namespace lcq;
using namespace lcq::testing;

TEST_SUITE_BEGIN("core");

TEST_CASE("parse_spec accepts the canonical forms") {
  RecurrenceSpec s = parse_spec("order=2; p=[0,-1]; q=[2,-1]; initial=[2,3]");
  CHECK(s.order == 2);
  CHECK(s.p == std::vector<Rational>{Rational(0), Rational(-1)});
  CHECK(s.q == std::vector<Rational>{Rational(2), Rational(-1)});
  CHECK(s.initial == std::vector<Rational>{Rational(2), Rational(3)});

  RecurrenceSpec id = parse_spec("order=1; p=[0]; q=[1]; initial=[1]");
  CHECK(id.order == 1);
  CHECK(id.constant_coefficients());

  RecurrenceSpec frac = parse_spec("order=2; p=[1/2,0]; q=[0,1]; initial=[1,1]");
  CHECK(frac.p[0] == Rational(1, 2));

  // Multi-line with comments and stray whitespace.
  RecurrenceSpec ml = parse_spec("# header\norder = 2\np = [ 0 , 0 ]  # inline\nq=[3,-2]\ninitial=[1,4]\n");
  CHECK(ml.q[1] == Rational(-2));
}

TEST_CASE("parse_spec reports errors with line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_spec(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("order=2; p=[0,-1]; q=[2,-1]; initial=[2]") == 1);       // length mismatch
  CHECK(line_of("order=2\np=[0,-1]\nq=[2,-1]\ninitial=[2]") == 4);       // mismatch on line 4
  CHECK(line_of("order=0; p=[]; q=[]; initial=[]") == 1);                // order too small
  CHECK(line_of("order=11; p=[]; q=[]; initial=[]") == 1);               // order too large
  CHECK(line_of("order=2\np=[1/0,0]\nq=[0,0]\ninitial=[1,1]") == 2);     // zero denominator
  CHECK(line_of("order=2\nbogus\np=[0,0]\nq=[0,0]\ninitial=[1,1]") == 2);
  CHECK(line_of("order=2\nwhat=[0]\np=[0,0]\nq=[0,0]\ninitial=[1,1]") == 2);
  CHECK(line_of("order=2\np=[0,0]\np=[0,0]\nq=[0,0]\ninitial=[1,1]") == 3);  // duplicate
  CHECK(line_of("order=2\np=[0,0]\nq=[0,0]") == 3);                      // missing initial
  CHECK_THROWS_AS(parse_spec("order=2; p=[0,x]; q=[0,0]; initial=[1,1]"), ParseError);
}

TEST_CASE("companion_pair shapes") {
  auto [a, b] = companion_pair(matrix_criterion_spec());
  CHECK(a.at(0, 0) == Rational(0));
  CHECK(a.at(0, 1) == Rational(-1));
  CHECK(a.at(1, 0) == Rational(0));
  CHECK(a.at(1, 1) == Rational(0));
  CHECK(b.at(0, 0) == Rational(2));
  CHECK(b.at(0, 1) == Rational(-1));
  CHECK(b.at(1, 0) == Rational(1));
  CHECK(b.at(1, 1) == Rational(0));

  auto [a2, b2] = companion_pair(tight_constant_spec());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(a2.at(i, j) == Rational(0));

  RecurrenceSpec d1 = parse_spec("order=1; p=[0]; q=[1]; initial=[1]");
  auto [a1, b1] = companion_pair(d1);
  CHECK(a1.at(0, 0) == Rational(0));
  CHECK(b1.at(0, 0) == Rational(1));
}

TEST_CASE("companion_at") {
  Matrix m3 = companion_at(matrix_criterion_spec(), 3);
  CHECK(m3.at(0, 0) == Rational(2));
  CHECK(m3.at(0, 1) == Rational(-4));
  CHECK(m3.at(1, 0) == Rational(1));
  CHECK(m3.at(1, 1) == Rational(0));

  auto [a, b] = companion_pair(matrix_criterion_spec());
  CHECK(companion_at(matrix_criterion_spec(), 0) == b);

  // Constant coefficients: the step matrix never changes.
  CHECK(companion_at(tight_constant_spec(), 0) == companion_at(tight_constant_spec(), 17));
}

TEST_CASE("generate matches worked examples") {
  SequenceWindow w = generate(matrix_criterion_spec(), 3);
  CHECK(w.terms == std::vector<Rational>{Rational(2), Rational(3), Rational(2), Rational(-5)});

  SequenceWindow t = generate(tight_constant_spec(), 5);
  CHECK(t.terms == std::vector<Rational>{Rational(1), Rational(4), Rational(10), Rational(22),
                                         Rational(46), Rational(94)});

  SequenceWindow f = generate(failure_spec(), 5);
  CHECK(f.terms == std::vector<Rational>{Rational(1), Rational(2), Rational(1), Rational(-2),
                                         Rational(-9), Rational(-28)});

  CHECK(generate(matrix_criterion_spec(), 1).size() == 2);  // initial data only
  CHECK_THROWS_AS(generate(matrix_criterion_spec(), 0), std::invalid_argument);
  CHECK_THROWS_AS(generate(matrix_criterion_spec(), kMaxGenerate + 1), std::invalid_argument);
}

TEST_CASE("state_vector") {
  SequenceWindow w = generate(matrix_criterion_spec(), 3);
  CHECK(state_vector(w, 2, 2) == std::vector<Rational>{Rational(2), Rational(3)});
  CHECK(state_vector(w, 1, 2) == std::vector<Rational>{Rational(3), Rational(2)});  // reversed initial
  CHECK(state_vector(w, 2, 1) == std::vector<Rational>{Rational(2)});
  CHECK_THROWS_AS(state_vector(w, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(state_vector(w, 4, 2), std::out_of_range);
}

TEST_CASE("matrix_product_prefix") {
  CHECK(matrix_product_prefix(matrix_criterion_spec(), 0) == Matrix::identity(2));

  Matrix p2 = matrix_product_prefix(matrix_criterion_spec(), 2);
  std::vector<Rational> v1 = {Rational(3), Rational(2)};
  CHECK(p2.apply(v1) == std::vector<Rational>{Rational(-5), Rational(2)});

  RecurrenceSpec d1 = parse_spec("order=1; p=[0]; q=[2]; initial=[1]");
  CHECK(matrix_product_prefix(d1, 5).at(0, 0) == Rational(32));
}

TEST_CASE("exactness: independent evaluation orders agree") {
  Rng rng(2024);
  std::uniform_int_distribution<int> order(1, 5);
  for (int i = 0; i < 200; ++i) {
    RecurrenceSpec spec = rand_spec(rng, order(rng));
    SequenceWindow a = generate(spec, 50);
    SequenceWindow b = naive_generate(spec, 50);
    REQUIRE(a.terms == b.terms);
  }
}

TEST_CASE("companion consistency: M_n v_n = v_{n+1}") {
  Rng rng(7);
  std::uniform_int_distribution<int> order(1, 5);
  for (int i = 0; i < 25; ++i) {
    RecurrenceSpec spec = rand_spec(rng, order(rng));
    SequenceWindow w = generate(spec, 41);
    for (long n = spec.order - 1; n <= 40; ++n) {
      REQUIRE(companion_at(spec, n).apply(state_vector(w, n, spec.order)) ==
              state_vector(w, n + 1, spec.order));
    }
  }
}

TEST_CASE("prefix-product consistency: Pi_n maps the anchor state forward") {
  Rng rng(8);
  std::uniform_int_distribution<int> order(1, 5);
  for (int i = 0; i < 15; ++i) {
    RecurrenceSpec spec = rand_spec(rng, order(rng));
    SequenceWindow w = generate(spec, spec.order - 1 + 30);
    std::vector<Rational> anchor = state_vector(w, spec.order - 1, spec.order);
    for (long n = 0; n <= 30; ++n) {
      REQUIRE(matrix_product_prefix(spec, n).apply(anchor) ==
              state_vector(w, spec.order - 1 + n, spec.order));
    }
  }
}

TEST_CASE("canonicality of generated terms") {
  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    RecurrenceSpec spec = rand_spec(rng, 3);
    for (const Rational& r : generate(spec, 30).terms) {
      CHECK(r.denominator() > 0);
      mpz_class g, num = r.numerator(), den = r.denominator();
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_SUITE_END();
