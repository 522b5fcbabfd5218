#include <doctest.h>

#include "helpers.hpp"
#include "lcq/polynomial.hpp"

using namespace lcq;

namespace {

Polynomial make(std::vector<Rational> ascending) { return Polynomial{std::move(ascending)}; }

}  // namespace

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("evaluation and derivative") {
  Polynomial p = make({-2, 0, 1});  // x^2 - 2
  CHECK(p.eval(Rational(2)) == Rational(2));
  CHECK(p.eval(Rational(0)) == Rational(-2));
  CHECK(p.degree() == 2);
  Polynomial d = p.derivative();
  CHECK(d.coeffs == std::vector<Rational>{0, 2});
}

TEST_CASE("gcd and square-free part") {
  // (x-1)^2 (x+2) = x^3 - 3x + 2
  Polynomial p = make({2, -3, 0, 1});
  Polynomial sf = square_free_part(p);
  // Distinct roots 1 and -2: (x-1)(x+2) = x^2 + x - 2 up to a constant.
  REQUIRE(sf.degree() == 2);
  CHECK(sf.eval(Rational(1)) == Rational(0));
  CHECK(sf.eval(Rational(-2)) == Rational(0));
  CHECK(sf.eval(Rational(0)) != Rational(0));

  Polynomial g = poly_gcd(p, p.derivative());
  REQUIRE(g.degree() == 1);
  CHECK(g.eval(Rational(1)) == Rational(0));
}

TEST_CASE("sturm chain counts roots") {
  Polynomial p = make({-2, 0, 1});  // x^2 - 2, roots +-sqrt(2)
  SturmChain chain(p);
  CHECK(chain.count_roots_in(Rational(-2), Rational(2)) == 2);
  CHECK(chain.count_roots_in(Rational(0), Rational(2)) == 1);
  CHECK(chain.count_roots_in(Rational(-2), Rational(0)) == 1);
  CHECK(chain.count_roots_in(Rational(2), Rational(3)) == 0);

  // (x-1)(x-2)(x-3)
  Polynomial q = make({-6, 11, -6, 1});
  SturmChain cq(q);
  CHECK(cq.count_roots_in(Rational(0), Rational(4)) == 3);
  CHECK(cq.count_roots_in(Rational(3, 2), Rational(5, 2)) == 1);
}

TEST_CASE("quadratic roots: exact rational case") {
  // x^2 - 3x + 2: s = 3, t = -2, roots 2 and 1.
  QuadRoots qr = quadratic_roots(Rational(3), Rational(-2), default_enclosure_width());
  CHECK(qr.kind == QuadRootKind::DistinctReal);
  CHECK(qr.discriminant == Rational(1));
  REQUIRE(qr.roots.size() == 2);
  CHECK(qr.roots[0].is_exact());
  CHECK(qr.roots[0].lo == Rational(2));
  CHECK(qr.roots[1].lo == Rational(1));
}

TEST_CASE("quadratic roots: irrational enclosures") {
  // x^2 - x - 1: golden ratio and its conjugate.
  QuadRoots qr = quadratic_roots(Rational(1), Rational(1), default_enclosure_width());
  CHECK(qr.kind == QuadRootKind::DistinctReal);
  REQUIRE(qr.roots.size() == 2);
  for (const RationalInterval& iv : qr.roots) {
    CHECK(iv.width() <= default_enclosure_width());
    // The enclosure brackets a sign change of the polynomial.
    auto value = [](const Rational& x) { return x * x - x - Rational(1); };
    CHECK(value(iv.lo).sign() * value(iv.hi).sign() <= 0);
  }
  CHECK(qr.roots[0].lo > Rational((long)1));
  CHECK(qr.roots[1].hi < Rational(0));
}

TEST_CASE("quadratic roots: repeated and complex") {
  QuadRoots rep = quadratic_roots(Rational(2), Rational(-1), default_enclosure_width());
  CHECK(rep.kind == QuadRootKind::Repeated);
  CHECK(rep.roots[0].lo == Rational(1));

  QuadRoots cpx = quadratic_roots(Rational(0), Rational(-1), default_enclosure_width());
  CHECK(cpx.kind == QuadRootKind::Complex);
  CHECK(cpx.roots.empty());
  CHECK(cpx.discriminant == Rational(-4));
}

TEST_SUITE_END();
