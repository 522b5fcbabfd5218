#pragma once

#include <vector>

#include "lcq/rational.hpp"

namespace lcq {

/// Univariate polynomial with exact rational coefficients, ascending order
/// (coeffs[k] multiplies x^k). The zero polynomial has an empty vector.
struct Polynomial {
  std::vector<Rational> coeffs;

  static Polynomial from_descending(std::vector<Rational> desc);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  Rational eval(const Rational& x) const;
  Polynomial derivative() const;
  /// Drops trailing zero coefficients.
  void trim();
};

/// Remainder of exact polynomial division a mod b (b nonzero).
Polynomial poly_rem(const Polynomial& a, const Polynomial& b);

/// Monic gcd under exact division.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'): same distinct roots, all simple.
Polynomial square_free_part(const Polynomial& p);

/// Sturm chain of a square-free polynomial; counts distinct real roots.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& square_free);
  /// Sign variations of the chain evaluated at x.
  int variations_at(const Rational& x) const;
  /// Number of distinct roots in (a, b], requires a < b.
  int count_roots_in(const Rational& a, const Rational& b) const;

 private:
  std::vector<Polynomial> seq_;
};

struct RationalInterval {
  Rational lo;
  Rational hi;
  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  double mid_double() const { return ((lo + hi) / Rational(2)).to_double(); }
};

enum class QuadRootKind { DistinctReal, Repeated, Complex };

/// Root classification and enclosures of the monic quadratic
/// x^2 - s x - t (roots (s +- sqrt(s^2+4t))/2).
struct QuadRoots {
  Rational discriminant;
  QuadRootKind kind = QuadRootKind::Complex;
  // Present when roots are real: larger root first, then smaller
  // (equal for a repeated root). Exact rational roots give degenerate
  // intervals.
  std::vector<RationalInterval> roots;
};

/// Encloses the roots of x^2 - s x - t to the requested width using
/// exact-sign bisection; rational roots are detected and returned exactly.
QuadRoots quadratic_roots(const Rational& s, const Rational& t, const Rational& width);

/// 2^-30, the certified enclosure width used for root data.
Rational default_enclosure_width();

}  // namespace lcq
