#include "lcq/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcq {

Polynomial Polynomial::from_descending(std::vector<Rational> desc) {
  std::reverse(desc.begin(), desc.end());
  Polynomial p{std::move(desc)};
  p.trim();
  return p;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  for (size_t k = 1; k < coeffs.size(); ++k) {
    d.coeffs.push_back(coeffs[k] * Rational(static_cast<long>(k)));
  }
  d.trim();
  return d;
}

void Polynomial::trim() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

Polynomial poly_rem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_rem: division by zero polynomial");
  Polynomial r = a;
  r.trim();
  const int db = b.degree();
  const Rational& lead = b.coeffs.back();
  while (!r.is_zero() && r.degree() >= db) {
    Rational factor = r.coeffs.back() / lead;
    int shift = r.degree() - db;
    for (int k = 0; k <= db; ++k) {
      r.coeffs[static_cast<size_t>(k + shift)] -= factor * b.coeffs[static_cast<size_t>(k)];
    }
    r.trim();
  }
  return r;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    Polynomial r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rational lead = a.coeffs.back();
    for (auto& c : a.coeffs) c /= lead;
  }
  return a;
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  Polynomial g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  // Exact division p / g.
  Polynomial r = p;
  Polynomial quot;
  quot.coeffs.assign(static_cast<size_t>(p.degree() - g.degree()) + 1, Rational(0));
  const int dg = g.degree();
  const Rational& lead = g.coeffs.back();
  r.trim();
  while (!r.is_zero() && r.degree() >= dg) {
    Rational factor = r.coeffs.back() / lead;
    int shift = r.degree() - dg;
    quot.coeffs[static_cast<size_t>(shift)] = factor;
    for (int k = 0; k <= dg; ++k) {
      r.coeffs[static_cast<size_t>(k + shift)] -= factor * g.coeffs[static_cast<size_t>(k)];
    }
    r.trim();
  }
  quot.trim();
  return quot;
}

SturmChain::SturmChain(const Polynomial& square_free) {
  Polynomial p = square_free;
  p.trim();
  if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
  seq_.push_back(p);
  Polynomial d = p.derivative();
  if (!d.is_zero()) {
    seq_.push_back(d);
    while (true) {
      Polynomial r = poly_rem(seq_[seq_.size() - 2], seq_.back());
      if (r.is_zero()) break;
      for (auto& c : r.coeffs) c = -c;
      seq_.push_back(std::move(r));
    }
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int variations = 0;
  int prev = 0;
  for (const Polynomial& p : seq_) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int SturmChain::count_roots_in(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw std::invalid_argument("count_roots_in: need a < b");
  return variations_at(a) - variations_at(b);
}

QuadRoots quadratic_roots(const Rational& s, const Rational& t, const Rational& width) {
  if (width <= Rational(0)) throw std::invalid_argument("quadratic_roots: width must be positive");
  QuadRoots out;
  out.discriminant = s * s + Rational(4) * t;
  const int dsign = out.discriminant.sign();
  const Rational half_s = s / Rational(2);
  if (dsign < 0) {
    out.kind = QuadRootKind::Complex;
    return out;
  }
  if (dsign == 0) {
    out.kind = QuadRootKind::Repeated;
    out.roots = {RationalInterval{half_s, half_s}, RationalInterval{half_s, half_s}};
    return out;
  }
  out.kind = QuadRootKind::DistinctReal;

  // Exact roots when the discriminant is a rational square.
  mpz_class dn = out.discriminant.numerator();
  mpz_class dd = out.discriminant.denominator();
  if (mpz_perfect_square_p(dn.get_mpz_t()) && mpz_perfect_square_p(dd.get_mpz_t())) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), dn.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), dd.get_mpz_t());
    Rational sq(rn, rd);
    Rational r1 = (s + sq) / Rational(2);
    Rational r2 = (s - sq) / Rational(2);
    out.roots = {RationalInterval{r1, r1}, RationalInterval{r2, r2}};
    return out;
  }

  auto p = [&](const Rational& x) { return x * x - s * x - t; };
  // Cauchy bound: every root lies strictly inside (-M, M).
  Rational bound = Rational(1) + std::max(s.abs(), t.abs());

  // Larger root: the vertex s/2 lies strictly between the two roots,
  // so p < 0 there and p > 0 at the bound.
  auto bisect = [&](Rational lo, Rational hi, bool negative_at_lo) -> RationalInterval {
    while (hi - lo > width) {
      Rational mid = (lo + hi) / Rational(2);
      int ps = p(mid).sign();
      if (ps == 0) return RationalInterval{mid, mid};
      bool mid_negative = ps < 0;
      if (mid_negative == negative_at_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return RationalInterval{lo, hi};
  };

  RationalInterval larger = bisect(half_s, bound, /*negative_at_lo=*/true);
  RationalInterval smaller = bisect(-bound, half_s, /*negative_at_lo=*/false);
  out.roots = {larger, smaller};
  return out;
}

Rational default_enclosure_width() {
  return Rational(mpz_class(1), mpz_class(1) << 30);
}

}  // namespace lcq
