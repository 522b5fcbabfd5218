#include "lcq/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace lcq {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+')) {
    num_digits.remove_prefix(1);
  }
  if (!all_digits(num_digits) || !all_digits(den)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += "/";
    s += v_.get_den().get_str();
  }
  return s;
}

std::string Rational::decimal(int sig_digits) const {
  if (sig_digits < 1) throw std::invalid_argument("decimal: need at least one digit");
  if (is_zero()) return "0";

  mpz_class num = ::abs(v_.get_num());
  mpz_class den = v_.get_den();

  // Normalize to num/den in [1, 10) tracking the decimal exponent.
  long exp = 0;
  while (num < den) {
    num *= 10;
    --exp;
  }
  while (num >= 10 * den) {
    den *= 10;
    ++exp;
  }

  // digits = round(num/den * 10^(sig_digits-1)), half away from zero.
  mpz_class scaled = num;
  for (int i = 1; i < sig_digits; ++i) scaled *= 10;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;

  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) > sig_digits) {
    // Rounding carried past the leading digit (e.g. 9.99 -> 10.0).
    digits.pop_back();
    ++exp;
  }

  std::string out;
  if (sign() < 0) out += "-";
  out += digits[0];
  if (digits.size() > 1) {
    out += ".";
    out += digits.substr(1);
  }
  out += "e";
  out += (exp < 0) ? "-" : "+";
  std::string es = std::to_string(exp < 0 ? -exp : exp);
  if (es.size() < 2) es.insert(es.begin(), '0');
  out += es;
  return out;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::pow(const Rational& x, long k) {
  if (k == 0) return Rational(1);
  bool invert = k < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  if (invert && x.is_zero()) throw std::invalid_argument("pow: zero to negative power");
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), x.v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), x.v_.get_den().get_mpz_t(), e);
  return invert ? Rational(d, n) : Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace lcq
