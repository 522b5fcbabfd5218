#pragma once

#include <random>
#include <vector>

#include "lcq/criteria.hpp"
#include "lcq/qform.hpp"
#include "lcq/rational.hpp"
#include "lcq/recurrence.hpp"
#include "lcq/window.hpp"

namespace lcq::testing {

using Rng = std::mt19937_64;

inline Rational rand_rational(Rng& rng, long num_range = 5, long den_range = 4) {
  std::uniform_int_distribution<long> num(-num_range, num_range);
  std::uniform_int_distribution<long> den(1, den_range);
  return Rational(num(rng), den(rng));
}

inline RecurrenceSpec rand_spec(Rng& rng, int order) {
  RecurrenceSpec spec;
  spec.order = order;
  for (int i = 0; i < order; ++i) {
    spec.p.push_back(rand_rational(rng));
    spec.q.push_back(rand_rational(rng));
    spec.initial.push_back(rand_rational(rng));
  }
  return spec;
}

inline ConstantSecondOrder rand_const(Rng& rng) {
  return ConstantSecondOrder{rand_rational(rng), rand_rational(rng), rand_rational(rng),
                             rand_rational(rng)};
}

inline ConstantSecondOrder rand_const_distinct_real(Rng& rng) {
  while (true) {
    ConstantSecondOrder cs = rand_const(rng);
    if (cs.discriminant() > Rational(0)) return cs;
  }
}

/// Independent re-evaluation of the recurrence with a deliberately
/// different association and summation order: terms are accumulated from
/// the highest lag down, and each coefficient product is split into its
/// n-part and constant part.
inline SequenceWindow naive_generate(const RecurrenceSpec& spec, long up_to) {
  const int d = spec.order;
  SequenceWindow w;
  w.start = 0;
  w.terms = spec.initial;
  for (long n = d - 1; n + 1 <= up_to; ++n) {
    Rational next;
    for (int k = d - 1; k >= 0; --k) {
      const Rational& term = w.terms[static_cast<size_t>(n - k)];
      next += spec.p[static_cast<size_t>(k)] * Rational(n) * term;
      next += spec.q[static_cast<size_t>(k)] * term;
    }
    w.terms.push_back(next);
  }
  return w;
}

inline SequenceWindow window_of(std::vector<Rational> terms, long start = 0) {
  SequenceWindow w;
  w.start = start;
  w.terms = std::move(terms);
  return w;
}

inline SymmetricMatrix rand_symmetric(Rng& rng, int dim, long range = 3) {
  SymmetricMatrix s(dim);
  std::uniform_int_distribution<long> v(-range, range);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) s.set(i, j, Rational(v(rng)));
  return s;
}

/// Random symmetric matrix made positive definite by diagonal dominance.
inline SymmetricMatrix rand_positive_definite(Rng& rng, int dim, long range = 3) {
  SymmetricMatrix s = rand_symmetric(rng, dim, range);
  for (int i = 0; i < dim; ++i) {
    Rational off;
    for (int j = 0; j < dim; ++j) {
      if (j != i) off += s.at(i, j).abs();
    }
    s.set(i, i, off + Rational(1) + s.at(i, i).abs());
  }
  return s;
}

inline const RecurrenceSpec& matrix_criterion_spec() {
  static const RecurrenceSpec spec = [] {
    RecurrenceSpec s;
    s.order = 2;
    s.p = {Rational(0), Rational(-1)};
    s.q = {Rational(2), Rational(-1)};
    s.initial = {Rational(2), Rational(3)};
    return s;
  }();
  return spec;
}

inline const RecurrenceSpec& tight_constant_spec() {
  static const RecurrenceSpec spec = [] {
    RecurrenceSpec s;
    s.order = 2;
    s.p = {Rational(0), Rational(0)};
    s.q = {Rational(3), Rational(-2)};
    s.initial = {Rational(1), Rational(4)};
    return s;
  }();
  return spec;
}

inline const RecurrenceSpec& failure_spec() {
  static const RecurrenceSpec spec = [] {
    RecurrenceSpec s;
    s.order = 2;
    s.p = {Rational(1), Rational(-1)};
    s.q = {Rational(0), Rational(0)};
    s.initial = {Rational(1), Rational(2)};
    return s;
  }();
  return spec;
}

inline const RecurrenceSpec& fibonacci_spec() {
  static const RecurrenceSpec spec = [] {
    RecurrenceSpec s;
    s.order = 2;
    s.p = {Rational(0), Rational(0)};
    s.q = {Rational(1), Rational(1)};
    s.initial = {Rational(0), Rational(1)};
    return s;
  }();
  return spec;
}

}  // namespace lcq::testing
