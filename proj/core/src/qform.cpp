#include "lcq/qform.hpp"

#include <stdexcept>

namespace lcq {

size_t SymmetricMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) {
    throw std::out_of_range("SymmetricMatrix: index out of range");
  }
  if (i > j) std::swap(i, j);
  // Row-major packed upper triangle.
  return static_cast<size_t>(i) * dim_ - static_cast<size_t>(i) * (i - 1) / 2 +
         static_cast<size_t>(j - i);
}

SymmetricMatrix SymmetricMatrix::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("from_matrix: not square");
  SymmetricMatrix s(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = i; j < m.cols(); ++j) {
      if (m.at(i, j) != m.at(j, i)) {
        throw std::invalid_argument("from_matrix: matrix is not exactly symmetric");
      }
      s.set(i, j, m.at(i, j));
    }
  }
  return s;
}

Matrix SymmetricMatrix::to_matrix() const {
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(i, j) = at(i, j);
  return m;
}

SymmetricMatrix SymmetricMatrix::operator+(const SymmetricMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("SymmetricMatrix add: dimension mismatch");
  SymmetricMatrix r(dim_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

SymmetricMatrix SymmetricMatrix::scaled(const Rational& c) const {
  SymmetricMatrix r(dim_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
  return r;
}

Rational SymmetricMatrix::quadratic(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw std::invalid_argument("quadratic: dimension mismatch");
  }
  Rational acc;
  for (int i = 0; i < dim_; ++i) {
    acc += at(i, i) * v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
    for (int j = i + 1; j < dim_; ++j) {
      acc += Rational(2) * at(i, j) * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    }
  }
  return acc;
}

QFormPair build_qform(const RecurrenceSpec& spec) {
  const int d = spec.order;
  if (d < 2) {
    throw std::invalid_argument(
        "build_qform: order must be >= 2 (a first-order recurrence has no "
        "second state component to form the quadratic form)");
  }
  // u e2^T + e2 u^T adds u to column 1 and row 1 (0-based).
  auto half_outer_with_e2 = [d](const std::vector<Rational>& u) {
    SymmetricMatrix s(d);
    for (int i = 0; i < d; ++i) {
      Rational v = u[static_cast<size_t>(i)] / Rational(-2);
      if (i == 1) v += v;  // diagonal entry receives both contributions
      s.set(i, 1, v);
    }
    return s;
  };

  SymmetricMatrix q0 = half_outer_with_e2(spec.q);
  q0.set(0, 0, q0.at(0, 0) + Rational(1));  // e1 e1^T
  SymmetricMatrix q1 = half_outer_with_e2(spec.p);
  return QFormPair{q0, q1, d};
}

SymmetricMatrix q_at(const QFormPair& pair, long n) {
  if (n < 0) throw std::invalid_argument("q_at: n must be >= 0");
  return pair.q0 + pair.q1.scaled(Rational(n));
}

Rational quadratic_value(const QFormPair& pair, const std::vector<Rational>& v, long n) {
  return q_at(pair, n).quadratic(v);
}

namespace {

/// Determinant of the principal submatrix selected by `rows`,
/// by exact Gaussian elimination.
Rational principal_minor(const SymmetricMatrix& s, const std::vector<int>& rows) {
  const int k = static_cast<int>(rows.size());
  Matrix m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m.at(i, j) = s.at(rows[static_cast<size_t>(i)], rows[static_cast<size_t>(j)]);

  Rational det(1);
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = col; j < k; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (int r = col + 1; r < k; ++r) {
      if (m.at(r, col).is_zero()) continue;
      Rational f = m.at(r, col) / m.at(col, col);
      for (int j = col; j < k; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return det;
}

}  // namespace

PsdResult psd_exact(const SymmetricMatrix& s) {
  const int d = s.dim();
  if (d > kMaxOrder) throw std::invalid_argument("psd_exact: dimension exceeds supported bound");
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i)) rows.push_back(i);
    }
    Rational det = principal_minor(s, rows);
    if (det.sign() < 0) {
      return PsdResult{false, rows, det};
    }
  }
  return PsdResult{true, {}, Rational(0)};
}

bool d2_psd_condition(const RecurrenceSpec& spec, long n) {
  if (spec.order != 2) throw std::invalid_argument("d2_psd_condition: order must be 2");
  Rational g = spec.p[1] * Rational(n) + spec.q[1];
  if (g > Rational(0)) return false;
  Rational f = spec.p[0] * Rational(n) + spec.q[0];
  return f * f <= Rational(-4) * g;
}

bool d2_psd_for_all_n(const RecurrenceSpec& spec) {
  if (spec.order != 2) throw std::invalid_argument("d2_psd_for_all_n: order must be 2");
  // Both closed-form inequalities are affine/quadratic in n with
  // nonnegative leading growth, so validity at every n >= 0 reduces to
  // the n = 0 value plus nonpositive slope.
  return spec.p[0].is_zero() && spec.p[1] <= Rational(0) && spec.q[1] <= Rational(0) &&
         spec.q[0] * spec.q[0] <= Rational(-4) * spec.q[1];
}

Polynomial char_poly_matrix(const SymmetricMatrix& s) {
  const int d = s.dim();
  Matrix a = s.to_matrix();
  Matrix m = Matrix::identity(d);
  std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
  coeffs[static_cast<size_t>(d)] = 1;
  for (int k = 1; k <= d; ++k) {
    Matrix am = a * m;
    Rational c = -(am.trace() / Rational(k));
    coeffs[static_cast<size_t>(d - k)] = c;
    if (k < d) {
      m = am + Matrix::identity(d).scaled(c);
    }
  }
  Polynomial p{std::move(coeffs)};
  p.trim();
  return p;
}

EigenBound lambda_min_bound(const SymmetricMatrix& s, const Rational& tol) {
  if (tol <= Rational(0)) throw std::invalid_argument("lambda_min_bound: tol must be positive");
  const int d = s.dim();

  Polynomial chi = square_free_part(char_poly_matrix(s));
  SturmChain chain(chi);

  Rational radius;
  for (int i = 0; i < d; ++i) {
    Rational row_sum;
    for (int j = 0; j < d; ++j) row_sum += s.at(i, j).abs();
    radius = std::max(radius, row_sum);
  }
  // All eigenvalues lie in [-radius, radius]; widen so the endpoints are
  // strictly outside the spectrum.
  Rational lo = -radius - Rational(1);
  Rational hi = radius + Rational(1);

  while (hi - lo > tol) {
    Rational mid = (lo + hi) / Rational(2);
    if (chi.eval(mid).is_zero()) {
      // mid is itself an eigenvalue, hence an upper bound for the minimum.
      hi = mid;
      continue;
    }
    if (chain.count_roots_in(lo, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return EigenBound{lo, hi};
}

Rational default_eigen_tolerance() {
  return Rational(mpz_class(1), mpz_class(1) << 40);
}

long threshold_from_bounds(const Rational& q0_lower, const Rational& q1_lower) {
  if (q1_lower <= Rational(0)) {
    throw std::invalid_argument("threshold_from_bounds: q1 bound must be positive");
  }
  Rational deficit = std::max(Rational(0), -q0_lower);
  mpz_class n = (deficit / q1_lower).ceil() + 1;
  if (!n.fits_slong_p()) {
    throw std::overflow_error("threshold_from_bounds: threshold does not fit a long");
  }
  return n.get_si();
}

std::optional<long> threshold_N(const QFormPair& pair, const Rational& tol) {
  EigenBound b1 = lambda_min_bound(pair.q1, tol);
  if (b1.lower <= Rational(0)) return std::nullopt;
  EigenBound b0 = lambda_min_bound(pair.q0, tol);
  return threshold_from_bounds(b0.lower, b1.lower);
}

SymmetricMatrix build_R(const RecurrenceSpec& spec, long n) {
  if (n < 0) throw std::invalid_argument("build_R: n must be >= 0");
  QFormPair pair = build_qform(spec);
  Matrix pi = matrix_product_prefix(spec, n);
  Matrix qn = q_at(pair, spec.order - 1 + n).to_matrix();
  Matrix r = pi.transpose() * qn * pi;
  return SymmetricMatrix::from_matrix(r);
}

}  // namespace lcq
