#pragma once

#include <optional>
#include <vector>

#include "lcq/matrix.hpp"
#include "lcq/polynomial.hpp"
#include "lcq/rational.hpp"
#include "lcq/recurrence.hpp"

namespace lcq {

/// Exactly symmetric d x d matrix; upper triangle stored.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int dim)
      : dim_(dim), e_(static_cast<size_t>(dim) * (dim + 1) / 2) {}

  /// Reads the upper triangle of m; throws if m is not exactly symmetric.
  static SymmetricMatrix from_matrix(const Matrix& m);

  int dim() const { return dim_; }
  const Rational& at(int i, int j) const { return e_[index(i, j)]; }
  void set(int i, int j, const Rational& v) { e_[index(i, j)] = v; }

  Matrix to_matrix() const;
  SymmetricMatrix operator+(const SymmetricMatrix& o) const;
  SymmetricMatrix scaled(const Rational& c) const;

  /// v^T S v.
  Rational quadratic(const std::vector<Rational>& v) const;

  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }

 private:
  size_t index(int i, int j) const;
  int dim_;
  std::vector<Rational> e_;
};

/// The pair (Q0, Q1) with Q_n = Q0 + n Q1 and b_n = v_n^T Q_n v_n.
struct QFormPair {
  SymmetricMatrix q0;
  SymmetricMatrix q1;
  int order;
};

/// Builds the quadratic-form pair from the companion matrices:
/// Q0 = e1 e1^T - (B^T e1 e2^T + e2 e1^T B)/2,
/// Q1 = -(A^T e1 e2^T + e2 e1^T A)/2.
/// Rejects order 1 (there is no second basis vector).
QFormPair build_qform(const RecurrenceSpec& spec);

/// Q0 + n Q1.
SymmetricMatrix q_at(const QFormPair& pair, long n);

/// v^T (Q0 + n Q1) v; v must have length `order`.
Rational quadratic_value(const QFormPair& pair, const std::vector<Rational>& v, long n);

/// Outcome of the exact positive-semidefiniteness test. When it fails,
/// `violating_minor` lists the (0-based) row/column subset whose principal
/// minor is negative.
struct PsdResult {
  bool psd = false;
  std::vector<int> violating_minor;
  Rational minor_value;
};

/// Exact PSD decision by nonnegativity of all 2^d - 1 principal minors.
PsdResult psd_exact(const SymmetricMatrix& s);

/// Closed-form PSD test for order 2 at a single n:
/// (n p1 + q1) <= 0 and (n p0 + q0)^2 <= -4 (n p1 + q1).
bool d2_psd_condition(const RecurrenceSpec& spec, long n);

/// Whether the order-2 closed form holds for every integer n >= 0:
/// p0 = 0, p1 <= 0, q1 <= 0 and q0^2 <= -4 q1.
bool d2_psd_for_all_n(const RecurrenceSpec& spec);

/// Certified bracket lower <= lambda_min(S) <= upper with
/// upper - lower <= tol.
struct EigenBound {
  Rational lower;
  Rational upper;
};

/// Brackets the minimum eigenvalue by exact-sign bisection of the
/// characteristic polynomial (Sturm root counting), starting from the
/// Gershgorin bound.
EigenBound lambda_min_bound(const SymmetricMatrix& s, const Rational& tol);

/// 2^-40, the default eigenvalue bracketing tolerance.
Rational default_eigen_tolerance();

/// Exact characteristic polynomial det(xI - S) via the Faddeev-LeVerrier
/// recursion.
Polynomial char_poly_matrix(const SymmetricMatrix& s);

/// The threshold formula on its own: N = ceil(max(0, -q0_lower) / q1_lower) + 1.
/// Requires q1_lower > 0.
long threshold_from_bounds(const Rational& q0_lower, const Rational& q1_lower);

/// Index N such that Q_n is PSD for every n >= N, from certified
/// eigenvalue bounds via threshold_from_bounds. Returns nullopt when
/// lambda_min(Q1) cannot be certified positive.
std::optional<long> threshold_N(const QFormPair& pair, const Rational& tol);

/// R_n = Pi_n^T Q_{d-1+n} Pi_n, anchored at the first full state vector:
/// v_{d-1}^T R_n v_{d-1} = b_{d-1+n}.
SymmetricMatrix build_R(const RecurrenceSpec& spec, long n);

}  // namespace lcq
