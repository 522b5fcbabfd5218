#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcq/ell.hpp"
#include "lcq/polynomial.hpp"
#include "lcq/rational.hpp"
#include "lcq/recurrence.hpp"
#include "lcq/window.hpp"

namespace lcq {

/// A second-order recurrence a_{n+1} = alpha a_n + beta a_{n-1} with
/// initial data a_0 = a, a_1 = b.
struct ConstantSecondOrder {
  Rational alpha;
  Rational beta;
  Rational a;
  Rational b;

  Rational discriminant() const { return alpha * alpha + Rational(4) * beta; }
  RecurrenceSpec to_spec() const;
  /// Present iff the spec is second order with constant coefficients.
  static std::optional<ConstantSecondOrder> from_spec(const RecurrenceSpec& spec);
};

/// Characteristic-root classification with certified enclosures.
struct RootData {
  Rational discriminant;
  QuadRootKind kind = QuadRootKind::Complex;
  std::optional<RationalInterval> lambda1;  // larger root when real
  std::optional<RationalInterval> lambda2;  // smaller root when real
};

/// Roots of x^2 - alpha x - beta; enclosures of width <= 2^-30,
/// degenerate when the root is rational.
RootData roots_const(const ConstantSecondOrder& cs);

/// S = a b alpha - b^2 + a^2 beta, which equals AB (lambda1-lambda2)^2 for
/// the solution constants A, B; since the discriminant is positive,
/// sign(S) = sign(AB). Requires discriminant > 0.
Rational ab_product_sign(const ConstantSecondOrder& cs);

/// Closed form of the level-1 values for distinct real roots:
/// b_n = -productAB * mu^{n-1} * factorSq = -S * (-beta)^{n-1}.
struct ClosedFormLC {
  std::string coefficient_k;  // description of the geometric coefficient
  Rational mu;                // lambda1 * lambda2 = -beta
  Rational product_ab;        // AB = S / discriminant
  Rational factor_sq;         // (lambda1 - lambda2)^2 = discriminant

  Rational predicted_b(long n) const;  // n >= 1
};

ClosedFormLC closed_form_b(const ConstantSecondOrder& cs);

enum class Status { Proved, Refuted, Inconclusive };

const char* status_name(Status s);

/// The honest answer shape: a verdict plus its certificate. Proved names
/// the certifying theorem and the exact inequalities verified; Refuted
/// carries an exact witness.
struct Verdict {
  Status status = Status::Inconclusive;
  std::string statement;
  std::string theorem;
  std::vector<std::string> facts;
  std::optional<Witness> witness;
  std::string note;
};

/// Tight classification of constant-coefficient second-order sequences.
/// Distinct real roots: infinitely log-concave iff log-concave, decided
/// exactly from beta and S. Repeated or complex roots: inconclusive,
/// with oracle evidence attached.
Verdict classify_const(const ConstantSecondOrder& cs);

/// Membership of (a, b) in the cone of infinitely-log-concave initial
/// data (requires discriminant > 0 and beta < 0): in the cone iff S <= 0.
Verdict cone_membership(const ConstantSecondOrder& cs);

/// Residuals of the two fixed-point characterizations:
/// `direct` holds L(a)_n - a_n, `recurrence` holds
/// a_{n+2} a_{n-1} - a_{n+1} a_n - (a_{n+1} - a_n).
struct FixedPointResiduals {
  SequenceWindow direct;
  SequenceWindow recurrence;
};

FixedPointResiduals fixed_point_residuals(const SequenceWindow& window);

/// If the window is fixed by L within `tolerance`, infinite log-concavity
/// reduces to pointwise nonnegativity of the window itself.
Verdict classify_fixed(const SequenceWindow& window, const Rational& tolerance);

/// Coefficients of the limiting characteristic polynomial, descending:
/// (1, -p_0, ..., -p_{d-1}).
std::vector<Rational> char_poly(const RecurrenceSpec& spec);

/// Growth-exponent ladder of the L-iterates: 2 + 2^k (alpha - 2); satisfies
/// alpha^{(k+1)} = 2 alpha^{(k)} - 2.
Rational alpha_iterate(const Rational& alpha, long k);

/// Window diagnostics for the dominant-root reduction: characteristic
/// roots, positivity, Turan-ratio monotonicity, and a growth-exponent fit
/// of (1 - tau_n) against 1/n^2 over the last half of the window.
struct AsymptoticProfile {
  std::vector<Rational> char_poly_coeffs;  // descending
  QuadRootKind root_kind = QuadRootKind::Complex;
  std::optional<RationalInterval> dominant_root;
  std::optional<RationalInterval> second_root;
  bool roots_distinct_positive = false;  // hypothesis (a)
  bool all_terms_positive = false;       // hypothesis (b)
  bool tau_defined_everywhere = false;
  bool turan_monotone = false;  // hypothesis (c), weak increase
  bool tau_below_one = false;   // hypothesis (c), tau_n < 1 on the window
  double alpha_estimate = 0.0;
  bool alpha_estimate_valid = false;
};

/// Requires order 2 and window length >= 16.
AsymptoticProfile dominant_root_profile(const RecurrenceSpec& spec, const SequenceWindow& window);

/// Dominant-root reduction for order-2 recurrences: an oracle negative
/// refutes outright; with all window hypotheses verified, infinite
/// log-concavity reduces to log-concavity, which upgrades to Proved only
/// when a matrix argument covers the tail.
Verdict classify_prec(const RecurrenceSpec& spec, long horizon);

}  // namespace lcq
