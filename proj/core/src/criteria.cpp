#include "lcq/criteria.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcq/qform.hpp"

namespace lcq {

RecurrenceSpec ConstantSecondOrder::to_spec() const {
  RecurrenceSpec spec;
  spec.order = 2;
  spec.p = {Rational(0), Rational(0)};
  spec.q = {alpha, beta};
  spec.initial = {a, b};
  return spec;
}

std::optional<ConstantSecondOrder> ConstantSecondOrder::from_spec(const RecurrenceSpec& spec) {
  if (spec.order != 2 || !spec.constant_coefficients()) return std::nullopt;
  return ConstantSecondOrder{spec.q[0], spec.q[1], spec.initial[0], spec.initial[1]};
}

RootData roots_const(const ConstantSecondOrder& cs) {
  QuadRoots qr = quadratic_roots(cs.alpha, cs.beta, default_enclosure_width());
  RootData rd;
  rd.discriminant = qr.discriminant;
  rd.kind = qr.kind;
  if (!qr.roots.empty()) {
    rd.lambda1 = qr.roots[0];
    rd.lambda2 = qr.roots[1];
  }
  return rd;
}

Rational ab_product_sign(const ConstantSecondOrder& cs) {
  if (cs.discriminant() <= Rational(0)) {
    throw std::invalid_argument("ab_product_sign: requires a positive discriminant");
  }
  return cs.a * cs.b * cs.alpha - cs.b * cs.b + cs.a * cs.a * cs.beta;
}

Rational ClosedFormLC::predicted_b(long n) const {
  if (n < 1) throw std::invalid_argument("predicted_b: n must be >= 1");
  return -(product_ab * factor_sq) * Rational::pow(mu, n - 1);
}

ClosedFormLC closed_form_b(const ConstantSecondOrder& cs) {
  Rational d = cs.discriminant();
  if (d <= Rational(0)) {
    throw std::invalid_argument("closed_form_b: requires a positive discriminant");
  }
  Rational s = ab_product_sign(cs);
  ClosedFormLC cf;
  cf.mu = -cs.beta;
  cf.product_ab = s / d;
  cf.factor_sq = d;
  cf.coefficient_k = "-(AB) * mu^-1 * (lambda1-lambda2)^2 with AB = " + cf.product_ab.str() +
                     ", mu = " + cf.mu.str() + ", (lambda1-lambda2)^2 = " + cf.factor_sq.str();
  return cf;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Proved: return "proved";
    case Status::Refuted: return "refuted";
    case Status::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict classify_const(const ConstantSecondOrder& cs) {
  Verdict v;
  v.statement = "infinitely log-concave";
  Rational d = cs.discriminant();

  if (d.sign() <= 0) {
    v.status = Status::Inconclusive;
    v.theorem = "";
    v.note = d.sign() == 0
                 ? "tight constant-coefficient criterion needs distinct roots; discriminant is 0"
                 : "tight constant-coefficient criterion needs real roots; discriminant is negative";
    v.facts.push_back("discriminant = " + d.str());
    OracleReport evidence = oracle_inf_lc(cs.to_spec(), 3, 40);
    if (auto w = evidence.first_refutation()) {
      v.facts.push_back("oracle evidence: L^" + std::to_string(w->level) + " at index " +
                        std::to_string(w->index) + " is " + w->value.str());
    } else {
      v.facts.push_back("oracle evidence: no negative value through depth 3, horizon 40");
    }
    return v;
  }

  Rational s = ab_product_sign(cs);
  const bool pure_power = s.is_zero();
  const bool beta_negative_route = cs.beta < Rational(0) && s <= Rational(0);
  // beta = 0 degenerates one root to zero: b_1 = -S and b_n = 0 afterwards,
  // so S < 0 still yields a nonnegative level 1.
  const bool beta_zero_route = cs.beta.is_zero() && s < Rational(0);

  if (pure_power || beta_negative_route || beta_zero_route) {
    v.status = Status::Proved;
    v.theorem = "thm:tight-constant";
    v.facts.push_back("discriminant = " + d.str() + " > 0");
    if (pure_power) {
      v.facts.push_back("S = 0: level 1 is identically zero (pure power)");
    } else if (beta_negative_route) {
      v.facts.push_back("beta = " + cs.beta.str() + " < 0");
      v.facts.push_back("S = " + s.str() + " <= 0");
    } else {
      v.facts.push_back("beta = 0 and S = " + s.str() + " < 0: b_1 = " + (-s).str() +
                        " > 0 and b_n = 0 for n >= 2");
    }
    v.facts.push_back("level 2 of L is identically zero; all deeper levels vanish");
    return v;
  }

  v.status = Status::Refuted;
  v.theorem = "thm:tight-constant";
  v.facts.push_back("discriminant = " + d.str() + " > 0");
  v.facts.push_back("beta = " + cs.beta.str() + ", S = " + s.str());
  OracleReport o = oracle_inf_lc(cs.to_spec(), 1, 16);
  auto w = o.first_refutation();
  if (!w) {
    throw std::logic_error("classify_const: refutation expected but oracle found none");
  }
  v.witness = *w;
  return v;
}

Verdict cone_membership(const ConstantSecondOrder& cs) {
  Verdict v;
  v.statement = "initial data in the infinite-log-concavity cone";
  Rational d = cs.discriminant();
  if (d.sign() <= 0 || cs.beta >= Rational(0)) {
    v.status = Status::Inconclusive;
    v.note = "cone criterion requires discriminant > 0 and beta < 0; got discriminant = " +
             d.str() + ", beta = " + cs.beta.str();
    return v;
  }
  Rational s = ab_product_sign(cs);
  v.theorem = "cor:cone";
  v.status = Status::Proved;
  if (s <= Rational(0)) {
    v.facts.push_back("S = " + s.str() + " <= 0: inside the cone (boundary counts as inside)");
  } else {
    v.statement = "initial data outside the infinite-log-concavity cone";
    v.facts.push_back("S = " + s.str() +
                      " > 0: b/a lies strictly between the roots, outside the cone");
  }
  return v;
}

FixedPointResiduals fixed_point_residuals(const SequenceWindow& window) {
  if (window.size() < 4) {
    throw std::invalid_argument("fixed_point_residuals: window must hold at least 4 terms");
  }
  FixedPointResiduals out;
  SequenceWindow b = apply_L(window);
  out.direct.start = b.start;
  for (long n = b.start; n <= b.last_index(); ++n) {
    out.direct.terms.push_back(b.at(n) - window.at(n));
  }
  out.recurrence.start = window.start + 1;
  for (long n = window.start + 1; n <= window.last_index() - 2; ++n) {
    out.recurrence.terms.push_back(window.at(n + 2) * window.at(n - 1) -
                                   window.at(n + 1) * window.at(n) -
                                   (window.at(n + 1) - window.at(n)));
  }
  return out;
}

namespace {

Rational max_abs(const SequenceWindow& w) {
  Rational m;
  for (const Rational& t : w.terms) m = std::max(m, t.abs());
  return m;
}

}  // namespace

Verdict classify_fixed(const SequenceWindow& window, const Rational& tolerance) {
  if (tolerance < Rational(0)) throw std::invalid_argument("classify_fixed: negative tolerance");
  Verdict v;
  v.statement = "infinitely log-concave (L-fixed window)";
  FixedPointResiduals res = fixed_point_residuals(window);
  Rational direct_defect = max_abs(res.direct);
  Rational recurrence_defect = max_abs(res.recurrence);
  v.facts.push_back("max |L(a)_n - a_n| = " + direct_defect.str());
  v.facts.push_back("max four-term recurrence defect = " + recurrence_defect.str());

  if (direct_defect <= tolerance) {
    v.theorem = "thm:fixed-point";
    for (long n = window.start; n <= window.last_index(); ++n) {
      if (window.at(n) < -tolerance) {
        v.status = Status::Refuted;
        v.witness = Witness{1, n, window.at(n)};
        v.note = "window is fixed by L, so every iterate equals the window; a negative term "
                 "can never become nonnegative";
        return v;
      }
    }
    v.status = Status::Proved;
    v.facts.push_back("window is fixed by L and pointwise nonnegative");
    v.note = "certificate covers the examined window";
    return v;
  }

  v.status = Status::Inconclusive;
  v.note = "window is not fixed by L within tolerance " + tolerance.str();
  // Flag the structural observation that L maps the window to a
  // (near-)constant sequence, which contradicts the fixed-point
  // characterization for cosine/hyperbolic-cosine windows.
  SequenceWindow b = apply_L(window);
  Rational bmin = b.terms.front(), bmax = b.terms.front();
  for (const Rational& t : b.terms) {
    bmin = std::min(bmin, t);
    bmax = std::max(bmax, t);
  }
  if (bmax - bmin <= tolerance + tolerance) {
    v.note += "; L maps the window to the constant " + b.terms.front().str() +
              " (approx " + b.terms.front().decimal(6) +
              "), not to the window itself - the fixed-point characterization does not hold "
              "for this window as computed";
  }
  return v;
}

std::vector<Rational> char_poly(const RecurrenceSpec& spec) {
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<size_t>(spec.order) + 1);
  coeffs.push_back(Rational(1));
  for (const Rational& pk : spec.p) coeffs.push_back(-pk);
  return coeffs;
}

Rational alpha_iterate(const Rational& alpha, long k) {
  if (k < 0) throw std::invalid_argument("alpha_iterate: k must be >= 0");
  mpz_class two_k = mpz_class(1) << static_cast<unsigned long>(k);
  return Rational(2) + Rational(two_k) * (alpha - Rational(2));
}

AsymptoticProfile dominant_root_profile(const RecurrenceSpec& spec, const SequenceWindow& window) {
  if (spec.order != 2) {
    throw std::invalid_argument("dominant_root_profile: order must be 2");
  }
  if (window.size() < 16) {
    throw std::invalid_argument("dominant_root_profile: window must hold at least 16 terms");
  }
  AsymptoticProfile prof;
  prof.char_poly_coeffs = char_poly(spec);
  QuadRoots qr = quadratic_roots(spec.p[0], spec.p[1], default_enclosure_width());
  prof.root_kind = qr.kind;
  if (!qr.roots.empty()) {
    prof.dominant_root = qr.roots[0];
    prof.second_root = qr.roots[1];
  }
  prof.roots_distinct_positive =
      qr.kind == QuadRootKind::DistinctReal && qr.roots[1].lo > Rational(0);

  prof.all_terms_positive = true;
  for (const Rational& t : window.terms) {
    if (t.sign() <= 0) {
      prof.all_terms_positive = false;
      break;
    }
  }

  std::vector<std::pair<long, Rational>> taus;  // (index, tau_n)
  prof.tau_defined_everywhere = true;
  for (long n = window.start + 1; n <= window.last_index() - 1; ++n) {
    auto tau = turan_ratio(window, n);
    if (!tau) {
      prof.tau_defined_everywhere = false;
      break;
    }
    taus.emplace_back(n, *tau);
  }

  if (prof.tau_defined_everywhere && !taus.empty()) {
    prof.turan_monotone = true;
    prof.tau_below_one = true;
    for (size_t i = 0; i < taus.size(); ++i) {
      if (taus[i].second >= Rational(1)) prof.tau_below_one = false;
      if (i > 0 && taus[i].second < taus[i - 1].second) prof.turan_monotone = false;
    }
    // Fit (1 - tau_n) = alpha / n^2 through the origin over the last half
    // of the window; display-only estimate.
    double sxx = 0.0, sxy = 0.0;
    size_t begin = taus.size() / 2;
    for (size_t i = begin; i < taus.size(); ++i) {
      long n = taus[i].first;
      if (n < 1) continue;
      double x = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
      double y = (Rational(1) - taus[i].second).to_double();
      sxx += x * x;
      sxy += x * y;
    }
    if (sxx > 0.0) {
      prof.alpha_estimate = sxy / sxx;
      prof.alpha_estimate_valid = true;
    }
  }
  return prof;
}

Verdict classify_prec(const RecurrenceSpec& spec, long horizon) {
  if (spec.order != 2) throw std::invalid_argument("classify_prec: order must be 2");
  Verdict v;
  v.statement = "infinitely log-concave";

  OracleReport oracle = oracle_inf_lc(spec, 1, horizon);
  if (auto w = oracle.first_refutation()) {
    v.status = Status::Refuted;
    v.witness = *w;
    v.note = "log-concavity is necessary, and the oracle exhibits an exact negative value";
    return v;
  }

  AsymptoticProfile prof = dominant_root_profile(spec, oracle.levels[0].window);
  auto fail = [&](const std::string& which) {
    v.status = Status::Inconclusive;
    v.note = "hypothesis " + which + " fails; oracle found no negative value through depth " +
             std::to_string(oracle.depth) + ", horizon " + std::to_string(oracle.horizon);
  };
  if (!prof.roots_distinct_positive) {
    fail("(a): two real characteristic roots with the smaller one positive");
    return v;
  }
  if (!prof.all_terms_positive) {
    fail("(b): strict positivity of all window terms");
    return v;
  }
  if (!prof.tau_defined_everywhere || !prof.turan_monotone || !prof.tau_below_one) {
    fail("(c): Turan ratio weakly increasing and below 1 on the window");
    return v;
  }

  v.facts.push_back("hypotheses (a)-(c) verified on the window");
  // The reduction applies; a Proved verdict still needs the tail covered
  // by a matrix argument.
  QFormPair pair = build_qform(spec);
  bool tail_covered = d2_psd_for_all_n(spec);
  std::string tail_how = "closed-form PSD for all n >= 0";
  if (!tail_covered) {
    if (auto n_threshold = threshold_N(pair, default_eigen_tolerance())) {
      bool head_ok = true;
      for (long n = 1; n < *n_threshold; ++n) {
        if (!psd_exact(q_at(pair, n)).psd) {
          head_ok = false;
          break;
        }
      }
      tail_covered = head_ok;
      tail_how = "eigenvalue threshold N = " + std::to_string(*n_threshold) +
                 " with exact PSD checks below N";
    }
  }
  if (tail_covered) {
    v.status = Status::Proved;
    v.theorem = "thm:tight-prec";
    v.facts.push_back("log-concavity certified for all n via " + tail_how);
    return v;
  }
  v.status = Status::Inconclusive;
  v.note = "hypotheses verified and the oracle is clean on the window, but no matrix argument "
           "covers the tail; evidence only";
  return v;
}

}  // namespace lcq
