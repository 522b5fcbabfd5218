#include "lcq/ell.hpp"

#include <stdexcept>

namespace lcq {

SequenceWindow apply_L(const SequenceWindow& window) {
  if (window.size() < 3) throw std::invalid_argument("apply_L: window must hold at least 3 terms");
  SequenceWindow out;
  out.start = window.start + 1;
  out.terms.reserve(static_cast<size_t>(window.size() - 2));
  for (long n = window.start + 1; n <= window.last_index() - 1; ++n) {
    out.terms.push_back(window.at(n) * window.at(n) - window.at(n + 1) * window.at(n - 1));
  }
  return out;
}

SequenceWindow iterate_L(const SequenceWindow& window, int i) {
  if (i < 0) throw std::invalid_argument("iterate_L: i must be >= 0");
  if (window.size() < 2L * i + 1) {
    throw std::invalid_argument("iterate_L: window of length " + std::to_string(window.size()) +
                                " too short for " + std::to_string(i) + " applications");
  }
  SequenceWindow w = window;
  for (int k = 0; k < i; ++k) w = apply_L(w);
  return w;
}

std::optional<Rational> turan_ratio(const SequenceWindow& window, long n) {
  if (!window.contains(n - 1) || !window.contains(n + 1)) {
    throw std::out_of_range("turan_ratio: indices " + std::to_string(n - 1) + ".." +
                            std::to_string(n + 1) + " not all inside the window");
  }
  const Rational& an = window.at(n);
  if (an.is_zero()) return std::nullopt;
  return window.at(n - 1) * window.at(n + 1) / (an * an);
}

std::optional<long> first_violation(const SequenceWindow& window) {
  for (long i = window.start; i <= window.last_index(); ++i) {
    if (window.at(i).sign() < 0) return i;
  }
  return std::nullopt;
}

std::optional<Witness> OracleReport::first_refutation() const {
  return first_refutation_at_or_above(1);
}

std::optional<Witness> OracleReport::first_refutation_at_or_above(int min_level) const {
  for (const OracleLevel& lvl : levels) {
    if (lvl.level < min_level) continue;
    if (lvl.first_negative) {
      return Witness{lvl.level, *lvl.first_negative, lvl.window.at(*lvl.first_negative)};
    }
  }
  return std::nullopt;
}

OracleReport oracle_inf_lc(const RecurrenceSpec& spec, int depth, long horizon) {
  if (depth < 1) throw std::invalid_argument("oracle: depth must be >= 1");
  if (horizon < spec.order - 1 + 2L * depth) {
    throw std::invalid_argument("oracle: horizon " + std::to_string(horizon) +
                                " too small for depth " + std::to_string(depth) + " (need >= " +
                                std::to_string(spec.order - 1 + 2L * depth) + ")");
  }
  OracleReport report;
  report.depth = depth;
  report.horizon = horizon;
  SequenceWindow w = generate(spec, horizon);
  report.levels.push_back(OracleLevel{0, w, first_violation(w)});
  for (int i = 1; i <= depth; ++i) {
    w = apply_L(w);
    report.levels.push_back(OracleLevel{i, w, first_violation(w)});
  }
  return report;
}

std::optional<long> r_factor_check(const SequenceWindow& window, const Rational& r) {
  if (window.size() < 3) {
    throw std::invalid_argument("r_factor_check: window must hold at least 3 terms");
  }
  for (long k = window.start + 1; k <= window.last_index() - 1; ++k) {
    if (window.at(k) * window.at(k) < r * window.at(k + 1) * window.at(k - 1)) return k;
  }
  return std::nullopt;
}

bool certifies_r_threshold(const Rational& r) {
  Rational t = Rational(2) * r - Rational(3);
  return t >= Rational(0) && t * t >= Rational(5);
}

}  // namespace lcq
