#pragma once

#include <optional>
#include <vector>

#include "lcq/rational.hpp"
#include "lcq/recurrence.hpp"
#include "lcq/window.hpp"

namespace lcq {

/// One application of the log-concavity operator:
/// b_k = a_k^2 - a_{k+1} a_{k-1} on the interior of the window.
/// Output starts one index later and is two terms shorter.
SequenceWindow apply_L(const SequenceWindow& window);

/// i-fold application of apply_L; i = 0 returns the input unchanged.
SequenceWindow iterate_L(const SequenceWindow& window, int i);

/// tau_n = a_{n-1} a_{n+1} / a_n^2; nullopt when a_n = 0.
/// Throws when n-1, n, n+1 are not all inside the window.
std::optional<Rational> turan_ratio(const SequenceWindow& window, long n);

/// Smallest index holding a strictly negative term; zeros pass.
std::optional<long> first_violation(const SequenceWindow& window);

struct OracleLevel {
  int level = 0;
  SequenceWindow window;
  std::optional<long> first_negative;
};

/// Exact counterexample: the value of the `level`-th L-iterate at `index`
/// is strictly negative.
struct Witness {
  int level = 0;
  long index = 0;
  Rational value;
};

/// Exhaustive exact evidence: every level of L-iterates over a finite
/// horizon. A negative entry at level >= 1 is a mathematical certificate
/// of failure; a clean report is evidence for the examined window only.
struct OracleReport {
  int depth = 0;
  long horizon = 0;
  std::vector<OracleLevel> levels;

  /// First negative entry across levels 1..depth (level 0 is the
  /// sequence itself, whose sign is not a log-concavity statement).
  std::optional<Witness> first_refutation() const;
  /// First negative entry at a level >= min_level.
  std::optional<Witness> first_refutation_at_or_above(int min_level) const;
};

/// Generates a_0..a_horizon and applies L `depth` times, recording each
/// level and its first negative entry.
OracleReport oracle_inf_lc(const RecurrenceSpec& spec, int depth, long horizon);

inline constexpr int kDefaultOracleDepth = 4;
inline constexpr long kDefaultOracleHorizon = 64;

/// First interior index k with a_k^2 < r * a_{k+1} a_{k-1}, or nullopt
/// if the window is r-factor log-concave throughout its interior.
std::optional<long> r_factor_check(const SequenceWindow& window, const Rational& r);

/// Rational factor used to certify the irrational threshold (3+sqrt(5))/2:
/// 29/11 exceeds it since (2*29 - 3*11)^2 = 625 > 605 = 5*11^2.
inline const Rational kDefaultRFactor{29, 11};

/// Exact check that r >= (3+sqrt(5))/2, i.e. 2r-3 >= 0 and (2r-3)^2 >= 5.
bool certifies_r_threshold(const Rational& r);

}  // namespace lcq
