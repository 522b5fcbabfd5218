#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcq/criteria.hpp"
#include "lcq/ell.hpp"
#include "lcq/recurrence.hpp"

namespace lcq {

struct AnalyzeOptions {
  int depth = kDefaultOracleDepth;
  long horizon = kDefaultOracleHorizon;
  bool parallel = false;
};

/// An expected-value assertion embedded in a spec file as a comment of the
/// form `# claim: L<level>[<index>] <op> <value>`, used to audit stated
/// values against exact computation.
struct Claim {
  int level = 0;
  long index = 0;
  std::string op;  // one of < <= = == >= >
  Rational value;
  std::string text;  // normalized rendering
};

/// Extracts `# claim:` comments; throws ParseError on malformed claims.
std::vector<Claim> parse_claims(std::string_view text);

struct ErratumNote {
  std::string location;        // e.g. "L1[4]"
  std::string paper_stated;    // the claim as written
  std::string computed_exact;  // the exact value found
  std::string status;          // "contradicted" or "unverifiable"
};

struct CriterionResult {
  std::string name;
  bool applicable = false;
  Verdict verdict;
};

struct PropertyConclusion {
  Status status = Status::Inconclusive;
  std::string via;  // criterion name, or "oracle" for refutations
  std::string detail;
  std::optional<Witness> witness;
};

/// Aggregated result of one analysis run. The overall conclusions follow
/// the strongest sound rule: Refuted requires an exact negative witness,
/// Proved requires a certificate covering every index.
struct AnalysisReport {
  RecurrenceSpec spec;
  int depth = 0;
  long horizon = 0;
  OracleReport oracle;
  std::vector<CriterionResult> criteria;
  PropertyConclusion log_concave;
  PropertyConclusion inf_log_concave;
  std::vector<ErratumNote> errata;
};

AnalysisReport analyze(const RecurrenceSpec& spec, const std::vector<Claim>& claims,
                       const AnalyzeOptions& options);

/// Deterministic serializations: fixed key order, canonical rational
/// strings, approximations marked as such.
std::string report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

std::string oracle_to_json(const RecurrenceSpec& spec, const OracleReport& report);
std::string oracle_to_text(const RecurrenceSpec& spec, const OracleReport& report);

std::string generate_to_json(const RecurrenceSpec& spec, const SequenceWindow& window);
std::string generate_to_text(const SequenceWindow& window);

/// Grid of S = a b alpha - b^2 + a^2 beta over [-range, range]^2 in steps
/// of `step`; a point is in the cone iff S <= 0. Requires beta < 0 and a
/// positive discriminant. Rows are `a b in_cone S`.
std::string cone_grid(const Rational& alpha, const Rational& beta, const Rational& range,
                      const Rational& step);

}  // namespace lcq
