#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcq/matrix.hpp"
#include "lcq/rational.hpp"
#include "lcq/window.hpp"

namespace lcq {

inline constexpr int kMaxOrder = 10;
inline constexpr long kMaxGenerate = 100000;

/// A linear recurrence a_{n+1} = sum_k (p_k n + q_k) a_{n-k} for n >= d-1,
/// together with its initial data a_0..a_{d-1}.
struct RecurrenceSpec {
  int order = 0;
  std::vector<Rational> p;
  std::vector<Rational> q;
  std::vector<Rational> initial;

  bool constant_coefficients() const;
};

/// Parse failure with the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses the plain-text spec format. Assignments `order=..`, `p=[..]`,
/// `q=[..]`, `initial=[..]` separated by `;` or newlines, `#` starts a
/// comment, whitespace is insignificant. Values are integers or `p/q`.
RecurrenceSpec parse_spec(std::string_view text);

/// Coefficient matrices of the companion system: the step matrix is nA + B.
/// A carries the p coefficients in its first row; B carries the q
/// coefficients in its first row and ones on the subdiagonal, so that
/// (nA + B) (a_n, ..., a_{n-d+1})^T = (a_{n+1}, ..., a_{n-d+2})^T.
std::pair<Matrix, Matrix> companion_pair(const RecurrenceSpec& spec);

/// nA + B for a single step index n >= 0.
Matrix companion_at(const RecurrenceSpec& spec, long n);

/// a_0..a_upTo by exact forward iteration; up_to in [d-1, kMaxGenerate].
SequenceWindow generate(const RecurrenceSpec& spec, long up_to);

/// (a_n, a_{n-1}, ..., a_{n-d+1}); all d indices must lie in the window.
std::vector<Rational> state_vector(const SequenceWindow& window, long n, int order);

/// Product of the first n step matrices anchored at the first full state:
/// the result maps (a_{d-1},...,a_0)^T to (a_{d-1+n},...)^T.
/// n = 0 gives the identity.
Matrix matrix_product_prefix(const RecurrenceSpec& spec, long n);

}  // namespace lcq
