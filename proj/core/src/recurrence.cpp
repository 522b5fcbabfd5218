#include "lcq/recurrence.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace lcq {

namespace {

std::string strip_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::vector<Rational> parse_list(const std::string& value, int line) {
  if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
    throw ParseError(line, "expected a bracketed list, got '" + value + "'");
  }
  std::string body = value.substr(1, value.size() - 2);
  std::vector<Rational> out;
  if (body.empty()) return out;
  size_t pos = 0;
  while (true) {
    size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto r = Rational::parse(item);
    if (!r) {
      throw ParseError(line, "invalid rational '" + item + "' (use p or p/q with q > 0)");
    }
    out.push_back(*r);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

bool RecurrenceSpec::constant_coefficients() const {
  return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.is_zero(); });
}

RecurrenceSpec parse_spec(std::string_view text) {
  struct Field {
    std::string value;
    int line;
  };
  std::map<std::string, Field> fields;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    // Statements on a line are separated by ';'.
    size_t stmt_pos = 0;
    while (stmt_pos <= line.size()) {
      size_t semi = line.find(';', stmt_pos);
      std::string_view stmt_view =
          line.substr(stmt_pos, semi == std::string_view::npos ? std::string_view::npos : semi - stmt_pos);
      std::string stmt = strip_ws(stmt_view);
      if (!stmt.empty()) {
        size_t eq = stmt.find('=');
        if (eq == std::string::npos) {
          throw ParseError(line_no, "expected 'key = value', got '" + stmt + "'");
        }
        std::string key = stmt.substr(0, eq);
        std::string value = stmt.substr(eq + 1);
        if (key != "order" && key != "p" && key != "q" && key != "initial") {
          throw ParseError(line_no, "unknown key '" + key + "'");
        }
        if (fields.count(key)) {
          throw ParseError(line_no, "duplicate assignment of '" + key + "'");
        }
        fields[key] = Field{value, line_no};
      }
      if (semi == std::string_view::npos) break;
      stmt_pos = semi + 1;
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  for (const char* key : {"order", "p", "q", "initial"}) {
    if (!fields.count(key)) {
      throw ParseError(line_no, std::string("missing assignment of '") + key + "'");
    }
  }

  RecurrenceSpec spec;
  {
    const Field& f = fields["order"];
    auto r = Rational::parse(f.value);
    if (!r || !r->is_integer()) {
      throw ParseError(f.line, "order must be an integer, got '" + f.value + "'");
    }
    mpz_class d = r->numerator();
    if (d < 1 || d > kMaxOrder) {
      throw ParseError(f.line, "order must be in [1, " + std::to_string(kMaxOrder) + "], got " + d.get_str());
    }
    spec.order = static_cast<int>(d.get_si());
  }
  spec.p = parse_list(fields["p"].value, fields["p"].line);
  spec.q = parse_list(fields["q"].value, fields["q"].line);
  spec.initial = parse_list(fields["initial"].value, fields["initial"].line);

  auto check_len = [&](const char* key, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != spec.order) {
      throw ParseError(fields[key].line, std::string("'") + key + "' must list exactly " +
                                             std::to_string(spec.order) + " values, got " +
                                             std::to_string(v.size()));
    }
  };
  check_len("p", spec.p);
  check_len("q", spec.q);
  check_len("initial", spec.initial);
  return spec;
}

std::pair<Matrix, Matrix> companion_pair(const RecurrenceSpec& spec) {
  const int d = spec.order;
  Matrix a(d, d), b(d, d);
  for (int j = 0; j < d; ++j) {
    a.at(0, j) = spec.p[j];
    b.at(0, j) = spec.q[j];
  }
  for (int i = 1; i < d; ++i) b.at(i, i - 1) = 1;
  return {a, b};
}

Matrix companion_at(const RecurrenceSpec& spec, long n) {
  if (n < 0) throw std::invalid_argument("companion_at: n must be >= 0");
  const int d = spec.order;
  Matrix m(d, d);
  for (int j = 0; j < d; ++j) {
    m.at(0, j) = spec.p[j] * Rational(n) + spec.q[j];
  }
  for (int i = 1; i < d; ++i) m.at(i, i - 1) = 1;
  return m;
}

SequenceWindow generate(const RecurrenceSpec& spec, long up_to) {
  const int d = spec.order;
  if (up_to < d - 1) throw std::invalid_argument("generate: up_to must be >= order - 1");
  if (up_to > kMaxGenerate) {
    throw std::invalid_argument("generate: up_to exceeds the " + std::to_string(kMaxGenerate) +
                                " term bound");
  }
  SequenceWindow w;
  w.start = 0;
  w.terms = spec.initial;
  w.terms.reserve(static_cast<size_t>(up_to) + 1);
  for (long n = d - 1; n + 1 <= up_to; ++n) {
    Rational next;
    for (int k = 0; k < d; ++k) {
      next += (spec.p[k] * Rational(n) + spec.q[k]) * w.terms[static_cast<size_t>(n - k)];
    }
    w.terms.push_back(next);
  }
  return w;
}

std::vector<Rational> state_vector(const SequenceWindow& window, long n, int order) {
  if (order < 1) throw std::invalid_argument("state_vector: order must be >= 1");
  if (!window.contains(n) || !window.contains(n - order + 1)) {
    throw std::out_of_range("state_vector: indices " + std::to_string(n - order + 1) + ".." +
                            std::to_string(n) + " not all inside the window");
  }
  std::vector<Rational> v(static_cast<size_t>(order));
  for (int i = 0; i < order; ++i) v[static_cast<size_t>(i)] = window.at(n - i);
  return v;
}

Matrix matrix_product_prefix(const RecurrenceSpec& spec, long n) {
  if (n < 0) throw std::invalid_argument("matrix_product_prefix: n must be >= 0");
  const int d = spec.order;
  Matrix prod = Matrix::identity(d);
  for (long j = 0; j < n; ++j) {
    prod = companion_at(spec, d - 1 + j) * prod;
  }
  return prod;
}

}  // namespace lcq
