#include "lcq/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "lcq/qform.hpp"

namespace lcq {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool compare(const Rational& lhs, const std::string& op, const Rational& rhs) {
  if (op == "<") return lhs < rhs;
  if (op == "<=") return lhs <= rhs;
  if (op == "=" || op == "==") return lhs == rhs;
  if (op == ">=") return lhs >= rhs;
  if (op == ">") return lhs > rhs;
  throw std::invalid_argument("unknown comparison operator '" + op + "'");
}

}  // namespace

std::vector<Claim> parse_claims(std::string_view text) {
  std::vector<Claim> claims;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      std::string comment = trim(line.substr(hash + 1));
      if (comment.rfind("claim:", 0) == 0) {
        std::string body = trim(std::string_view(comment).substr(6));
        // Form: L<level>[<index>] <op> <value>
        std::istringstream in(body);
        std::string lhs, op, value;
        if (!(in >> lhs >> op >> value)) {
          throw ParseError(line_no, "malformed claim '" + body + "'");
        }
        std::string rest;
        if (in >> rest) throw ParseError(line_no, "trailing text in claim '" + body + "'");
        if (lhs.size() < 4 || lhs[0] != 'L' || lhs.back() != ']') {
          throw ParseError(line_no, "claim target must look like L<level>[<index>]");
        }
        size_t lb = lhs.find('[');
        if (lb == std::string::npos) {
          throw ParseError(line_no, "claim target must look like L<level>[<index>]");
        }
        Claim c;
        try {
          c.level = std::stoi(lhs.substr(1, lb - 1));
          c.index = std::stol(lhs.substr(lb + 1, lhs.size() - lb - 2));
        } catch (const std::exception&) {
          throw ParseError(line_no, "claim target must use integer level and index");
        }
        auto v = Rational::parse(value);
        if (!v) throw ParseError(line_no, "claim value must be a rational, got '" + value + "'");
        c.op = op;
        c.value = *v;
        c.text = "L" + std::to_string(c.level) + "[" + std::to_string(c.index) + "] " + op + " " +
                 v->str();
        compare(Rational(0), op, Rational(0));  // validates the operator
        claims.push_back(std::move(c));
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return claims;
}

namespace {

CriterionResult not_applicable(const std::string& name, const std::string& why) {
  CriterionResult r;
  r.name = name;
  r.applicable = false;
  r.verdict.status = Status::Inconclusive;
  r.verdict.note = "not applicable: " + why;
  return r;
}

CriterionResult qform_pointwise(const RecurrenceSpec& spec, long horizon) {
  if (spec.order < 2) return not_applicable("qform-pointwise-psd", "order 1 has no quadratic form");
  CriterionResult r;
  r.name = "qform-pointwise-psd";
  r.applicable = true;
  r.verdict.statement = "log-concave";
  QFormPair pair = build_qform(spec);
  std::optional<long> first_not_psd;
  for (long n = spec.order - 1; n <= horizon; ++n) {
    PsdResult p = psd_exact(q_at(pair, n));
    if (!p.psd) {
      first_not_psd = n;
      break;
    }
  }
  r.verdict.status = Status::Inconclusive;
  r.verdict.theorem = "thm:log-concavity-criterion(ii)";
  if (!first_not_psd) {
    r.verdict.facts.push_back("Q_n is PSD for every n in [" + std::to_string(spec.order - 1) +
                              ", " + std::to_string(horizon) + "]");
    r.verdict.note = "pointwise certificate for the scanned range only; PSD is sufficient, "
                     "not necessary";
  } else {
    r.verdict.facts.push_back("Q_n is not PSD at n = " + std::to_string(*first_not_psd));
    r.verdict.note = "PSD is sufficient, not necessary: no conclusion from a failed scan";
  }
  return r;
}

CriterionResult threshold_criterion(const RecurrenceSpec& spec) {
  if (spec.order < 2) return not_applicable("threshold-N", "order 1 has no quadratic form");
  CriterionResult r;
  r.name = "threshold-N";
  r.applicable = true;
  r.verdict.statement = "log-concave";
  r.verdict.theorem = "thm:log-concavity-criterion(iii)";
  QFormPair pair = build_qform(spec);
  auto n_threshold = threshold_N(pair, default_eigen_tolerance());
  if (!n_threshold) {
    r.verdict.status = Status::Inconclusive;
    r.verdict.note = "lambda_min(Q1) cannot be certified positive (its leading diagonal entry "
                     "is 0 for every companion-derived pair), so no threshold exists";
    return r;
  }
  bool head_ok = true;
  long first_bad = -1;
  for (long n = spec.order - 1; n < *n_threshold; ++n) {
    if (!psd_exact(q_at(pair, n)).psd) {
      head_ok = false;
      first_bad = n;
      break;
    }
  }
  r.verdict.facts.push_back("Q_n is PSD for all n >= N = " + std::to_string(*n_threshold));
  if (head_ok) {
    r.verdict.status = Status::Proved;
    r.verdict.statement = "log-concave (quadratic form nonnegative for all state vectors, n >= " +
                          std::to_string(spec.order - 1) + ")";
    r.verdict.facts.push_back("exact PSD checks cover " + std::to_string(spec.order - 1) +
                              " <= n < N");
  } else {
    r.verdict.status = Status::Inconclusive;
    r.verdict.facts.push_back("Q_n is not PSD at n = " + std::to_string(first_bad));
    r.verdict.note = "threshold covers the tail but the head scan fails; PSD is sufficient, "
                     "not necessary";
  }
  return r;
}

CriterionResult d2_closed_form(const RecurrenceSpec& spec, long horizon) {
  if (spec.order != 2) return not_applicable("d2-closed-form", "requires order 2");
  CriterionResult r;
  r.name = "d2-closed-form";
  r.applicable = true;
  r.verdict.statement = "log-concave";
  r.verdict.theorem = "prop:2nd-order-logconcave";
  if (d2_psd_for_all_n(spec)) {
    r.verdict.status = Status::Proved;
    r.verdict.statement = "log-concave for all initial data";
    r.verdict.facts.push_back("p0 = 0, p1 = " + spec.p[1].str() + " <= 0, q1 = " +
                              spec.q[1].str() + " <= 0, q0^2 = " + (spec.q[0] * spec.q[0]).str() +
                              " <= " + (Rational(-4) * spec.q[1]).str() + " = -4 q1");
    r.verdict.facts.push_back("Q_n is PSD for all n >= 0");
    return r;
  }
  std::optional<long> first_false;
  for (long n = 1; n <= horizon; ++n) {
    if (!d2_psd_condition(spec, n)) {
      first_false = n;
      break;
    }
  }
  r.verdict.status = Status::Inconclusive;
  if (!first_false) {
    r.verdict.facts.push_back("closed-form PSD condition holds for all n in [1, " +
                              std::to_string(horizon) + "]");
    r.verdict.note = "holds on the scanned range but not for all n; window evidence only";
  } else {
    r.verdict.facts.push_back("closed-form PSD condition fails at n = " +
                              std::to_string(*first_false));
    r.verdict.note = "PSD is sufficient, not necessary: no conclusion";
  }
  return r;
}

CriterionResult constant_tight(const RecurrenceSpec& spec) {
  auto cs = ConstantSecondOrder::from_spec(spec);
  if (!cs) {
    return not_applicable("constant-tight", "requires order 2 with constant coefficients");
  }
  CriterionResult r;
  r.name = "constant-tight";
  r.applicable = true;
  r.verdict = classify_const(*cs);
  return r;
}

CriterionResult cone_criterion(const RecurrenceSpec& spec) {
  auto cs = ConstantSecondOrder::from_spec(spec);
  if (!cs) return not_applicable("cone", "requires order 2 with constant coefficients");
  if (cs->discriminant() <= Rational(0) || cs->beta >= Rational(0)) {
    return not_applicable("cone", "requires discriminant > 0 and beta < 0");
  }
  CriterionResult r;
  r.name = "cone";
  r.applicable = true;
  r.verdict = cone_membership(*cs);
  return r;
}

CriterionResult fixed_point_criterion(const SequenceWindow& window) {
  if (window.size() < 4) return not_applicable("fixed-point", "window shorter than 4 terms");
  CriterionResult r;
  r.name = "fixed-point";
  r.applicable = true;
  r.verdict = classify_fixed(window, Rational(0));
  return r;
}

CriterionResult dominant_root_criterion(const RecurrenceSpec& spec, long horizon) {
  if (spec.order != 2) return not_applicable("dominant-root", "requires order 2");
  CriterionResult r;
  r.name = "dominant-root";
  r.applicable = true;
  r.verdict = classify_prec(spec, horizon);
  return r;
}

CriterionResult r_factor_criterion(const SequenceWindow& window) {
  if (window.size() < 3) return not_applicable("r-factor", "window shorter than 3 terms");
  CriterionResult r;
  r.name = "r-factor";
  r.applicable = true;
  r.verdict.statement = "infinitely log-concave";
  r.verdict.theorem = "thm:rfactor";
  auto violation = r_factor_check(window, kDefaultRFactor);
  r.verdict.status = Status::Inconclusive;
  r.verdict.facts.push_back("factor 29/11 exceeds (3+sqrt(5))/2 exactly: (2*29-3*11)^2 = 625 "
                            ">= 605 = 5*11^2");
  if (!violation) {
    r.verdict.facts.push_back("a_n^2 >= (29/11) a_{n+1} a_{n-1} on the whole window interior");
    r.verdict.note = "sufficient criterion verified on the window only; no tail argument, "
                     "so this remains evidence";
  } else {
    r.verdict.facts.push_back("factor inequality fails at index " + std::to_string(*violation));
    r.verdict.note = "the factor criterion is sufficient, not necessary: no conclusion";
  }
  return r;
}

ErratumNote audit_claim(const Claim& claim, const OracleReport& oracle) {
  ErratumNote note;
  note.location = "L" + std::to_string(claim.level) + "[" + std::to_string(claim.index) + "]";
  note.paper_stated = claim.text;
  if (claim.level < 0 || claim.level >= static_cast<int>(oracle.levels.size()) ||
      !oracle.levels[static_cast<size_t>(claim.level)].window.contains(claim.index)) {
    note.computed_exact = "not computed (outside oracle depth/horizon)";
    note.status = "unverifiable";
    return note;
  }
  const Rational& actual =
      oracle.levels[static_cast<size_t>(claim.level)].window.at(claim.index);
  note.computed_exact = actual.str();
  note.status = compare(actual, claim.op, claim.value) ? "confirmed" : "contradicted";
  return note;
}

}  // namespace

AnalysisReport analyze(const RecurrenceSpec& spec, const std::vector<Claim>& claims,
                       const AnalyzeOptions& options) {
  AnalysisReport report;
  report.spec = spec;
  report.depth = options.depth;
  report.horizon = options.horizon;
  report.oracle = oracle_inf_lc(spec, options.depth, options.horizon);
  const SequenceWindow& window = report.oracle.levels[0].window;

  std::vector<std::function<CriterionResult()>> tasks = {
      [&] { return qform_pointwise(spec, options.horizon); },
      [&] { return threshold_criterion(spec); },
      [&] { return d2_closed_form(spec, options.horizon); },
      [&] { return constant_tight(spec); },
      [&] { return cone_criterion(spec); },
      [&] { return fixed_point_criterion(window); },
      [&] { return dominant_root_criterion(spec, options.horizon); },
      [&] { return r_factor_criterion(window); },
  };
  report.criteria.resize(tasks.size());
  if (options.parallel) {
    std::vector<std::future<CriterionResult>> futures;
    futures.reserve(tasks.size());
    for (auto& t : tasks) futures.push_back(std::async(std::launch::async, t));
    for (size_t i = 0; i < futures.size(); ++i) report.criteria[i] = futures[i].get();
  } else {
    for (size_t i = 0; i < tasks.size(); ++i) report.criteria[i] = tasks[i]();
  }

  // Claims audit: every claim is checked; contradictions and unverifiable
  // claims become errata.
  for (const Claim& c : claims) {
    ErratumNote note = audit_claim(c, report.oracle);
    if (note.status != "confirmed") report.errata.push_back(std::move(note));
  }

  auto find = [&](const std::string& name) -> const CriterionResult& {
    for (const auto& c : report.criteria) {
      if (c.name == name) return c;
    }
    throw std::logic_error("criterion missing: " + name);
  };

  const bool zero_sequence =
      std::all_of(spec.initial.begin(), spec.initial.end(),
                  [](const Rational& r) { return r.is_zero(); });

  // Log-concavity conclusion.
  if (auto w = report.oracle.first_refutation(); w && w->level == 1) {
    report.log_concave = {Status::Refuted, "oracle",
                          "L^1 at index " + std::to_string(w->index) + " equals " +
                              w->value.str(),
                          w};
  } else if (zero_sequence) {
    report.log_concave = {Status::Proved, "zero-sequence",
                          "all initial data are zero, so every term and every iterate is zero",
                          std::nullopt};
  } else if (find("d2-closed-form").verdict.status == Status::Proved) {
    report.log_concave = {Status::Proved, "d2-closed-form",
                          "Q_n is PSD for all n >= 0, so the quadratic form is nonnegative "
                          "for every state vector",
                          std::nullopt};
  } else if (find("threshold-N").verdict.status == Status::Proved) {
    report.log_concave = {Status::Proved, "threshold-N",
                          "eigenvalue threshold plus exact head scan covers every n",
                          std::nullopt};
  } else if (find("constant-tight").verdict.status == Status::Proved) {
    report.log_concave = {Status::Proved, "constant-tight",
                          "infinite log-concavity certified, which includes level 1",
                          std::nullopt};
  } else {
    report.log_concave = {Status::Inconclusive, "",
                          "no certificate covers all n and the oracle found no level-1 "
                          "counterexample",
                          std::nullopt};
  }

  // Infinite log-concavity conclusion.
  if (auto w = report.oracle.first_refutation()) {
    report.inf_log_concave = {Status::Refuted, "oracle",
                              "L^" + std::to_string(w->level) + " at index " +
                                  std::to_string(w->index) + " equals " + w->value.str(),
                              w};
  } else if (zero_sequence) {
    report.inf_log_concave = {Status::Proved, "zero-sequence",
                              "all initial data are zero, so every iterate is zero",
                              std::nullopt};
  } else if (find("constant-tight").verdict.status == Status::Proved) {
    report.inf_log_concave = {Status::Proved, "constant-tight",
                              "tight constant-coefficient criterion", std::nullopt};
  } else if (find("dominant-root").verdict.status == Status::Proved) {
    report.inf_log_concave = {Status::Proved, "dominant-root",
                              "dominant-root reduction with matrix tail coverage", std::nullopt};
  } else {
    report.inf_log_concave = {Status::Inconclusive, "",
                              "no tight criterion applies with a full-tail certificate",
                              std::nullopt};
  }

  // A Proved conclusion must never coexist with an oracle witness.
  if (report.inf_log_concave.status == Status::Proved && report.oracle.first_refutation()) {
    throw std::logic_error("analysis: proved infinitely log-concave despite an oracle witness");
  }
  if (report.log_concave.status == Status::Proved) {
    if (auto w = report.oracle.first_refutation(); w && w->level == 1) {
      throw std::logic_error("analysis: proved log-concave despite an oracle witness");
    }
  }
  return report;
}

namespace {

ordered_json spec_json(const RecurrenceSpec& spec) {
  ordered_json j;
  j["order"] = spec.order;
  auto list = [](const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const Rational& r : v) a.push_back(r.str());
    return a;
  };
  j["p"] = list(spec.p);
  j["q"] = list(spec.q);
  j["initial"] = list(spec.initial);
  return j;
}

ordered_json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  ordered_json j;
  j["level"] = w->level;
  j["index"] = w->index;
  j["value"] = w->value.str();
  return j;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["status"] = status_name(v.status);
  j["statement"] = v.statement;
  j["theorem"] = v.theorem;
  j["facts"] = v.facts;
  j["witness"] = witness_json(v.witness);
  j["note"] = v.note;
  return j;
}

ordered_json oracle_json_body(const OracleReport& report, bool include_terms) {
  ordered_json j;
  j["depth"] = report.depth;
  j["horizon"] = report.horizon;
  j["refuted"] = report.first_refutation().has_value();
  ordered_json levels = ordered_json::array();
  for (const OracleLevel& lvl : report.levels) {
    ordered_json l;
    l["level"] = lvl.level;
    l["start"] = lvl.window.start;
    l["length"] = lvl.window.size();
    if (lvl.first_negative) {
      ordered_json fn;
      fn["index"] = *lvl.first_negative;
      fn["value"] = lvl.window.at(*lvl.first_negative).str();
      l["first_negative"] = fn;
    } else {
      l["first_negative"] = nullptr;
    }
    if (include_terms) {
      ordered_json terms = ordered_json::array();
      for (const Rational& t : lvl.window.terms) terms.push_back(t.str());
      l["terms"] = terms;
    }
    levels.push_back(l);
  }
  j["levels"] = levels;
  return j;
}

ordered_json conclusion_json(const PropertyConclusion& c) {
  ordered_json j;
  j["status"] = status_name(c.status);
  j["via"] = c.via;
  j["detail"] = c.detail;
  j["witness"] = witness_json(c.witness);
  return j;
}

}  // namespace

std::string report_to_json(const AnalysisReport& report) {
  ordered_json j;
  j["spec"] = spec_json(report.spec);
  ordered_json criteria = ordered_json::array();
  for (const CriterionResult& c : report.criteria) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["applicable"] = c.applicable;
    ordered_json v = verdict_json(c.verdict);
    for (auto& [key, val] : v.items()) cj[key] = val;
    criteria.push_back(cj);
  }
  j["criteria"] = criteria;
  j["oracle"] = oracle_json_body(report.oracle, /*include_terms=*/false);
  ordered_json overall;
  overall["log_concave"] = conclusion_json(report.log_concave);
  overall["infinitely_log_concave"] = conclusion_json(report.inf_log_concave);
  j["overall"] = overall;
  ordered_json errata = ordered_json::array();
  for (const ErratumNote& e : report.errata) {
    ordered_json ej;
    ej["location"] = e.location;
    ej["paper_stated"] = e.paper_stated;
    ej["computed_exact"] = e.computed_exact;
    ej["status"] = e.status;
    errata.push_back(ej);
  }
  j["errata"] = errata;
  return j.dump(2) + "\n";
}

namespace {

void render_verdict_text(std::ostringstream& out, const Verdict& v, const std::string& indent) {
  out << indent << "status: " << status_name(v.status);
  if (!v.theorem.empty()) out << "  [" << v.theorem << "]";
  out << "\n";
  if (!v.statement.empty()) out << indent << "statement: " << v.statement << "\n";
  for (const std::string& f : v.facts) out << indent << "fact: " << f << "\n";
  if (v.witness) {
    out << indent << "witness: L^" << v.witness->level << " at index " << v.witness->index
        << " = " << v.witness->value.str() << "\n";
  }
  if (!v.note.empty()) out << indent << "note: " << v.note << "\n";
}

std::string spec_text(const RecurrenceSpec& spec) {
  auto list = [](const std::vector<Rational>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += v[i].str();
    }
    return s + "]";
  };
  return "order=" + std::to_string(spec.order) + "; p=" + list(spec.p) + "; q=" + list(spec.q) +
         "; initial=" + list(spec.initial);
}

}  // namespace

std::string report_to_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "spec: " << spec_text(report.spec) << "\n";
  out << "oracle: depth=" << report.oracle.depth << " horizon=" << report.oracle.horizon << "\n";
  for (const OracleLevel& lvl : report.oracle.levels) {
    out << "  level " << lvl.level << ": indices [" << lvl.window.start << ", "
        << lvl.window.last_index() << "], first negative: ";
    if (lvl.first_negative) {
      out << "index " << *lvl.first_negative << " ("
          << lvl.window.at(*lvl.first_negative).str() << ")";
    } else {
      out << "none";
    }
    out << "\n";
  }
  out << "criteria:\n";
  for (const CriterionResult& c : report.criteria) {
    out << "  " << c.name << (c.applicable ? "" : " (not applicable)") << "\n";
    render_verdict_text(out, c.verdict, "    ");
  }
  out << "overall:\n";
  auto conclusion = [&](const char* label, const PropertyConclusion& c) {
    out << "  " << label << ": " << status_name(c.status);
    if (!c.via.empty()) out << " via " << c.via;
    out << "\n    " << c.detail << "\n";
    if (c.witness) {
      out << "    witness: L^" << c.witness->level << " at index " << c.witness->index << " = "
          << c.witness->value.str() << "\n";
    }
  };
  conclusion("log-concave", report.log_concave);
  conclusion("infinitely log-concave", report.inf_log_concave);
  if (report.errata.empty()) {
    out << "errata: none\n";
  } else {
    out << "errata:\n";
    for (const ErratumNote& e : report.errata) {
      out << "  " << e.location << " [" << e.status << "] paper-stated: " << e.paper_stated
          << "; computed-exact: " << e.computed_exact << "\n";
    }
  }
  return out.str();
}

std::string oracle_to_json(const RecurrenceSpec& spec, const OracleReport& report) {
  ordered_json j;
  j["spec"] = spec_json(spec);
  j["oracle"] = oracle_json_body(report, /*include_terms=*/true);
  return j.dump(2) + "\n";
}

std::string oracle_to_text(const RecurrenceSpec& spec, const OracleReport& report) {
  std::ostringstream out;
  out << "spec: " << spec_text(spec) << "\n";
  out << "oracle: depth=" << report.depth << " horizon=" << report.horizon << "\n";
  for (const OracleLevel& lvl : report.levels) {
    out << "level " << lvl.level << " (indices " << lvl.window.start << ".."
        << lvl.window.last_index() << "):\n";
    for (long i = lvl.window.start; i <= lvl.window.last_index(); ++i) {
      out << "  " << i << ": " << lvl.window.at(i).str() << "\n";
    }
    out << "  first negative: ";
    if (lvl.first_negative) {
      out << "index " << *lvl.first_negative << " (" << lvl.window.at(*lvl.first_negative).str()
          << ")";
    } else {
      out << "none";
    }
    out << "\n";
  }
  return out.str();
}

std::string generate_to_json(const RecurrenceSpec& spec, const SequenceWindow& window) {
  ordered_json j;
  j["spec"] = spec_json(spec);
  ordered_json terms = ordered_json::array();
  for (long i = window.start; i <= window.last_index(); ++i) {
    ordered_json t;
    t["index"] = i;
    t["value"] = window.at(i).str();
    ordered_json approx;
    approx["value"] = window.at(i).decimal(20);
    approx["approx"] = true;
    t["decimal"] = approx;
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j.dump(2) + "\n";
}

std::string generate_to_text(const SequenceWindow& window) {
  std::ostringstream out;
  for (long i = window.start; i <= window.last_index(); ++i) {
    out << i << ": " << window.at(i).str() << " ~ " << window.at(i).decimal(20) << "\n";
  }
  return out.str();
}

std::string cone_grid(const Rational& alpha, const Rational& beta, const Rational& range,
                      const Rational& step) {
  if (beta >= Rational(0)) {
    throw std::invalid_argument("cone_grid: requires beta < 0");
  }
  Rational d = alpha * alpha + Rational(4) * beta;
  if (d <= Rational(0)) {
    throw std::invalid_argument("cone_grid: requires a positive discriminant alpha^2 + 4 beta");
  }
  if (step <= Rational(0)) throw std::invalid_argument("cone_grid: step must be positive");
  if (range < Rational(0)) throw std::invalid_argument("cone_grid: range must be nonnegative");

  std::ostringstream out;
  out << "# a b in_cone S\n";
  for (Rational a = -range; a <= range; a += step) {
    for (Rational b = -range; b <= range; b += step) {
      Rational s = a * b * alpha - b * b + a * a * beta;
      out << a.str() << " " << b.str() << " " << (s <= Rational(0) ? 1 : 0) << " " << s.str()
          << "\n";
    }
  }
  return out.str();
}

}  // namespace lcq
