// Command-line front end: spec ingestion, criterion orchestration, and
// human- or machine-readable verdict reports.
//
// Exit codes: 0 for any successfully computed result (a refutation is a
// successful analysis), 1 for input errors, 2 for internal failures.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lcq/analysis.hpp"
#include "lcq/ell.hpp"
#include "lcq/recurrence.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lcq::ParseError(0, "cannot open spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << content;
}

lcq::Rational parse_rational_arg(const std::string& text, const std::string& flag) {
  auto r = lcq::Rational::parse(text);
  if (!r) throw lcq::ParseError(0, flag + " must be an integer or p/q, got '" + text + "'");
  return *r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"log-concavity analysis of linear recurrences with coefficients linear in n"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string format = "text";
  int depth = lcq::kDefaultOracleDepth;
  long horizon = lcq::kDefaultOracleHorizon;
  bool parallel = false;
  long up_to = 20;
  std::string alpha_text, beta_text;
  std::string range_text = "3";
  std::string step_text = "1";
  std::string out_path = "-";

  auto add_common = [&](CLI::App* cmd, bool with_oracle_flags) {
    cmd->add_option("--spec", spec_path, "spec file")->required();
    cmd->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_oracle_flags) {
      cmd->add_option("--depth", depth, "number of L-operator levels to examine");
      cmd->add_option("--horizon", horizon, "largest sequence index to generate");
    }
  };

  CLI::App* cmd_generate = app.add_subcommand("generate", "print exact terms of the sequence");
  add_common(cmd_generate, false);
  cmd_generate->add_option("--up-to", up_to, "largest index to print");

  CLI::App* cmd_analyze = app.add_subcommand("analyze", "run every applicable criterion");
  add_common(cmd_analyze, true);
  cmd_analyze->add_flag("--parallel", parallel, "evaluate independent criteria concurrently");

  CLI::App* cmd_oracle = app.add_subcommand("oracle", "dump every L-operator level exactly");
  add_common(cmd_oracle, true);

  CLI::App* cmd_cone = app.add_subcommand(
      "cone", "grid of the initial-data cone for a constant-coefficient recurrence");
  cmd_cone->add_option("--alpha", alpha_text, "coefficient of a_n")->required();
  cmd_cone->add_option("--beta", beta_text, "coefficient of a_{n-1} (must be negative)")
      ->required();
  cmd_cone->add_option("--range", range_text, "grid covers [-range, range]^2");
  cmd_cone->add_option("--step", step_text, "grid step");
  cmd_cone->add_option("--out", out_path, "output file, '-' for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_generate->parsed()) {
      lcq::RecurrenceSpec spec = lcq::parse_spec(read_file(spec_path));
      lcq::SequenceWindow w = lcq::generate(spec, up_to);
      write_output("-", format == "json" ? lcq::generate_to_json(spec, w)
                                         : lcq::generate_to_text(w));
      return kExitOk;
    }
    if (cmd_analyze->parsed()) {
      std::string text = read_file(spec_path);
      lcq::RecurrenceSpec spec = lcq::parse_spec(text);
      std::vector<lcq::Claim> claims = lcq::parse_claims(text);
      lcq::AnalyzeOptions options;
      options.depth = depth;
      options.horizon = horizon;
      options.parallel = parallel;
      lcq::AnalysisReport report = lcq::analyze(spec, claims, options);
      write_output("-", format == "json" ? lcq::report_to_json(report)
                                         : lcq::report_to_text(report));
      return kExitOk;
    }
    if (cmd_oracle->parsed()) {
      lcq::RecurrenceSpec spec = lcq::parse_spec(read_file(spec_path));
      lcq::OracleReport report = lcq::oracle_inf_lc(spec, depth, horizon);
      write_output("-", format == "json" ? lcq::oracle_to_json(spec, report)
                                         : lcq::oracle_to_text(spec, report));
      return kExitOk;
    }
    if (cmd_cone->parsed()) {
      lcq::Rational alpha = parse_rational_arg(alpha_text, "--alpha");
      lcq::Rational beta = parse_rational_arg(beta_text, "--beta");
      lcq::Rational range = parse_rational_arg(range_text, "--range");
      lcq::Rational step = parse_rational_arg(step_text, "--step");
      std::string grid;
      try {
        grid = lcq::cone_grid(alpha, beta, range, step);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
      }
      write_output(out_path, grid);
      return kExitOk;
    }
  } catch (const lcq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
