#include "cubic/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cubic/cardano.hpp"
#include "cubic/chen.hpp"
#include "cubic/denest.hpp"
#include "cubic/errors.hpp"
#include "cubic/output.hpp"
#include "cubic/parse.hpp"
#include "cubic/verify.hpp"

namespace cubic::cli {
namespace {

struct SolveArgs {
  std::string expr;
  std::string p;
  std::string q;
  std::string lead = "1";
  std::string a;
  std::string b;
  std::string c;
  std::string batch;
  std::string method = "chen";
  std::string branch = "real";
  std::string format = "text";
  int precision = 12;
  bool polish = false;
  bool verify = false;
};

struct DenestArgs {
  std::string a;
  std::string b;
  std::string format = "text";
  int precision = 12;
};

struct Outcome {
  OutputRecord record;
  int code = kExitOk;
};

ExactValue exact_or_throw(const Coefficient& c) {
  if (!c.exact) throw InvalidInput("no exact form");
  return *c.exact;
}

GeneralCubic cubic_from_flags(const std::vector<Coefficient>& coefficients) {
  try {
    return GeneralCubic::from_exact({exact_or_throw(coefficients[0]), exact_or_throw(coefficients[1]),
                                     exact_or_throw(coefficients[2]), exact_or_throw(coefficients[3])});
  } catch (const InvalidInput&) {
    return GeneralCubic::from_coefficients(coefficients[0].value, coefficients[1].value, coefficients[2].value,
                                           coefficients[3].value);
  }
}

Outcome solve_one(const GeneralCubic& cubic, const std::string& input, const SolveArgs& args) {
  SolveOptions options;
  options.polish = args.polish;
  options.branch = args.branch == "principal" ? CubeRootBranch::Principal : CubeRootBranch::RealPreferring;
  if (args.method == "chen" || args.method == "both") {
    options.method = args.branch == "principal" ? Method::Unified : Method::Chen;
  } else if (args.method == "unified") {
    options.method = Method::Unified;
  } else if (args.method == "cardano") {
    options.method = Method::Cardano;
  } else {
    options.method = Method::Moebius;
  }

  const RootTriple roots = solve(cubic, options);
  Outcome outcome{make_record(input, args.method, cubic, roots), kExitOk};
  if (options.method == Method::Moebius &&
      (roots.tag == CaseTag::Equal || roots.tag == CaseTag::DegenerateP0 || roots.tag == CaseTag::DegenerateQ0)) {
    outcome.record.note = "Moebius form undefined for this case (r = s or p q = 0); used the case solver";
  }
  if (args.method == "both") {
    const Depressed depressed = depress(cubic);
    const ComparisonReport report = compare_methods(depressed.cubic);
    for (const auto& z : report.cardano.roots) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw NumericFailure("non-finite cardano root");
    }
    OutputRecord::Comparison comparison;
    comparison.max_matched_distance = report.max_matched_distance;
    comparison.perm = report.perm;
    comparison.chen_residuals = report.chen_residuals;
    comparison.cardano_residuals = report.cardano_residuals;
    for (const auto& z : report.cardano.roots) {
      comparison.cardano_roots.push_back({z.real() - depressed.shift.delta, z.imag()});
    }
    outcome.record.comparison = comparison;
  }
  if (args.verify) {
    outcome.record.verification = verify_roots(cubic, roots, 1e-10 * cubic.residual_scale());
    if (!outcome.record.verification->pass) outcome.code = kExitNumeric;
  }
  return outcome;
}

void emit(const OutputRecord& record, const std::string& format, int precision, std::ostream& out) {
  if (format == "json") {
    out << nlohmann::json(record).dump() << "\n";
  } else if (format == "trig") {
    out << format_trig(record, precision);
  } else if (format == "exact") {
    out << format_exact(record, precision);
  } else {
    out << format_text(record, precision);
  }
}

int run_batch(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  std::ifstream in(args.batch);
  if (!in) {
    err << "cannot open batch file: " << args.batch << "\n";
    return kExitUsage;
  }
  int code = kExitOk;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.back() == '\r') line.pop_back();
    try {
      const Outcome outcome = solve_one(parse_cubic(line), line, args);
      out << nlohmann::json(outcome.record).dump() << "\n";
      code = std::max(code, outcome.code);
    } catch (const ParseError& e) {
      err << "line " << number << ": " << e.annotated() << "\n";
      code = std::max(code, kExitUsage);
    } catch (const InvalidInput& e) {
      err << "line " << number << ": " << e.what() << "\n";
      code = std::max(code, kExitUsage);
    } catch (const NumericFailure& e) {
      err << "line " << number << ": numeric failure: " << e.what() << "\n";
      code = std::max(code, kExitNumeric);
    }
  }
  return code;
}

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  if (!args.batch.empty()) return run_batch(args, out, err);
  GeneralCubic cubic = GeneralCubic::monic(0.0, 0.0, 0.0);
  std::string input;
  if (!args.expr.empty()) {
    cubic = parse_cubic(args.expr);
    input = args.expr;
  } else if (!args.p.empty() || !args.q.empty()) {
    if (args.p.empty() || args.q.empty()) throw InvalidInput("--p and --q must be given together");
    cubic = cubic_from_flags({parse_coefficient("1"), parse_coefficient("0"), parse_coefficient(args.p),
                              parse_coefficient(args.q)});
    input = "p=" + args.p + ", q=" + args.q;
  } else if (!args.a.empty() || !args.b.empty() || !args.c.empty()) {
    const auto or_zero = [](const std::string& s) { return parse_coefficient(s.empty() ? "0" : s); };
    cubic = cubic_from_flags({parse_coefficient(args.lead), or_zero(args.a), or_zero(args.b), or_zero(args.c)});
    input = "lead=" + args.lead + ", a=" + (args.a.empty() ? "0" : args.a) + ", b=" +
            (args.b.empty() ? "0" : args.b) + ", c=" + (args.c.empty() ? "0" : args.c);
  } else {
    throw InvalidInput("give one of --expr, --p/--q, --a/--b/--c or --batch");
  }
  const Outcome outcome = solve_one(cubic, input, args);
  emit(outcome.record, args.format, args.precision, out);
  return outcome.code;
}

Scalar scalar(const Coefficient& c) {
  if (c.exact && c.exact->is_rational()) return Scalar::from(c.exact->rational());
  return Scalar::from(c.value);
}

int run_denest(const DenestArgs& args, std::ostream& out) {
  const NestedRadical radical{scalar(parse_coefficient(args.a)), scalar(parse_coefficient(args.b))};
  const DenestResult result = denest(radical);
  if (args.format == "json") {
    nlohmann::json j{{"a", args.a},
                     {"b", args.b},
                     {"value", result.value},
                     {"p", result.cubic.p},
                     {"q", result.cubic.q},
                     {"exact", result.exact ? nlohmann::json(result.exact->to_string()) : nlohmann::json(nullptr)}};
    if (!result.note.empty()) j["note"] = result.note;
    out << j.dump() << "\n";
    return kExitOk;
  }
  if (result.exact) {
    out << "value = " << result.exact->to_string() << " (exact)\n";
  } else {
    out << "value = " << format_number(result.value, args.precision) << " (" << result.note << ")\n";
  }
  out << "cubic: x^3 + p*x + q with p = " << format_number(result.cubic.p, args.precision)
      << ", q = " << format_number(result.cubic.q, args.precision) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cubic equation solver: x^3 + px + q = 0 via the (r, s) decomposition"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a cubic");
  auto* expr = solve_cmd->add_option("--expr", solve_args.expr, "Cubic expression, e.g. \"x^3-12x+16=0\"");
  auto* p = solve_cmd->add_option("--p", solve_args.p, "Depressed-form coefficient p");
  auto* q = solve_cmd->add_option("--q", solve_args.q, "Depressed-form coefficient q");
  auto* lead = solve_cmd->add_option("--lead", solve_args.lead, "Leading coefficient (default 1)");
  auto* a = solve_cmd->add_option("--a", solve_args.a, "x^2 coefficient");
  auto* b = solve_cmd->add_option("--b", solve_args.b, "x coefficient");
  auto* c = solve_cmd->add_option("--c", solve_args.c, "Constant term");
  auto* batch = solve_cmd->add_option("--batch", solve_args.batch, "File with one expression per line (JSON Lines out)");
  expr->excludes(p, q, lead, a, b, c, batch);
  batch->excludes(p, q, lead, a, b, c);
  p->excludes(lead, a, b, c);
  q->excludes(lead, a, b, c);
  solve_cmd->add_option("--method", solve_args.method)
      ->check(CLI::IsMember({"chen", "unified", "cardano", "moebius", "both"}));
  solve_cmd->add_option("--branch", solve_args.branch, "Cube-root branch for the unified formula")
      ->check(CLI::IsMember({"principal", "real"}));
  solve_cmd->add_option("--format", solve_args.format)->check(CLI::IsMember({"text", "json", "trig", "exact"}));
  solve_cmd->add_option("--precision", solve_args.precision, "Significant digits")->check(CLI::Range(1, 17));
  solve_cmd->add_flag("--polish", solve_args.polish, "One Newton step per root");
  solve_cmd->add_flag("--verify", solve_args.verify, "Append residual and Vieta checks; exit 3 on failure");

  DenestArgs denest_args;
  CLI::App* denest_cmd = app.add_subcommand("denest", "Simplify cbrt(a + sqrt(b)) + cbrt(a - sqrt(b))");
  denest_cmd->add_option("--a", denest_args.a)->required();
  denest_cmd->add_option("--b", denest_args.b)->required();
  denest_cmd->add_option("--format", denest_args.format)->check(CLI::IsMember({"text", "json"}));
  denest_cmd->add_option("--precision", denest_args.precision)->check(CLI::Range(1, 17));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args, out, err);
    return run_denest(denest_args, out);
  } catch (const ParseError& e) {
    err << e.annotated() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace cubic::cli
