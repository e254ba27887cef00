#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qahd/algebra.hpp"
#include "qahd/cli.hpp"
#include "qahd/pairing.hpp"

namespace qahd::cli {

namespace {

const std::vector<std::string> kDefaultPhis = {"hermite:1", "hermite:0,1", "hermite:1,0,1",
                                               "hermite:0,0,0,1"};
const std::vector<double> kDefaultScales = {0.3, 0.7, 1.0, 2.0, 5.0, 10.0};
const std::vector<double> kDefaultQuasiGrid = {1e2, 1e3, 1e4, 1e5};
constexpr double kDefaultLawTol = 1e-7;

std::vector<TestFunction> battery(const std::vector<std::string>& names, std::size_t at_least) {
  std::vector<TestFunction> out;
  for (const auto& n : names.empty() ? kDefaultPhis : names) out.push_back(parse_test_function(n));
  // Pad with further Hermite functions He_j e^{-x²} when a rank test needs more columns.
  for (std::size_t j = out.size(); out.size() < at_least; ++j) {
    std::vector<double> c(j + 1, 0.0);
    c[j] = 1.0;
    out.push_back(TestFunction::hermite(c));
  }
  return out;
}

void write_error(std::ostream& err, std::string_view kind, const std::string& message,
                 std::optional<std::size_t> offset = std::nullopt) {
  nlohmann::ordered_json j{{"error", kind}, {"message", message}};
  if (offset) j["offset"] = *offset;
  err << j.dump() << '\n';
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

int do_verify(const Command& cmd, const QahdExpr& expr, std::ostream& out) {
  const double tol = cmd.tol > 0.0 ? cmd.tol : kDefaultLawTol;
  if (cmd.law == "independence") {
    std::vector<QahdTerm> terms;
    for (const auto& [t, c] : expr) terms.push_back(t);
    const auto report = verify_independence(terms, battery(cmd.phis, terms.size()));
    out << to_json(report).dump(2) << '\n';
    return report.passed ? kExitOk : kExitLawFailed;
  }
  LawReport report;
  if (cmd.law == "scaling") {
    report = verify_scaling(expr, battery(cmd.phis, 0), cmd.scales.empty() ? kDefaultScales : cmd.scales, tol);
  } else if (cmd.law == "euler") {
    report = verify_euler(expr, battery(cmd.phis, 0), tol);
  } else if (cmd.law == "quasi") {
    if (cmd.at != "zero" && cmd.at != "infinity") {
      throw Error(ErrorKind::PreconditionViolation, "--at must be zero or infinity");
    }
    const auto phi = parse_test_function(cmd.phis.empty() ? "hermite:1" : cmd.phis.front());
    report = verify_quasi_asymptotics(expr, phi, cmd.scales.empty() ? kDefaultQuasiGrid : cmd.scales,
                                      cmd.at == "zero" ? AsymptoticPoint::Zero : AsymptoticPoint::Infinity);
  } else {
    throw Error(ErrorKind::PreconditionViolation, "unknown law '" + cmd.law + "'");
  }
  out << to_json(report).dump(2) << '\n';
  return report.passed ? kExitOk : kExitLawFailed;
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::QuadratureFailure:
    case ErrorKind::IllConditioned: return kExitNumerical;
    default: return kExitInvalid;
  }
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.verb == "gamma-table") {
      if (cmd.grid.empty()) throw Error(ErrorKind::PreconditionViolation, "--grid needs at least one argument");
      out << "j,k,argument_re,argument_im,value_re,value_im\n";
      for (const auto& g : cmd.grid) {
        const Complex arg = parse_complex(g);
        for (int j = 0; j <= cmd.k; ++j) {
          const GammaValue v = gamma_assoc(j, arg, cmd.k);
          out << j << ',' << cmd.k << ',' << csv_number(arg.real()) << ',' << csv_number(arg.imag()) << ','
              << csv_number(v.value.real()) << ',' << csv_number(v.value.imag()) << '\n';
        }
      }
      return kExitOk;
    }

    const QahdExpr expr = parse_expr(cmd.expr_text);
    if (cmd.verb == "pair") {
      const auto phi = parse_test_function(cmd.phis.empty() ? "hermite:1" : cmd.phis.front());
      const auto r = pair(expr, phi, cmd.tol > 0.0 ? cmd.tol : kDefaultTol);
      out << nlohmann::ordered_json{{"value", to_json(r.value)}, {"error_estimate", r.abs_error_estimate}}.dump(2)
          << '\n';
    } else if (cmd.verb == "dilate") {
      if (!cmd.a) throw Error(ErrorKind::PreconditionViolation, "dilate needs --a");
      out << to_json(dilate(expr, *cmd.a)).dump(2) << '\n';
    } else if (cmd.verb == "expand") {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& se : scaling_expansion(expr)) arr.push_back(to_json(se));
      out << arr.dump(2) << '\n';
    } else if (cmd.verb == "fourier") {
      out << to_json(fourier(expr)).dump(2) << '\n';
    } else if (cmd.verb == "verify") {
      return do_verify(cmd, expr, out);
    } else {
      throw Error(ErrorKind::PreconditionViolation, "unknown command '" + cmd.verb + "'");
    }
    return kExitOk;
  } catch (const ParseFailure& e) {
    write_error(err, to_string(e.kind()), e.what(), e.offset());
    return kExitInvalid;
  } catch (const Error& e) {
    write_error(err, to_string(e.kind()), e.what());
    return exit_code_for(e.kind());
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qahd: calculus of quasi associated homogeneous distributions"};
  app.require_subcommand(1);
  Command cmd;

  auto* pair_cmd = app.add_subcommand("pair", "Pair an expression with a test function");
  pair_cmd->add_option("expr", cmd.expr_text, "Expression")->required();
  pair_cmd->add_option("--phi", cmd.phis, "Test function (hermite:c0,c1,... or exp:m)");
  pair_cmd->add_option("--tol", cmd.tol, "Quadrature tolerance");

  auto* dilate_cmd = app.add_subcommand("dilate", "Exact image of f(ax)");
  dilate_cmd->add_option("expr", cmd.expr_text, "Expression")->required();
  dilate_cmd->add_option("--a", cmd.a, "Dilation factor a > 0")->required();

  auto* expand_cmd = app.add_subcommand("expand", "Scaling expansion per homogeneous component");
  expand_cmd->add_option("expr", cmd.expr_text, "Expression")->required();

  auto* fourier_cmd = app.add_subcommand("fourier", "Fourier transform, F[f](xi) = int f(x) e^{i xi x} dx");
  fourier_cmd->add_option("expr", cmd.expr_text, "Expression")->required();

  auto* gamma_cmd = app.add_subcommand("gamma-table", "Associated homogeneous Gamma functions as CSV");
  gamma_cmd->add_option("--k", cmd.k, "Order k")->required()->check(CLI::Range(0, 7));
  gamma_cmd->add_option("--grid", cmd.grid, "Arguments (lambda+1, or -n+1 for the integer family)")
      ->required()
      ->delimiter(',');

  auto* verify_cmd = app.add_subcommand("verify", "Check a law numerically; exit 0 iff it holds");
  verify_cmd->add_option("expr", cmd.expr_text, "Expression")->required();
  verify_cmd->add_option("--law", cmd.law, "Law to verify")
      ->required()
      ->check(CLI::IsMember({"scaling", "euler", "independence", "quasi"}));
  verify_cmd->add_option("--phi", cmd.phis, "Test functions (repeatable)");
  verify_cmd->add_option("--a", cmd.scales, "Scale factors (scaling) or a grid (quasi)")->delimiter(',');
  verify_cmd->add_option("--tol", cmd.tol, "Residual tolerance");
  verify_cmd->add_option("--at", cmd.at, "Quasi-asymptotic point")->check(CLI::IsMember({"zero", "infinity"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "UsageError", e.what());
    return kExitInvalid;
  }
  cmd.verb = app.get_subcommands().front()->get_name();
  return run(cmd, out, err);
}

}  // namespace qahd::cli
