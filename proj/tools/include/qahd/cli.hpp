#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qahd/error.hpp"
#include "qahd/expr.hpp"
#include "qahd/fourier.hpp"
#include "qahd/laws.hpp"
#include "qahd/test_function.hpp"

#include "json.hpp"

namespace qahd::cli {

/// ParseError carrying the byte offset where parsing stopped.
class ParseFailure : public Error {
 public:
  ParseFailure(std::size_t offset, const std::string& what)
      : Error(ErrorKind::ParseError, what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses the expression grammar
///   expr        := ['+'|'-'] signed_term (('+'|'-') signed_term)*  |  '0'
///   signed_term := [coeff '*' | '(' coeff ')' '*'] term
///   coeff       := a | ai | a+bi | a-bi
///   term        := xplus(λ,k) | xminus(λ,k) | pfplus(n,k) | pfminus(n,k) | delta(m)
///                | xplusi0(λ,k) | xminusi0(λ,k)
/// with λ a real or complex literal. The i0 forms are expanded on the spot.
QahdExpr parse_expr(std::string_view text);

/// Complex literal in the coefficient syntax ("2", "-1.5i", "3-2i").
Complex parse_complex(std::string_view text);

/// "hermite:c0,c1,..." or "exp:m".
TestFunction parse_test_function(std::string_view text);

/// Text form accepted by parse_expr; "0" for the zero expression.
std::string to_text(const QahdExpr& expr);
std::string to_text(Complex c);

nlohmann::ordered_json to_json(Complex c);
nlohmann::ordered_json to_json(const QahdExpr& expr);
nlohmann::ordered_json to_json(const FreqExpr& expr);
nlohmann::ordered_json to_json(const LawReport& report);
nlohmann::ordered_json to_json(const IndependenceReport& report);
nlohmann::ordered_json to_json(const ScalingExpansion& se);

struct Command {
  std::string verb;  // pair | dilate | expand | fourier | gamma-table | verify
  std::string expr_text;
  std::vector<std::string> phis;
  std::optional<double> a;
  std::vector<double> scales;
  std::vector<std::string> grid;
  int k = 1;
  double tol = 0.0;  // 0 selects the verb's default
  std::string law;
  std::string at = "infinity";
};

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitLawFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNumerical = 3;

/// Exit code for a library error kind.
int exit_code_for(ErrorKind kind) noexcept;

/// Executes a parsed command, writing the result document to `out` and a
/// JSON error object to `err` on failure.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// Full command line handling (argv parsing with CLI11, then run()).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qahd::cli
