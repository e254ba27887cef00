#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "qahd/algebra.hpp"
#include "qahd/cli.hpp"

namespace qahd::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  QahdExpr expression() {
    skip_ws();
    if (pos_ == s_.size()) fail("an expression");
    {
      const std::size_t save = pos_;
      if (consume('0')) {
        skip_ws();
        if (pos_ == s_.size()) return {};
        pos_ = save;
      }
    }
    std::vector<TermCoeff> raw;
    double sign = 1.0;
    if (consume('+')) {
    } else if (consume('-')) {
      sign = -1.0;
    }
    signed_term(sign, raw);
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      if (consume('+')) {
        sign = 1.0;
      } else if (consume('-')) {
        sign = -1.0;
      } else {
        fail("'+', '-' or end of input");
      }
      signed_term(sign, raw);
    }
    return canonicalize(raw);
  }

  // Complex literal, returns nullopt (position restored) if none is present.
  std::optional<Complex> complex_literal() {
    const std::size_t save = pos_;
    skip_ws();
    auto re = number();
    if (!re) {
      pos_ = save;
      return std::nullopt;
    }
    if (consume_raw('i')) return Complex(0.0, *re);
    const std::size_t before_imag = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      auto im = number();
      if (im && consume_raw('i')) return Complex(*re, *im);
      pos_ = before_imag;
    }
    return Complex(*re, 0.0);
  }

  void expect_end() {
    skip_ws();
    if (pos_ != s_.size()) fail("end of input");
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw ParseFailure(pos_, "parse error at offset " + std::to_string(pos_) + ": expected " +
                                 expected + ", found " + found);
  }

 private:
  void signed_term(double sign, std::vector<TermCoeff>& raw) {
    skip_ws();
    Complex coeff = 1.0;
    const std::size_t save = pos_;
    if (consume_raw('(')) {
      auto c = complex_literal();
      if (!c) fail("a coefficient literal");
      if (!consume(')')) fail("')'");
      if (!consume('*')) fail("'*' after coefficient");
      coeff = *c;
    } else if (auto c = complex_literal()) {
      skip_ws();
      if (consume('*')) {
        coeff = *c;
      } else {
        pos_ = save;
        skip_ws();
        if (pos_ < s_.size() && !std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
          // a number that is not followed by '*'
          complex_literal();
          skip_ws();
          fail("'*' after coefficient");
        }
      }
    }
    term(sign * coeff, raw);
  }

  void term(Complex coeff, std::vector<TermCoeff>& raw) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])))) ++pos_;
    const std::string name(s_.substr(start, pos_ - start));
    if (name.empty()) fail("a term name (xplus, xminus, pfplus, pfminus, delta, xplusi0, xminusi0)");
    if (!consume('(')) fail("'('");
    if (name == "delta") {
      const int m = integer("delta order m");
      close();
      raw.emplace_back(QahdTerm::delta(m), coeff);
      return;
    }
    if (name == "pfplus" || name == "pfminus") {
      const int n = integer("pole order n");
      comma();
      const int k = integer("log power k");
      close();
      raw.emplace_back(name == "pfplus" ? QahdTerm::pfplus(n, k) : QahdTerm::pfminus(n, k), coeff);
      return;
    }
    if (name == "xplus" || name == "xminus" || name == "xplusi0" || name == "xminusi0") {
      auto lambda = complex_literal();
      if (!lambda) fail("a degree literal");
      comma();
      const int k = integer("log power k");
      close();
      if (name == "xplus") {
        raw.emplace_back(QahdTerm::xplus(*lambda, k), coeff);
      } else if (name == "xminus") {
        raw.emplace_back(QahdTerm::xminus(*lambda, k), coeff);
      } else {
        const auto side = name == "xplusi0" ? I0Side::Plus : I0Side::Minus;
        for (const auto& [t, c] : expand_i0(side, *lambda, k)) raw.emplace_back(t, coeff * c);
      }
      return;
    }
    pos_ = start;
    fail("a term name (xplus, xminus, pfplus, pfminus, delta, xplusi0, xminusi0)");
  }

  std::optional<double> number() {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
    const std::size_t digits_start = p;
    while (p < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[p])) || s_[p] == '.')) ++p;
    if (p == digits_start) return std::nullopt;
    if (p < s_.size() && (s_[p] == 'e' || s_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
      if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
        while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
        p = q;
      }
    }
    double v = 0.0;
    const char* first = s_.data() + start + (s_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, s_.data() + p, v);
    if (ec != std::errc() || ptr != s_.data() + p) return std::nullopt;
    pos_ = p;
    return v;
  }

  int integer(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail(std::string("a non-negative integer (") + what + ")");
    int v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc()) {
      pos_ = start;
      fail(std::string("an integer in range (") + what + ")");
    }
    return v;
  }

  void comma() {
    if (!consume(',')) fail("','");
  }
  void close() {
    if (!consume(')')) fail("')'");
  }

  bool consume(char c) {
    skip_ws();
    return consume_raw(c);
  }
  bool consume_raw(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QahdExpr parse_expr(std::string_view text) {
  Parser p(text);
  return p.expression();
}

Complex parse_complex(std::string_view text) {
  Parser p(text);
  auto c = p.complex_literal();
  if (!c) p.fail("a complex literal");
  p.expect_end();
  return *c;
}

TestFunction parse_test_function(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  if (colon == std::string_view::npos) {
    throw ParseFailure(text.size(), "test function must look like hermite:c0,c1,... or exp:m");
  }
  std::vector<double> values;
  std::size_t pos = colon + 1;
  while (true) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    double v = 0.0;
    const char* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, text.data() + end, v);
    if (ec != std::errc() || ptr != text.data() + end || !std::isfinite(v)) {
      throw ParseFailure(pos, "expected a real number at offset " + std::to_string(pos));
    }
    values.push_back(v);
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (kind == "hermite") return TestFunction::hermite(values);
  if (kind == "exp" && values.size() == 1) return TestFunction::exponential(values[0]);
  throw ParseFailure(0, "unknown test function '" + std::string(text) + "'");
}

}  // namespace qahd::cli
