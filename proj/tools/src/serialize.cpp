#include <cstdio>
#include <string>

#include "qahd/cli.hpp"

namespace qahd::cli {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string term_text(const QahdTerm& t) {
  switch (t.family()) {
    case Family::XPlusLog:
    case Family::XMinusLog:
      return family_name(t.family()) + "(" + to_text(t.degree()) + "," + std::to_string(t.log_power()) + ")";
    case Family::PfPlusLog:
    case Family::PfMinusLog:
      return family_name(t.family()) + "(" + std::to_string(t.pole_order()) + "," +
             std::to_string(t.log_power()) + ")";
    case Family::DeltaDeriv: return "delta(" + std::to_string(t.delta_order()) + ")";
  }
  return {};
}

}  // namespace

std::string to_text(Complex c) {
  if (c.imag() == 0.0) return fmt(c.real());
  const std::string im = fmt(c.imag());
  if (c.real() == 0.0) return im + "i";
  return fmt(c.real()) + (c.imag() < 0.0 ? "" : "+") + im + "i";
}

std::string to_text(const QahdExpr& expr) {
  if (expr.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : expr) {
    if (!first) out += " + ";
    first = false;
    // A full complex coefficient is parenthesized so a leading sign binds to both parts.
    const bool both = c.real() != 0.0 && c.imag() != 0.0;
    out += (both ? "(" + to_text(c) + ")" : to_text(c)) + "*" + term_text(t);
  }
  return out;
}

// Adding 0.0 turns -0.0 into 0.0.
nlohmann::ordered_json to_json(Complex c) { return {{"re", c.real() + 0.0}, {"im", c.imag() + 0.0}}; }

nlohmann::ordered_json to_json(const QahdExpr& expr) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [t, c] : expr) {
    nlohmann::ordered_json j;
    j["family"] = family_name(t.family());
    switch (t.family()) {
      case Family::XPlusLog:
      case Family::XMinusLog:
        j["degree"] = to_json(t.degree());
        j["k"] = t.log_power();
        break;
      case Family::PfPlusLog:
      case Family::PfMinusLog:
        j["n"] = t.pole_order();
        j["k"] = t.log_power();
        break;
      case Family::DeltaDeriv: j["m"] = t.delta_order(); break;
    }
    j["coeff"] = to_json(c);
    arr.push_back(std::move(j));
  }
  return arr;
}

nlohmann::ordered_json to_json(const FreqExpr& expr) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [t, c] : expr) {
    nlohmann::ordered_json j;
    j["family"] = freq_family_name(t.family());
    j["degree"] = to_json(t.exponent());
    j["k"] = t.log_power();
    j["coeff"] = to_json(c);
    arr.push_back(std::move(j));
  }
  return arr;
}

nlohmann::ordered_json to_json(const LawReport& report) {
  nlohmann::ordered_json samples = nlohmann::ordered_json::array();
  for (const auto& s : report.samples) {
    samples.push_back({{"parameters", s.parameters},
                       {"lhs", to_json(s.lhs)},
                       {"rhs", to_json(s.rhs)},
                       {"residual", s.residual}});
  }
  nlohmann::ordered_json j{{"law", report.law},
                   {"tolerance", report.tolerance},
                   {"samples", samples},
                   {"max_residual", report.max_residual},
                   {"passed", report.passed}};
  if (report.law.rfind("quasi", 0) == 0) j["monotone"] = report.monotone;
  return j;
}

nlohmann::ordered_json to_json(const IndependenceReport& report) {
  return {{"law", "independence"},
          {"tolerance", kIndepEps},
          {"min_singular_value", report.min_singular_value},
          {"max_singular_value", report.max_singular_value},
          {"ratio", report.ratio},
          {"passed", report.passed}};
}

nlohmann::ordered_json to_json(const ScalingExpansion& se) {
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const auto& c : se.companions) comps.push_back(to_json(c));
  return {{"degree", to_json(se.degree)},
          {"order", se.order},
          {"component", to_json(se.component)},
          {"companions", comps}};
}

}  // namespace qahd::cli
