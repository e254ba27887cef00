#include "qahd/algebra.hpp"

#include <cmath>

#include "qahd/error.hpp"

namespace qahd {

Complex scale_power(double a, Complex lambda) {
  if (!(a > 0.0)) {
    throw Error(ErrorKind::NonPositiveScale, "scale factor must be positive");
  }
  const double log_a = std::log(a);
  const double modulus = std::pow(a, lambda.real());
  if (lambda.imag() == 0.0) return {modulus, 0.0};
  const double phase = lambda.imag() * log_a;
  return {modulus * std::cos(phase), modulus * std::sin(phase)};
}

std::vector<QahdExpr> dilation_log_coefficients(const QahdTerm& term) {
  std::vector<QahdExpr> out;
  const int k = term.log_power();
  switch (term.family()) {
    case Family::XPlusLog:
    case Family::XMinusLog:
      // log(a x_±) = log a + log x_±, expanded binomially.
      for (int r = 0; r <= k; ++r) out.emplace_back(term.with_log_power(k - r), binomial(k, r));
      break;
    case Family::PfPlusLog:
    case Family::PfMinusLog: {
      for (int r = 0; r <= k; ++r) out.emplace_back(term.with_log_power(k - r), binomial(k, r));
      // The Heaviside cutoff at x = 1 moves under dilation and leaves a
      // δ^{(n-1)} companion at log power k+1. Reflecting φ ↦ φ(-x) multiplies
      // ⟨δ^{(n-1)}, φ⟩ by (-1)^{n-1}, which cancels the sign on the minus side.
      const int n = term.pole_order();
      double c = 1.0 / ((k + 1) * factorial(n - 1));
      if (term.family() == Family::PfPlusLog && (n - 1) % 2 == 1) c = -c;
      out.emplace_back(QahdTerm::delta(n - 1), c);
      break;
    }
    case Family::DeltaDeriv: out.emplace_back(term); break;
  }
  return out;
}

QahdExpr dilate(const QahdExpr& expr, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error(ErrorKind::NonPositiveScale, "dilation factor must be a positive finite number");
  }
  const double log_a = std::log(a);
  std::vector<TermCoeff> raw;
  for (const auto& [term, coeff] : expr) {
    const Complex base = coeff * scale_power(a, term.degree());
    const auto parts = dilation_log_coefficients(term);
    double log_pow = 1.0;
    for (std::size_t r = 0; r < parts.size(); ++r, log_pow *= log_a) {
      if (log_pow == 0.0) break;
      for (const auto& [t, c] : parts[r]) raw.emplace_back(t, base * log_pow * c);
    }
  }
  return canonicalize(raw);
}

namespace {

ScalingExpansion expand_component(const QahdExpr& component) {
  ScalingExpansion se;
  se.component = component;
  if (component.empty()) return se;
  se.degree = component.terms().front().first.degree();

  std::vector<std::vector<TermCoeff>> by_power;
  for (const auto& [term, coeff] : component) {
    const auto parts = dilation_log_coefficients(term);
    if (by_power.size() < parts.size()) by_power.resize(parts.size());
    for (std::size_t r = 1; r < parts.size(); ++r) {
      for (const auto& [t, c] : parts[r]) by_power[r].emplace_back(t, coeff * c);
    }
  }
  for (std::size_t r = 1; r < by_power.size(); ++r) {
    se.companions.push_back(canonicalize(by_power[r]));
  }
  while (!se.companions.empty() && se.companions.back().empty()) se.companions.pop_back();
  se.order = static_cast<int>(se.companions.size());
  return se;
}

}  // namespace

std::vector<ScalingExpansion> scaling_expansion(const QahdExpr& expr) {
  std::vector<ScalingExpansion> out;
  for (const auto& comp : components(expr)) out.push_back(expand_component(comp));
  return out;
}

ScalingExpansion single_scaling_expansion(const QahdExpr& expr) {
  if (expr.empty()) {
    throw Error(ErrorKind::PreconditionViolation, "expression is zero");
  }
  if (!is_single_component(expr)) {
    throw Error(ErrorKind::PreconditionViolation,
                "expression mixes several degrees; pass a single homogeneous component");
  }
  return expand_component(expr);
}

std::vector<DegreeOrder> degree_order(const QahdExpr& expr) {
  std::vector<DegreeOrder> out;
  for (const auto& se : scaling_expansion(expr)) out.push_back({se.degree, se.order});
  return out;
}

QahdTerm d_dlambda(const QahdTerm& term) {
  if (!term.is_power()) {
    throw Error(ErrorKind::NotDifferentiableInLambda,
                term.to_string() + " is not a member of an analytic family in λ");
  }
  return term.with_log_power(term.log_power() + 1);
}

QahdExpr expand_i0(I0Side side, Complex lambda, int log_power) {
  const double s = side == I0Side::Plus ? 1.0 : -1.0;
  const bool negative_integer = lambda.imag() == 0.0 && lambda.real() <= -1.0 &&
                                lambda.real() == std::round(lambda.real());
  if (negative_integer) {
    if (log_power != 0) {
      throw Error(ErrorKind::Unsupported,
                  "(x±i0)^{-n} log^k(x±i0) with k >= 1 is not in the basis");
    }
    const int n = static_cast<int>(-lambda.real());
    const double parity = n % 2 == 0 ? 1.0 : -1.0;
    // (x ± i0)^{-n} = P(x^{-n}) ∓ iπ (-1)^{n-1} δ^{(n-1)} / (n-1)!
    const Complex delta_coeff = -s * kI * kPi * (-parity) / factorial(n - 1);
    return canonicalize({{QahdTerm::pfplus(n, 0), 1.0},
                         {QahdTerm::pfminus(n, 0), parity},
                         {QahdTerm::delta(n - 1), delta_coeff}});
  }
  if (log_power < 0) throw Error(ErrorKind::InvalidTerm, "log power must be non-negative");

  // k-fold λ-derivative of x_+^λ + e^{±iπλ} x_-^λ.
  std::vector<TermCoeff> raw;
  raw.emplace_back(QahdTerm::xplus(lambda, log_power), 1.0);
  const Complex phase = std::exp(s * kI * kPi * lambda);
  Complex ipi_pow = 1.0;
  for (int j = 0; j <= log_power; ++j, ipi_pow *= s * kI * kPi) {
    raw.emplace_back(QahdTerm::xminus(lambda, log_power - j),
                     binomial(log_power, j) * ipi_pow * phase);
  }
  return canonicalize(raw);
}

QuasiAsymptotic quasi_asymptotics(const QahdExpr& expr, AsymptoticPoint at) {
  const ScalingExpansion se = single_scaling_expansion(expr);
  QuasiAsymptotic qa;
  qa.automodel_log_power = se.order;
  qa.automodel_degree = at == AsymptoticPoint::Infinity ? se.degree : -se.degree;
  if (se.order == 0) {
    qa.limit = se.component;
    return qa;
  }
  const double sign = (at == AsymptoticPoint::Zero && se.order % 2 == 1) ? -1.0 : 1.0;
  qa.limit = Complex(sign) * se.companions.back();
  return qa;
}

}  // namespace qahd
