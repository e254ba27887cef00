#include "qahd/pairing.hpp"

#include <algorithm>
#include <cmath>

#include "qahd/error.hpp"
#include "qahd/quadrature.hpp"

namespace qahd {

namespace {

Complex ipow(double t, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= t;
  return r;
}

// Lower limit in t = ln x below which e^{μ t} |t|^k is negligible relative to
// the region around x = |L|.
double lower_limit(const TestFunction& phi, double mu, int k) {
  return std::min(0.0, std::log(std::abs(phi.length()))) - (40.0 + 5.0 * k) / mu;
}

struct Pieces {
  Complex near, tail, correction;
  double abs_error = 0.0;
};

// ∫_0^1 x^λ log^k x (φ(x) - Σ_{j<n} φ^{(j)}(0) x^j / j!) dx, in t = ln x.
QuadratureResult near_piece(Complex lambda, int k, const TestFunction& phi, int n, double tol) {
  const double mu = lambda.real() + n + 1.0;
  const Complex lp1 = lambda + 1.0;
  auto f = [&](double t) { return std::exp(lp1 * t) * ipow(t, k) * phi.taylor_remainder(std::exp(t), n); };
  return integrate(f, lower_limit(phi, mu, k), 0.0, tol);
}

// ∫_1^∞ x^λ log^k x φ(x) dx, in t = ln x.
QuadratureResult tail_piece(Complex lambda, int k, const TestFunction& phi, double tol) {
  const double x_max = phi.positive_cutoff(lambda.real() + 1.0, k);
  if (x_max <= 1.0) return {};
  const Complex lp1 = lambda + 1.0;
  auto f = [&](double t) { return std::exp(lp1 * t) * ipow(t, k) * phi.value(std::exp(t)); };
  return integrate(f, 0.0, std::log(x_max), tol);
}

Pieces xplus_pieces(Complex lambda, int k, const TestFunction& phi, int n, double tol) {
  if (lambda.real() + n + 1.0 <= 0.0) {
    throw Error(ErrorKind::PreconditionViolation, "too few Taylor terms subtracted for this degree");
  }
  const auto lo = near_piece(lambda, k, phi, n, tol);
  const auto hi = tail_piece(lambda, k, phi, tol);
  Pieces p{lo.value, hi.value, 0.0, lo.abs_error + hi.abs_error};
  const double sign_fact = (k % 2 == 0 ? 1.0 : -1.0) * factorial(k);
  for (int j = 0; j < n; ++j) {
    p.correction += sign_fact * phi.deriv_at_zero(j) / (factorial(j) * std::pow(lambda + double(j + 1), k + 1));
  }
  return p;
}

Pieces xplus_default(Complex lambda, int k, const TestFunction& phi, double tol) {
  // Subtracting until Re λ + n >= 0 keeps the integrand in t decaying at least
  // like e^{t}, so the (0, 1) panel stays short. Extra terms are restored exactly
  // by the corrections.
  int n = subtraction_order(lambda);
  while (lambda.real() + n < 0.0) ++n;
  return xplus_pieces(lambda, k, phi, n, tol);
}

Pieces pf_pieces(int n, int k, const TestFunction& phi, double tol) {
  const Complex lambda(-n, 0.0);
  // (0, 1): subtract orders j <= n-1.
  const auto lo = near_piece(lambda, k, phi, n, tol);
  // (1, ∞): φ minus orders j <= n-2; the polynomial part integrates in closed form.
  const auto hi = tail_piece(lambda, k, phi, tol);
  Pieces p{lo.value, hi.value, 0.0, lo.abs_error + hi.abs_error};
  for (int j = 0; j <= n - 2; ++j) {
    p.correction -= phi.deriv_at_zero(j) / factorial(j) * factorial(k) / std::pow(double(n - j - 1), k + 1);
  }
  return p;
}

}  // namespace

int subtraction_order(Complex lambda) {
  if (distance_to_negative_integer(lambda) <= kPoleEps) {
    throw Error(ErrorKind::InvalidTerm, "degree lies on a pole of the regularized pairing");
  }
  return std::max(0, static_cast<int>(std::floor(-lambda.real())));
}

TestFunction scaled_argument(const TestFunction& phi, double a) {
  if (a == 1.0) return phi;
  return phi.scaled(a);
}

PairingResult pair_term(const QahdTerm& term, const TestFunction& phi, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::PreconditionViolation, "tolerance must be positive");
  Pieces p;
  switch (term.family()) {
    case Family::XPlusLog: p = xplus_default(term.degree(), term.log_power(), phi, tol); break;
    case Family::XMinusLog:
      p = xplus_default(term.degree(), term.log_power(), phi.reflected(), tol);
      break;
    case Family::PfPlusLog: p = pf_pieces(term.pole_order(), term.log_power(), phi, tol); break;
    case Family::PfMinusLog:
      p = pf_pieces(term.pole_order(), term.log_power(), phi.reflected(), tol);
      break;
    case Family::DeltaDeriv: {
      const int m = term.delta_order();
      p.correction = (m % 2 == 0 ? 1.0 : -1.0) * phi.deriv_at_zero(m);
      break;
    }
  }
  PairingResult r;
  r.value = p.near + p.tail + p.correction;
  r.abs_error_estimate = p.abs_error;
  r.pieces.push_back({term.to_string(), 1.0, p.near, p.tail, p.correction, p.abs_error});
  return r;
}

PairingResult pair(const QahdExpr& expr, const TestFunction& phi, double tol) {
  PairingResult total;
  for (const auto& [term, coeff] : expr) {
    PairingResult r = pair_term(term, phi, tol);
    total.value += coeff * r.value;
    total.abs_error_estimate += std::abs(coeff) * r.abs_error_estimate;
    for (auto& piece : r.pieces) {
      piece.coeff = coeff;
      total.pieces.push_back(std::move(piece));
    }
  }
  return total;
}

namespace detail {

PairingResult pair_xplus_subtracted(Complex lambda, int k, const TestFunction& phi, int n, double tol) {
  if (n < 0) throw Error(ErrorKind::PreconditionViolation, "subtraction depth must be >= 0");
  const QahdTerm term = QahdTerm::xplus(lambda, k);
  const Pieces p = xplus_pieces(lambda, k, phi, n, tol);
  PairingResult r;
  r.value = p.near + p.tail + p.correction;
  r.abs_error_estimate = p.abs_error;
  r.pieces.push_back({term.to_string(), 1.0, p.near, p.tail, p.correction, p.abs_error});
  return r;
}

}  // namespace detail

}  // namespace qahd
