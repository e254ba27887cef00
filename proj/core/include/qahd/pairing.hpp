#pragma once

#include <string>
#include <vector>

#include "qahd/expr.hpp"
#include "qahd/test_function.hpp"

namespace qahd {

/// Contribution of one basis term to a pairing.
struct PairingPiece {
  std::string term;
  Complex coeff;
  Complex near;        // integral over (0, 1) of the Taylor-subtracted integrand
  Complex tail;        // integral over (1, ∞)
  Complex correction;  // closed-form terms restoring the subtraction
  double abs_error = 0.0;
};

struct PairingResult {
  Complex value;
  double abs_error_estimate = 0.0;
  std::vector<PairingPiece> pieces;
};

/// Smallest n >= 0 with Re λ > -n-1.
int subtraction_order(Complex lambda);

/// ⟨term, φ⟩ by the regularized formulas:
///   x_+^λ log^k:      Taylor subtraction on (0, 1) plus the pole corrections
///                     Σ_j (-1)^k k! φ^{(j)}(0) / (j! (λ+j+1)^{k+1});
///   P(x_+^{-n} log^k): finite part with orders j <= n-2 subtracted globally
///                     and the order n-1 term only on (0, 1);
///   x_-, P(x_-):      the plus rule applied to φ(-x);
///   δ^{(m)}:          (-1)^m φ^{(m)}(0).
PairingResult pair_term(const QahdTerm& term, const TestFunction& phi, double tol = kDefaultTol);

/// Linear extension of pair_term; absolute error estimates add up.
PairingResult pair(const QahdExpr& expr, const TestFunction& phi, double tol = kDefaultTol);

/// x ↦ φ(x / a).
TestFunction scaled_argument(const TestFunction& phi, double a);

namespace detail {

/// ⟨x_+^λ log^k x_+, φ⟩ with exactly `n` Taylor terms subtracted on (0, 1).
/// Valid whenever Re λ > -n-1; n = 0 is the plain integral. Used to check
/// that the regularization is independent of the subtraction depth.
PairingResult pair_xplus_subtracted(Complex lambda, int k, const TestFunction& phi, int n,
                                    double tol = kDefaultTol);

}  // namespace detail

}  // namespace qahd
