#pragma once

#include <string>
#include <vector>

#include "qahd/algebra.hpp"
#include "qahd/expr.hpp"
#include "qahd/test_function.hpp"

namespace qahd {

struct LawSample {
  std::string parameters;  // e.g. "phi=hermite:1 a=2"
  Complex lhs;
  Complex rhs;
  double residual = 0.0;
};

struct LawReport {
  std::string law;
  double tolerance = 0.0;
  std::vector<LawSample> samples;
  double max_residual = 0.0;
  bool passed = false;
  /// Quasi-asymptotics only: whether the error sequence strictly decreases.
  bool monotone = true;
};

/// ⟨f, φ(x/a)⟩ = a^{λ+1} ⟨f, φ⟩ + Σ_r a^{λ+1} log^r a ⟨f_r, φ⟩ with the
/// companions f_r of scaling_expansion. Residual |lhs - rhs| / (1 + |lhs|).
LawReport verify_scaling(const QahdExpr& expr, const std::vector<TestFunction>& phis,
                         const std::vector<double>& scales, double tol);

/// Weak Euler chain -⟨f, x φ'⟩ = (λ+1) ⟨f, φ⟩ + ⟨f_1, φ⟩, repeated with f
/// replaced by its first companion until order 0 is reached.
LawReport verify_euler(const QahdExpr& expr, const std::vector<TestFunction>& phis, double tol);

struct IndependenceReport {
  double min_singular_value = 0.0;
  double max_singular_value = 0.0;
  double ratio = 0.0;
  bool passed = false;
};

/// Rank test of M[i][j] = ⟨term_i, φ_j⟩ (rows scaled to unit norm): passes
/// when σ_min >= kIndepEps σ_max.
IndependenceReport verify_independence(const std::vector<QahdTerm>& terms,
                                       const std::vector<TestFunction>& phis);

/// Numerical quasi-asymptotic limit. At infinity
///   ratio(a) = a^{-1} ⟨f, φ(x/a)⟩ / (a^λ log^k a) → ⟨f_0, φ⟩,
/// at zero
///   ratio(a) = a ⟨f, φ(a x)⟩ / (a^{-λ} log^k a) → (-1)^k ⟨f_0, φ⟩.
/// Residuals are relative errors; the report passes when they decrease
/// strictly along the grid and the last one is at most 2 C / log(a_max) for
/// the least-squares fit err ≈ C / log a.
LawReport verify_quasi_asymptotics(const QahdExpr& expr, const TestFunction& phi,
                                   const std::vector<double>& a_grid, AsymptoticPoint at);

}  // namespace qahd
