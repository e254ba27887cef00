#pragma once

#include <string>
#include <vector>

#include "qahd/expr.hpp"

namespace qahd {

enum class FreqFamily {
  XiPlusI0Pow,     // (ξ+i0)^μ log^j(ξ+i0)
  XiMinusI0Pow,    // (ξ-i0)^μ log^j(ξ-i0)
  XiPolyLogPlus,   // ξ^p log^j(ξ+i0), p >= 0 integer
  XiPolyLogMinus,  // ξ^p log^j(ξ-i0), p >= 0 integer
};

std::string freq_family_name(FreqFamily f);

class FreqTerm {
 public:
  static FreqTerm plus_i0(Complex mu, int log_power);
  static FreqTerm minus_i0(Complex mu, int log_power);
  /// ξ^p log^j(ξ±i0). With j = 0 both sides are the same polynomial and the
  /// plus family is used.
  static FreqTerm poly_log(int p, int log_power, bool minus_side = false);

  FreqFamily family() const noexcept { return family_; }
  /// μ for the power families, p for the polynomial families.
  Complex exponent() const noexcept { return exponent_; }
  int poly_degree() const noexcept { return static_cast<int>(exponent_.real()); }
  int log_power() const noexcept { return log_power_; }

  std::strong_ordering operator<=>(const FreqTerm& o) const noexcept;
  bool operator==(const FreqTerm& o) const noexcept {
    return (*this <=> o) == std::strong_ordering::equal;
  }
  bool same_key(const FreqTerm& o) const noexcept;
  std::string to_string() const;

 private:
  FreqTerm(FreqFamily f, Complex e, int j) : family_(f), exponent_(e), log_power_(j) {}
  FreqFamily family_;
  Complex exponent_;
  int log_power_;
};

using FreqTermCoeff = std::pair<FreqTerm, Complex>;

/// Canonical linear combination of frequency terms; same merging and
/// dropping rules as QahdExpr.
class FreqExpr {
 public:
  FreqExpr() = default;
  const std::vector<FreqTermCoeff>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }
  Complex coefficient(const FreqTerm& t) const noexcept;

  friend FreqExpr canonicalize(std::vector<FreqTermCoeff> raw);

 private:
  std::vector<FreqTermCoeff> terms_;
};

FreqExpr canonicalize(std::vector<FreqTermCoeff> raw);

/// Value at ξ in the closed upper half-plane, ξ != 0. Powers and logs of
/// (ξ+i0) use the principal branch; the (ξ-i0) families are defined on the
/// real axis only, where log(ξ-i0) = ln|ξ| - iπ for ξ < 0.
Complex eval_freq(const FreqTerm& term, Complex xi);
Complex eval_freq(const FreqExpr& expr, Complex xi);

/// ∫_0^∞ x^λ log^k x e^{-mx} dx = d^k/dλ^k [Γ(λ+1) m^{-λ-1}] (analytically
/// continued below Re λ = -1).
Complex laplace_moment(Complex lambda, int k, double m);

/// Regularized pairing of P(x_+^{-n} log^k x_+) with e^{-mx}.
Complex pf_laplace_moment(int n, int k, double m, double tol = 1e-12);

enum class FtFamily { XPlus, PfPlus };

struct FtSolution {
  std::vector<Complex> coeffs;  // coefficient of log^j, j = 0, 1, ...
  double condition = 0.0;       // 2-norm condition of the equilibrated system
  double residual = 0.0;        // ||M c - b|| / ||b||
};

/// Coefficients of F[x_+^λ log^k] = Σ_j A_j (ξ+i0)^{-λ-1} log^j(ξ+i0)
/// (j = 0..k) or F[P(x_+^{-n} log^k)] = Σ_j B_j ξ^{n-1} log^j(ξ+i0)
/// (j = 0..k+1), found by substituting ξ = i, 2i, ... and solving the square
/// system. `param` is λ or n.
FtSolution solve_ft_coeffs(FtFamily family, Complex param, int k);

/// A_0..A_k of F[x_+^λ log^k] by differentiating i^{λ+1} Γ(λ+1) (ξ+i0)^{-λ-1}
/// k times in λ.
std::vector<Complex> closed_form_xplus_coeffs(Complex lambda, int k);

/// F[f](ξ) = ∫ f(x) e^{iξx} dx, term by term.
FreqExpr fourier(const QahdExpr& expr);

struct GammaValue {
  int j = 0;
  int order = 0;
  Complex argument;
  Complex value;
};

/// Associated homogeneous Γ-functions
///   Γ_j(λ+1; k) = i^{-λ-1} log^j(i) A_j,    Γ_j(-n+1; k) = i^{n-1} log^j(i) B_j,
/// with log i = iπ/2; the B's belong to P(x_+^{-n} log^{k-1} x_+), the term of
/// order k. A nonpositive integer argument selects the second family.
GammaValue gamma_assoc(int j, Complex argument, int k);

/// Degree and order (highest log power) per homogeneous component.
std::vector<DegreeOrder> degree_order(const FreqExpr& expr);

/// The same distribution of ξ written in the x-space basis, so it can be
/// paired with a test function.
QahdExpr to_qahd(const FreqExpr& expr);

}  // namespace qahd
