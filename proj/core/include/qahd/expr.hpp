#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qahd/constants.hpp"

namespace qahd {

enum class Family {
  XPlusLog,    // x_+^λ log^k x_+
  XMinusLog,   // x_-^λ log^k x_-
  PfPlusLog,   // P(x_+^{-n} log^k x_+)
  PfMinusLog,  // P(x_-^{-n} log^k x_-)
  DeltaDeriv,  // δ^{(m)}
};

std::string family_name(Family f);

/// One basis distribution of the one-dimensional class of quasi associated
/// homogeneous distributions.
///
/// Instances are only created through the named factories, which enforce the
/// invariants: the power family stays at least kPoleEps away from the poles
/// λ = -1, -2, ...; pole orders are >= 1; log powers and delta orders >= 0.
class QahdTerm {
 public:
  static QahdTerm xplus(Complex degree, int log_power);
  static QahdTerm xminus(Complex degree, int log_power);
  static QahdTerm pfplus(int pole_order, int log_power);
  static QahdTerm pfminus(int pole_order, int log_power);
  static QahdTerm delta(int order);

  Family family() const noexcept { return family_; }

  /// Effective homogeneity degree: λ, -n or -m-1 depending on the family.
  Complex degree() const noexcept { return degree_; }

  int pole_order() const noexcept { return index_; }   // pf families
  int delta_order() const noexcept { return index_; }  // delta family
  int log_power() const noexcept { return log_power_; }

  /// Order in the QAHD sense: k for x_±^λ log^k, k+1 for P(x_±^{-n} log^k),
  /// 0 for δ^{(m)}.
  int order() const noexcept;

  bool is_power() const noexcept {
    return family_ == Family::XPlusLog || family_ == Family::XMinusLog;
  }
  bool is_pf() const noexcept {
    return family_ == Family::PfPlusLog || family_ == Family::PfMinusLog;
  }
  bool is_minus() const noexcept {
    return family_ == Family::XMinusLog || family_ == Family::PfMinusLog;
  }

  /// Same family and parameters, log power replaced.
  QahdTerm with_log_power(int log_power) const;

  /// Total order used for canonical storage. Degrees compare exactly here;
  /// merging within kMergeEps happens in canonicalize().
  std::strong_ordering operator<=>(const QahdTerm& other) const noexcept;
  bool operator==(const QahdTerm& other) const noexcept {
    return (*this <=> other) == std::strong_ordering::equal;
  }

  /// Equal up to kMergeEps in the degree.
  bool same_key(const QahdTerm& other) const noexcept;

  std::string to_string() const;

 private:
  QahdTerm(Family f, Complex degree, int index, int log_power)
      : family_(f), degree_(degree), index_(index), log_power_(log_power) {}

  Family family_;
  Complex degree_;
  int index_;  // n for pf, m for delta, unused (0) for power families
  int log_power_;
};

using TermCoeff = std::pair<QahdTerm, Complex>;

/// Finite linear combination of basis terms with complex coefficients, kept
/// in canonical form: sorted, merged, no negligible coefficients. The empty
/// expression is the zero distribution.
class QahdExpr {
 public:
  QahdExpr() = default;
  QahdExpr(const QahdTerm& term, Complex coeff = 1.0);  // NOLINT(implicit)

  const std::vector<TermCoeff>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  /// Coefficient of `term` (matched with kMergeEps on the degree), 0 if absent.
  Complex coefficient(const QahdTerm& term) const noexcept;

  QahdExpr operator+(const QahdExpr& rhs) const;
  QahdExpr operator-(const QahdExpr& rhs) const;
  QahdExpr operator-() const;
  QahdExpr& operator+=(const QahdExpr& rhs);
  friend QahdExpr operator*(Complex c, const QahdExpr& e);

  /// Bitwise equality of the canonical representation.
  bool operator==(const QahdExpr& rhs) const = default;

 private:
  friend QahdExpr canonicalize(std::span<const TermCoeff> raw);
  std::vector<TermCoeff> terms_;
};

QahdExpr canonicalize(std::span<const TermCoeff> raw);
QahdExpr canonicalize(std::initializer_list<TermCoeff> raw);

/// Same keys and coefficients agreeing to `rel_tol` relative to the largest
/// coefficient magnitude of either side.
bool approx_equal(const QahdExpr& a, const QahdExpr& b, double rel_tol);

struct DegreeOrder {
  Complex degree;
  int order = 0;
};

/// Splits an expression into its degree-homogeneous components, ordered by
/// (Re, Im) of the degree.
std::vector<QahdExpr> components(const QahdExpr& expr);

/// True when all terms of `expr` share one degree.
bool is_single_component(const QahdExpr& expr);

/// Distance from z to the nearest negative integer (infinity if Re z >= -0.5
/// and the nearest candidate would be non-negative).
double distance_to_negative_integer(Complex z) noexcept;

double binomial(int n, int k) noexcept;
double factorial(int n) noexcept;

}  // namespace qahd
