#pragma once

#include <vector>

#include "qahd/expr.hpp"

namespace qahd {

/// a^λ for a > 0, taken as exp(λ ln a) with the real logarithm.
Complex scale_power(double a, Complex lambda);

/// Exact symbolic image of f(x) ↦ f(ax), a > 0.
QahdExpr dilate(const QahdExpr& expr, double a);

/// Log-power decomposition of one basis term under dilation:
///   t(ax) = a^λ Σ_{r=0}^{R} log^r(a) · result[r].
/// result[0] is the term itself; R is the term's order.
std::vector<QahdExpr> dilation_log_coefficients(const QahdTerm& term);

/// f_k(ax) = a^λ f_k(x) + Σ_{r=1}^{k} a^λ log^r a · companions[r-1].
struct ScalingExpansion {
  Complex degree;
  int order = 0;
  QahdExpr component;               // f_k itself
  std::vector<QahdExpr> companions;  // length == order
};

/// One expansion per degree-homogeneous component. The order is the highest
/// log power whose companion does not vanish, so combinations whose companions
/// cancel (e.g. the principal value P(1/x)) come out homogeneous.
std::vector<ScalingExpansion> scaling_expansion(const QahdExpr& expr);

/// Expansion of an expression that must consist of a single component.
ScalingExpansion single_scaling_expansion(const QahdExpr& expr);

std::vector<DegreeOrder> degree_order(const QahdExpr& expr);

/// ∂/∂λ of x_±^λ log^k x_±, which raises the log power (and the order) by one.
QahdTerm d_dlambda(const QahdTerm& term);

enum class I0Side { Plus, Minus };

/// (x ± i0)^λ log^k(x ± i0) written in the canonical basis.
QahdExpr expand_i0(I0Side side, Complex lambda, int log_power);

enum class AsymptoticPoint { Zero, Infinity };

struct QuasiAsymptotic {
  Complex automodel_degree;
  int automodel_log_power = 0;
  QahdExpr limit;
};

/// Leading dilation behaviour of a single-component expression of order k:
/// at infinity f(ax) ~ a^λ log^k a · f_0, at zero f(x/a) ~ (-1)^k a^{-λ} log^k a · f_0.
/// A homogeneous component is its own limit with log power 0.
QuasiAsymptotic quasi_asymptotics(const QahdExpr& expr, AsymptoticPoint at);

}  // namespace qahd
