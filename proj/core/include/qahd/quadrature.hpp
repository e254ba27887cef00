#pragma once

#include <functional>

#include "qahd/constants.hpp"

namespace qahd {

struct QuadratureResult {
  Complex value;
  double abs_error = 0.0;
  double abs_integral = 0.0;  // ∫|f|, the scale the error is judged against
  int panels = 0;
};

/// Globally adaptive 10-point Gauss / 21-point Kronrod quadrature of a
/// complex-valued integrand on the finite interval [a, b].
///
/// The interval starts out cut into unit-length panels; the panel with the
/// largest error estimate is bisected until
///   err <= max(tol |I|, 1e-3 tol ∫|f|, 100 eps ∫|f|)
/// or the panel budget is exhausted, in which case QuadratureFailure is thrown.
QuadratureResult integrate(const std::function<Complex(double)>& f, double a, double b,
                           double tol, int panel_budget = kPanelBudget);

}  // namespace qahd
