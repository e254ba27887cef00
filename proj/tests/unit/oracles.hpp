#pragma once

// Independent reference values for pairings against Gaussian-type test
// functions, built only from the Γ kernel and contour integration.

#include <cmath>
#include <functional>

#include "qahd/gamma.hpp"

namespace qahd::testing {

/// ⟨x_+^λ log^k x_+, x^j e^{-x²}⟩ = ½ (½)^k Γ^{(k)}((λ+j+1)/2).
inline Complex gaussian_moment(Complex lambda, int k, int j) {
  const auto d = loggamma_derivs((lambda + double(j) + 1.0) / 2.0, k);
  return 0.5 * std::pow(0.5, k) * d[k];
}

/// k! times the k-th Laurent coefficient of F at z0, by the trapezoid rule on
/// a circle of radius r (exponentially accurate for analytic F on the annulus).
inline Complex laurent_derivative(const std::function<Complex(Complex)>& F, Complex z0, int k,
                                  double r = 0.5, int points = 128) {
  Complex s = 0.0;
  for (int p = 0; p < points; ++p) {
    const Complex w = std::polar(r, 2.0 * kPi * p / points);
    s += F(z0 + w) / std::pow(w, k);
  }
  double kf = 1.0;
  for (int i = 2; i <= k; ++i) kf *= i;
  return kf * s / double(points);
}

/// ⟨P(x_+^{-n} log^k x_+), x^j e^{-x²}⟩ from the Laurent expansion of
/// ⟨x_+^λ, x^j e^{-x²}⟩ at λ = -n.
inline Complex gaussian_pf_moment(int n, int k, int j) {
  auto F = [j](Complex l) { return 0.5 * cgamma((l + double(j) + 1.0) / 2.0); };
  return laurent_derivative(F, Complex(-n, 0), k);
}

/// ⟨P(x_+^{-n} log^k x_+), e^{-mx}⟩ from the Laurent expansion of Γ(λ+1) m^{-λ-1}.
inline Complex exponential_pf_moment(int n, int k, double m) {
  auto F = [m](Complex l) { return cgamma(l + 1.0) * std::exp(-(l + 1.0) * std::log(m)); };
  return laurent_derivative(F, Complex(-n, 0), k);
}

}  // namespace qahd::testing
