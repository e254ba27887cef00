#pragma once

#include <vector>

#include "qahd/constants.hpp"

namespace qahd {

/// Γ(z) for complex z away from the poles 0, -1, -2, ... (PoleArgument
/// within kPoleEps of one). Lanczos approximation with reflection for
/// Re z < 1/2.
Complex cgamma(Complex z);

/// log Γ(z) on some branch; only exp() of it is meaningful.
Complex lgamma_any_branch(Complex z);

/// ψ^{(n)}(z), the n-th derivative of the digamma function (n = 0 is ψ).
Complex polygamma(int n, Complex z);

/// [Γ(z), Γ'(z), ..., Γ^{(k)}(z)], assembled from polygamma values through
/// Γ^{(j+1)} = Σ_i C(j, i) ψ^{(i)} Γ^{(j-i)}. Requires k <= 8.
std::vector<Complex> loggamma_derivs(Complex z, int k);

}  // namespace qahd
