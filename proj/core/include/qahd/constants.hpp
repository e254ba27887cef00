#pragma once

#include <complex>
#include <numbers>

namespace qahd {

using Complex = std::complex<double>;

/// Degrees of the x_+/x_- family closer than this to a negative integer are
/// rejected (the regularized pairing has a pole there).
inline constexpr double kPoleEps = 1e-6;

/// Floating degrees closer than this are treated as equal when merging.
inline constexpr double kMergeEps = 1e-12;

/// A merged coefficient is dropped when its magnitude falls below this
/// fraction of the magnitudes that were summed into it.
inline constexpr double kDropEps = 1e-14;

/// Singular-value ratio below which a pairing matrix counts as rank deficient.
inline constexpr double kIndepEps = 1e-8;

/// Largest condition number accepted for the Fourier coefficient system.
inline constexpr double kCondMax = 1e8;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kPanelBudget = 2000;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;
inline constexpr Complex kI{0.0, 1.0};

}  // namespace qahd
