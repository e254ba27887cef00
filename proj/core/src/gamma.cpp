#include "qahd/gamma.hpp"

#include <array>
#include <cmath>

#include "qahd/error.hpp"
#include "qahd/expr.hpp"

namespace qahd {

namespace {

constexpr int kMaxDerivs = 8;

// g = 671/128, 14 terms.
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

// B_2, B_4, ..., B_24
constexpr std::array<double, 12> kBernoulli = {
    1.0 / 6.0,         -1.0 / 30.0,    1.0 / 42.0,        -1.0 / 30.0,
    5.0 / 66.0,        -691.0 / 2730.0, 7.0 / 6.0,        -3617.0 / 510.0,
    43867.0 / 798.0,   -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0};

void check_pole(Complex z) {
  const double nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) <= kPoleEps) {
    throw Error(ErrorKind::PoleArgument, "argument is at a pole of the gamma function");
  }
}

Complex lanczos_lgamma(Complex z) {
  Complex y = z;
  Complex tmp = z + 5.24218750000000000;
  tmp = (z + 0.5) * std::log(tmp) - tmp;
  Complex ser = 0.999999999999997092;
  for (double c : kLanczos) {
    y += 1.0;
    ser += c / y;
  }
  return tmp + std::log(2.5066282746310005 * ser / z);
}

}  // namespace

Complex lgamma_any_branch(Complex z) {
  check_pole(z);
  if (z.real() < 0.5) {
    // Γ(z) Γ(1-z) = π / sin(πz)
    return std::log(kPi / std::sin(kPi * z)) - lanczos_lgamma(1.0 - z);
  }
  return lanczos_lgamma(z);
}

Complex cgamma(Complex z) {
  check_pole(z);
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * std::exp(lanczos_lgamma(1.0 - z)));
  return std::exp(lanczos_lgamma(z));
}

Complex polygamma(int n, Complex z) {
  if (n < 0) throw Error(ErrorKind::PreconditionViolation, "polygamma order must be >= 0");
  check_pole(z);
  const double sign_n = n % 2 == 0 ? 1.0 : -1.0;
  const double n_fact = factorial(n);
  // Recurrence ψ^{(n)}(z) = ψ^{(n)}(z+1) - (-1)^n n! / z^{n+1}, until the
  // asymptotic series is accurate.
  Complex shift_sum = 0.0;
  while (z.real() < 20.0 || std::abs(z) < 25.0) {
    shift_sum += 1.0 / std::pow(z, n + 1);
    z += 1.0;
  }
  shift_sum *= -sign_n * n_fact;

  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex asym;
  if (n == 0) {
    asym = std::log(z) - 0.5 * inv;
    Complex p = inv2;
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k, p *= inv2) {
      asym -= kBernoulli[k - 1] / (2.0 * k) * p;
    }
  } else {
    // (-1)^{n+1} [ (n-1)!/z^n + n!/(2 z^{n+1}) + Σ_k B_{2k} (2k+n-1)!/((2k)! z^{2k+n}) ]
    const Complex zn = std::pow(inv, n);
    Complex s = factorial(n - 1) * zn + 0.5 * n_fact * zn * inv;
    Complex p = zn * inv2;
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k, p *= inv2) {
      double ratio = 1.0;  // (2k+n-1)! / (2k)!
      for (int i = static_cast<int>(2 * k) + 1; i <= static_cast<int>(2 * k) + n - 1; ++i) ratio *= i;
      s += kBernoulli[k - 1] * ratio * p;
    }
    asym = -sign_n * s;
  }
  return asym + shift_sum;
}

std::vector<Complex> loggamma_derivs(Complex z, int k) {
  if (k < 0 || k > kMaxDerivs) {
    throw Error(ErrorKind::PreconditionViolation, "derivative order must lie in 0..8");
  }
  const Complex g = cgamma(z);
  std::vector<Complex> psi(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) psi[i] = polygamma(i, z);
  // G_j = Γ^{(j)} / Γ
  std::vector<Complex> G(static_cast<std::size_t>(k) + 1);
  G[0] = 1.0;
  for (int j = 0; j < k; ++j) {
    Complex s = 0.0;
    for (int i = 0; i <= j; ++i) s += binomial(j, i) * psi[i] * G[j - i];
    G[j + 1] = s;
  }
  for (auto& v : G) v *= g;
  return G;
}

}  // namespace qahd
