#include "qahd/test_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qahd/error.hpp"
#include "qahd/expr.hpp"

namespace qahd {

namespace {

constexpr double kSeriesRadius = 0.5;
constexpr int kMaxHermiteDegree = 12;

Complex horner(const std::vector<Complex>& p, Complex u) {
  Complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * u + *it;
  return acc;
}

void trim(std::vector<Complex>& p) {
  while (p.size() > 1 && p.back() == Complex{}) p.pop_back();
  if (p.empty()) p.push_back(0.0);
}

std::string hermite_label(const std::vector<double>& coeffs) {
  std::ostringstream os;
  os.precision(17);
  os << "hermite:";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  return os.str();
}

}  // namespace

TestFunction::TestFunction(std::vector<Complex> poly, double length, Envelope env,
                           std::string label)
    : poly_(std::move(poly)), length_(length), envelope_(env), label_(std::move(label)) {
  trim(poly_);
  if (!(length_ != 0.0) || !std::isfinite(length_)) {
    throw Error(ErrorKind::PreconditionViolation, "test function length must be finite and nonzero");
  }
  for (auto c : poly_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorKind::PreconditionViolation, "test function coefficients must be finite");
    }
  }
  // Taylor coefficients of exp(-γu² - ηu): j e_j = -η e_{j-1} - 2γ e_{j-2}.
  const int n_terms = static_cast<int>(poly_.size()) + 64;
  std::vector<double> env_series(static_cast<std::size_t>(n_terms), 0.0);
  env_series[0] = 1.0;
  const double g = quad_coeff(), h = lin_coeff();
  for (int j = 1; j < n_terms; ++j) {
    double v = -h * env_series[j - 1];
    if (j >= 2) v -= 2.0 * g * env_series[j - 2];
    env_series[j] = v / j;
  }
  series_.assign(static_cast<std::size_t>(n_terms), 0.0);
  for (std::size_t i = 0; i < poly_.size(); ++i) {
    for (std::size_t j = 0; i + j < series_.size(); ++j) series_[i + j] += poly_[i] * env_series[j];
  }
}

TestFunction TestFunction::hermite(const std::vector<double>& coeffs) {
  if (coeffs.empty()) {
    throw Error(ErrorKind::PreconditionViolation, "hermite test function needs at least one coefficient");
  }
  if (static_cast<int>(coeffs.size()) > kMaxHermiteDegree + 1) {
    throw Error(ErrorKind::PreconditionViolation, "hermite degree is limited to 12");
  }
  // He_{j+1} = x He_j - j He_{j-1}
  std::vector<std::vector<double>> he{{1.0}, {0.0, 1.0}};
  for (std::size_t j = 1; j + 1 < coeffs.size(); ++j) {
    std::vector<double> next(j + 2, 0.0);
    for (std::size_t i = 0; i < he[j].size(); ++i) next[i + 1] += he[j][i];
    for (std::size_t i = 0; i < he[j - 1].size(); ++i) next[i] -= static_cast<double>(j) * he[j - 1][i];
    he.push_back(std::move(next));
  }
  std::vector<Complex> poly(coeffs.size(), 0.0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    for (std::size_t i = 0; i < he[j].size(); ++i) poly[i] += coeffs[j] * he[j][i];
  }
  return TestFunction(std::move(poly), 1.0, Envelope::Gaussian, hermite_label(coeffs));
}

TestFunction TestFunction::gaussian(std::vector<Complex> poly, double length) {
  return TestFunction(std::move(poly), length, Envelope::Gaussian, "gaussian");
}

TestFunction TestFunction::exponential(double rate) {
  if (!(rate > 0.0)) {
    throw Error(ErrorKind::PreconditionViolation, "exponential rate must be positive");
  }
  std::ostringstream os;
  os.precision(17);
  os << "exp:" << rate;
  return TestFunction({1.0}, 1.0 / rate, Envelope::Exponential, os.str());
}

Complex TestFunction::value(double x) const {
  const double u = x / length_;
  return horner(poly_, u) * std::exp(-quad_coeff() * u * u - lin_coeff() * u);
}

Complex TestFunction::value(Complex z) const {
  const Complex u = z / length_;
  return horner(poly_, u) * std::exp(-quad_coeff() * u * u - lin_coeff() * u);
}

Complex TestFunction::deriv_at_zero(int j) const {
  if (j < 0) throw Error(ErrorKind::PreconditionViolation, "derivative order must be >= 0");
  if (static_cast<std::size_t>(j) >= series_.size()) {
    throw Error(ErrorKind::PreconditionViolation, "derivative order beyond the stored Taylor series");
  }
  return series_[static_cast<std::size_t>(j)] * (factorial(j) / std::pow(length_, j));
}

Complex TestFunction::taylor_remainder(double x, int n) const {
  const double u = x / length_;
  if (n <= 0) return value(x);
  if (static_cast<std::size_t>(n) >= series_.size()) {
    throw Error(ErrorKind::PreconditionViolation, "subtraction order beyond the stored Taylor series");
  }
  if (std::abs(u) <= kSeriesRadius) {
    Complex acc = 0.0;
    for (std::size_t j = series_.size(); j-- > static_cast<std::size_t>(n);) acc = acc * u + series_[j];
    return acc * std::pow(u, n);
  }
  Complex head = 0.0;
  for (int j = n; j-- > 0;) head = head * u + series_[static_cast<std::size_t>(j)];
  return value(x) - head;
}

TestFunction TestFunction::scaled(double a) const {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error(ErrorKind::NonPositiveScale, "test-function scale must be positive");
  }
  std::ostringstream os;
  os.precision(17);
  os << label_ << "|x/" << a;
  return TestFunction(poly_, length_ * a, envelope_, os.str());
}

TestFunction TestFunction::reflected() const {
  return TestFunction(poly_, -length_, envelope_, label_ + "|-x");
}

TestFunction TestFunction::x_times_derivative() const {
  // x d/dx = u d/du;  d/du [p e^{-γu²-ηu}] = (p' - (2γu + η) p) e^{...}
  const double g = quad_coeff(), h = lin_coeff();
  std::vector<Complex> dp(poly_.size() + 1, 0.0);
  for (std::size_t i = 1; i < poly_.size(); ++i) dp[i - 1] += static_cast<double>(i) * poly_[i];
  for (std::size_t i = 0; i < poly_.size(); ++i) {
    dp[i] -= h * poly_[i];
    dp[i + 1] -= 2.0 * g * poly_[i];
  }
  std::vector<Complex> q(dp.size() + 1, 0.0);
  for (std::size_t i = 0; i < dp.size(); ++i) q[i + 1] = dp[i];
  return TestFunction(std::move(q), length_, envelope_, label_ + "|x*d/dx");
}

TestFunction TestFunction::fourier() const {
  if (envelope_ != Envelope::Gaussian) {
    throw Error(ErrorKind::PreconditionViolation, "closed-form Fourier transform needs a Gaussian envelope");
  }
  // F[y^j e^{-y²}](ω) = Q_j(ω) e^{-ω²/4},  Q_0 = √π,  Q_j = -i (Q_{j-1}' - ω Q_{j-1} / 2).
  std::vector<std::vector<Complex>> q{{std::sqrt(kPi)}};
  for (std::size_t j = 1; j < poly_.size(); ++j) {
    const auto& prev = q.back();
    std::vector<Complex> next(prev.size() + 1, 0.0);
    for (std::size_t i = 1; i < prev.size(); ++i) next[i - 1] += static_cast<double>(i) * prev[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + 1] -= 0.5 * prev[i];
    for (auto& c : next) c *= -kI;
    q.push_back(std::move(next));
  }
  // φ(x) = p(x/L) e^{-(x/L)²}: F[φ](ξ) = |L| Σ p_j Q_j(Lξ) e^{-(Lξ)²/4}; with v = Lξ/2 the
  // result is again of the family with length 2/L.
  std::vector<Complex> out(poly_.size(), 0.0);
  for (std::size_t j = 0; j < poly_.size(); ++j) {
    for (std::size_t i = 0; i < q[j].size(); ++i) out[i] += poly_[j] * q[j][i];
  }
  double pow2 = 1.0;
  for (auto& c : out) {
    c *= std::abs(length_) * pow2;
    pow2 *= 2.0;
  }
  return TestFunction(std::move(out), 2.0 / length_, Envelope::Gaussian, "F[" + label_ + "]");
}

double TestFunction::positive_cutoff(double weight_power, int log_power) const {
  const double dir = length_ > 0.0 ? 1.0 : -1.0;
  if (envelope_ == Envelope::Exponential && dir < 0.0) {
    throw Error(ErrorKind::PreconditionViolation,
                "exponential test function grows on this half-line: " + label_);
  }
  const double g = quad_coeff(), h = lin_coeff();
  const double len = std::abs(length_);
  auto bound = [&](double s) {
    double pm = 0.0, sp = 1.0;
    for (auto c : poly_) {
      pm += std::abs(c) * sp;
      sp *= s;
    }
    const double x = len * s;
    return pm * std::exp(-g * s * s - h * dir * s) * std::pow(x, weight_power) *
           std::pow(1.0 + std::abs(std::log(x)), log_power);
  };
  double peak = 0.0;
  for (double s = 0.25;; s += 0.25) {
    const double b = bound(s);
    peak = std::max(peak, b);
    if (s >= 2.0 && b <= 1e-22 * peak) return len * s;
    if (s > 4000.0) {
      throw Error(ErrorKind::PreconditionViolation, "test function does not decay: " + label_);
    }
  }
}

}  // namespace qahd
