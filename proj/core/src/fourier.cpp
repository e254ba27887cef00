#include "qahd/fourier.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "qahd/algebra.hpp"
#include "qahd/error.hpp"
#include "qahd/gamma.hpp"
#include "qahd/pairing.hpp"
#include "qahd/test_function.hpp"

namespace qahd {

namespace {

std::strong_ordering cmp_double(double a, double b) noexcept {
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

void check_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorKind::InvalidTerm, std::string(what) + " must be finite");
  }
}

Complex ipow(Complex z, int n) {
  Complex r = 1.0;
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

// i^s on the principal branch.
Complex i_power(Complex s) { return std::exp(s * Complex(0.0, kPi / 2.0)); }

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

}  // namespace

std::string freq_family_name(FreqFamily f) {
  switch (f) {
    case FreqFamily::XiPlusI0Pow: return "xiplusi0";
    case FreqFamily::XiMinusI0Pow: return "ximinusi0";
    case FreqFamily::XiPolyLogPlus: return "xipolylog";
    case FreqFamily::XiPolyLogMinus: return "xipolylogminus";
  }
  return "?";
}

FreqTerm FreqTerm::plus_i0(Complex mu, int log_power) {
  check_finite(mu, "exponent");
  if (log_power < 0) throw Error(ErrorKind::InvalidTerm, "log power must be non-negative");
  return FreqTerm(FreqFamily::XiPlusI0Pow, mu, log_power);
}

FreqTerm FreqTerm::minus_i0(Complex mu, int log_power) {
  FreqTerm t = plus_i0(mu, log_power);
  t.family_ = FreqFamily::XiMinusI0Pow;
  return t;
}

FreqTerm FreqTerm::poly_log(int p, int log_power, bool minus_side) {
  if (p < 0) throw Error(ErrorKind::InvalidTerm, "polynomial degree must be non-negative");
  if (log_power < 0) throw Error(ErrorKind::InvalidTerm, "log power must be non-negative");
  const auto fam = minus_side && log_power > 0 ? FreqFamily::XiPolyLogMinus : FreqFamily::XiPolyLogPlus;
  return FreqTerm(fam, Complex(p, 0.0), log_power);
}

std::strong_ordering FreqTerm::operator<=>(const FreqTerm& o) const noexcept {
  if (auto c = static_cast<int>(family_) <=> static_cast<int>(o.family_); c != 0) return c;
  if (auto c = cmp_double(exponent_.real(), o.exponent_.real()); c != 0) return c;
  if (auto c = cmp_double(exponent_.imag(), o.exponent_.imag()); c != 0) return c;
  return log_power_ <=> o.log_power_;
}

bool FreqTerm::same_key(const FreqTerm& o) const noexcept {
  return family_ == o.family_ && log_power_ == o.log_power_ &&
         std::abs(exponent_ - o.exponent_) <= kMergeEps;
}

std::string FreqTerm::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << freq_family_name(family_) << '(';
  if (family_ == FreqFamily::XiPlusI0Pow || family_ == FreqFamily::XiMinusI0Pow) {
    os << exponent_.real();
    if (exponent_.imag() != 0.0) os << (exponent_.imag() < 0 ? "" : "+") << exponent_.imag() << 'i';
  } else {
    os << poly_degree();
  }
  os << ',' << log_power_ << ')';
  return os.str();
}

FreqExpr canonicalize(std::vector<FreqTermCoeff> raw) {
  struct Group {
    FreqTerm term;
    Complex sum;
    double magnitude;
  };
  std::vector<Group> groups;
  for (const auto& [term, coeff] : raw) {
    check_finite(coeff, "coefficient");
    if (coeff == Complex{}) continue;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& g) { return g.term.same_key(term); });
    if (it == groups.end()) {
      groups.push_back({term, coeff, std::abs(coeff)});
    } else {
      it->sum += coeff;
      it->magnitude += std::abs(coeff);
    }
  }
  FreqExpr out;
  for (const auto& g : groups) {
    if (g.sum == Complex{} || std::abs(g.sum) <= kDropEps * g.magnitude) continue;
    out.terms_.emplace_back(g.term, g.sum);
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const FreqTermCoeff& a, const FreqTermCoeff& b) { return a.first < b.first; });
  return out;
}

Complex FreqExpr::coefficient(const FreqTerm& t) const noexcept {
  for (const auto& [u, c] : terms_) {
    if (u.same_key(t)) return c;
  }
  return {};
}

Complex eval_freq(const FreqTerm& term, Complex xi) {
  if (xi == Complex{}) throw Error(ErrorKind::ZeroFrequency, "frequency terms are singular at ξ = 0");
  if (xi.imag() < 0.0) {
    throw Error(ErrorKind::BranchUnsupported, "ξ must lie in the closed upper half-plane");
  }
  if (xi.imag() == 0.0) xi = Complex(xi.real(), 0.0);  // -0.0 would select the lower branch
  const bool minus = term.family() == FreqFamily::XiMinusI0Pow ||
                     term.family() == FreqFamily::XiPolyLogMinus;
  if (minus && xi.imag() != 0.0) {
    throw Error(ErrorKind::BranchUnsupported, "(ξ-i0) terms are defined on the real axis only");
  }
  Complex log_xi = std::log(xi);
  if (minus && xi.real() < 0.0) log_xi = Complex(std::log(-xi.real()), -kPi);
  const Complex log_pow = ipow(log_xi, term.log_power());
  switch (term.family()) {
    case FreqFamily::XiPlusI0Pow:
    case FreqFamily::XiMinusI0Pow: return std::exp(term.exponent() * log_xi) * log_pow;
    case FreqFamily::XiPolyLogPlus:
    case FreqFamily::XiPolyLogMinus: return ipow(xi, term.poly_degree()) * log_pow;
  }
  return {};
}

Complex eval_freq(const FreqExpr& expr, Complex xi) {
  Complex s = 0.0;
  for (const auto& [t, c] : expr) s += c * eval_freq(t, xi);
  return s;
}

Complex laplace_moment(Complex lambda, int k, double m) {
  if (!(m > 0.0)) throw Error(ErrorKind::PreconditionViolation, "Laplace variable must be positive");
  if (k < 0) throw Error(ErrorKind::PreconditionViolation, "log power must be non-negative");
  const auto g = loggamma_derivs(lambda + 1.0, k);
  const double neg_log_m = -std::log(m);
  Complex s = 0.0;
  for (int j = 0; j <= k; ++j) s += binomial(k, j) * g[j] * std::pow(neg_log_m, k - j);
  return s * std::exp(-(lambda + 1.0) * std::log(m));
}

Complex pf_laplace_moment(int n, int k, double m, double tol) {
  return pair_term(QahdTerm::pfplus(n, k), TestFunction::exponential(m), tol).value;
}

FtSolution solve_ft_coeffs(FtFamily family, Complex param, int k) {
  if (k < 0) throw Error(ErrorKind::PreconditionViolation, "log power must be non-negative");
  const bool pf = family == FtFamily::PfPlus;
  const int size = pf ? k + 2 : k + 1;
  if (size > 8) throw Error(ErrorKind::PreconditionViolation, "coefficient systems are limited to size 8");
  int n = 0;
  Complex mu;
  if (pf) {
    if (param.imag() != 0.0 || param.real() != std::round(param.real()) || param.real() < 1.0) {
      throw Error(ErrorKind::InvalidTerm, "pole order must be a positive integer");
    }
    n = static_cast<int>(param.real());
    mu = Complex(n - 1, 0.0);
  } else {
    if (distance_to_negative_integer(param) <= kPoleEps) {
      throw Error(ErrorKind::PoleArgument, "degree lies on a pole; use the P family");
    }
    mu = -param - 1.0;
  }

  // Row m: F[f](i m) = ⟨f, e^{-m x}⟩ against the basis at ξ = i m, both divided
  // by (i m)^μ so every row is O(1).
  Eigen::MatrixXcd M(size, size);
  Eigen::VectorXcd b(size);
  for (int r = 0; r < size; ++r) {
    const double m = r + 1.0;
    const Complex xi(0.0, m);
    const Complex log_xi = std::log(xi);
    const Complex scale = std::exp(mu * log_xi);
    for (int j = 0; j < size; ++j) M(r, j) = ipow(log_xi, j);
    b(r) = (pf ? pf_laplace_moment(n, k, m) : laplace_moment(param, k, m)) / scale;
  }
  Eigen::VectorXd col_scale(size);
  for (int j = 0; j < size; ++j) {
    col_scale(j) = M.col(j).norm();
    M.col(j) /= col_scale(j);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto& sv = svd.singularValues();
  FtSolution sol;
  sol.condition = sv(0) / sv(size - 1);
  if (!(sol.condition <= kCondMax)) {
    std::ostringstream os;
    os << "coefficient system has condition number " << sol.condition << " > " << kCondMax;
    throw Error(ErrorKind::IllConditioned, os.str());
  }
  const Eigen::VectorXcd x = M.fullPivLu().solve(b);
  sol.residual = (M * x - b).norm() / std::max(b.norm(), std::numeric_limits<double>::min());
  sol.coeffs.resize(static_cast<std::size_t>(size));
  for (int j = 0; j < size; ++j) sol.coeffs[j] = x(j) / col_scale(j);
  return sol;
}

std::vector<Complex> closed_form_xplus_coeffs(Complex lambda, int k) {
  // d^k/dλ^k [Γ(λ+1) e^{iπ(λ+1)/2} e^{-(λ+1) L}], L = log(ξ+i0):
  //   A_l = i^{λ+1} (-1)^l Σ_{j>=l} C(k,j) C(j,l) Γ^{(k-j)}(λ+1) (iπ/2)^{j-l}
  const auto g = loggamma_derivs(lambda + 1.0, k);
  const Complex half_ipi(0.0, kPi / 2.0);
  const Complex front = i_power(lambda + 1.0);
  std::vector<Complex> a(static_cast<std::size_t>(k) + 1);
  for (int l = 0; l <= k; ++l) {
    Complex s = 0.0;
    for (int j = l; j <= k; ++j) s += binomial(k, j) * binomial(j, l) * g[k - j] * ipow(half_ipi, j - l);
    a[l] = front * (l % 2 == 0 ? 1.0 : -1.0) * s;
  }
  return a;
}

namespace {

std::vector<Complex> xplus_coeffs(Complex lambda, int k) {
  if (k == 0) return {i_power(lambda + 1.0) * cgamma(lambda + 1.0)};
  return solve_ft_coeffs(FtFamily::XPlus, lambda, k).coeffs;
}

// Σ_l c_l (log(ξ-i0) + iπ)^l expanded in powers of log(ξ-i0).
std::vector<Complex> shift_logs(const std::vector<Complex>& c) {
  std::vector<Complex> out(c.size(), 0.0);
  const Complex ipi(0.0, kPi);
  for (std::size_t l = 0; l < c.size(); ++l) {
    for (std::size_t r = 0; r <= l; ++r) {
      out[r] += c[l] * binomial(static_cast<int>(l), static_cast<int>(r)) * ipow(ipi, static_cast<int>(l - r));
    }
  }
  return out;
}

}  // namespace

FreqExpr fourier(const QahdExpr& expr) {
  std::vector<FreqTermCoeff> raw;
  for (const auto& [term, coeff] : expr) {
    const int k = term.log_power();
    switch (term.family()) {
      case Family::XPlusLog: {
        const Complex mu = -term.degree() - 1.0;
        const auto a = xplus_coeffs(term.degree(), k);
        for (int j = 0; j <= k; ++j) raw.emplace_back(FreqTerm::plus_i0(mu, j), coeff * a[j]);
        break;
      }
      case Family::XMinusLog: {
        // F[f(-x)](ξ) = F[f](-ξ); (-ξ+i0)^μ = e^{iπμ} (ξ-i0)^μ, log(-ξ+i0) = log(ξ-i0) + iπ.
        const Complex mu = -term.degree() - 1.0;
        const auto a = shift_logs(xplus_coeffs(term.degree(), k));
        const Complex phase = std::exp(Complex(0.0, kPi) * mu);
        for (int j = 0; j <= k; ++j) raw.emplace_back(FreqTerm::minus_i0(mu, j), coeff * phase * a[j]);
        break;
      }
      case Family::PfPlusLog: {
        const int n = term.pole_order();
        const auto b = solve_ft_coeffs(FtFamily::PfPlus, Complex(n, 0.0), k).coeffs;
        for (int j = 0; j <= k + 1; ++j) raw.emplace_back(FreqTerm::poly_log(n - 1, j), coeff * b[j]);
        break;
      }
      case Family::PfMinusLog: {
        const int n = term.pole_order();
        const auto b = shift_logs(solve_ft_coeffs(FtFamily::PfPlus, Complex(n, 0.0), k).coeffs);
        const double sign = (n - 1) % 2 == 0 ? 1.0 : -1.0;
        for (int j = 0; j <= k + 1; ++j) {
          raw.emplace_back(FreqTerm::poly_log(n - 1, j, true), coeff * sign * b[j]);
        }
        break;
      }
      case Family::DeltaDeriv: {
        const int m = term.delta_order();
        raw.emplace_back(FreqTerm::poly_log(m, 0), coeff * ipow(Complex(0.0, -1.0), m));
        break;
      }
    }
  }
  return canonicalize(std::move(raw));
}

GammaValue gamma_assoc(int j, Complex argument, int k) {
  if (k < 0 || j < 0 || j > k) throw Error(ErrorKind::PreconditionViolation, "need 0 <= j <= k");
  check_finite(argument, "argument");
  GammaValue gv{j, k, argument, 0.0};
  const Complex log_i_pow = ipow(Complex(0.0, kPi / 2.0), j);
  if (is_nonpositive_integer(argument)) {
    if (k < 1) {
      throw Error(ErrorKind::PreconditionViolation,
                  "at integer degrees the P family starts at order 1");
    }
    const int n = 1 - static_cast<int>(argument.real());
    const auto b = solve_ft_coeffs(FtFamily::PfPlus, Complex(n, 0.0), k - 1).coeffs;
    gv.value = i_power(Complex(n - 1, 0.0)) * log_i_pow * b[j];
  } else {
    const Complex lambda = argument - 1.0;
    const auto a = closed_form_xplus_coeffs(lambda, k);
    gv.value = i_power(-argument) * log_i_pow * a[j];
  }
  return gv;
}

std::vector<DegreeOrder> degree_order(const FreqExpr& expr) {
  std::vector<DegreeOrder> out;
  for (const auto& [t, c] : expr) {
    auto it = std::find_if(out.begin(), out.end(), [&](const DegreeOrder& d) {
      return std::abs(d.degree - t.exponent()) <= kMergeEps;
    });
    if (it == out.end()) {
      out.push_back({t.exponent(), t.log_power()});
    } else {
      it->order = std::max(it->order, t.log_power());
    }
  }
  std::sort(out.begin(), out.end(), [](const DegreeOrder& a, const DegreeOrder& b) {
    if (a.degree.real() != b.degree.real()) return a.degree.real() < b.degree.real();
    return a.degree.imag() < b.degree.imag();
  });
  return out;
}

QahdExpr to_qahd(const FreqExpr& expr) {
  QahdExpr out;
  for (const auto& [t, c] : expr) {
    const bool minus = t.family() == FreqFamily::XiMinusI0Pow || t.family() == FreqFamily::XiPolyLogMinus;
    out += c * expand_i0(minus ? I0Side::Minus : I0Side::Plus, t.exponent(), t.log_power());
  }
  return out;
}

}  // namespace qahd
