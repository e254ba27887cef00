#include "qahd/laws.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "qahd/error.hpp"
#include "qahd/pairing.hpp"

namespace qahd {

namespace {

double pairing_tol(double tol) { return std::min(kDefaultTol, 1e-2 * tol); }

std::string describe(const TestFunction& phi, const char* key = nullptr, double value = 0.0) {
  std::ostringstream os;
  os.precision(17);
  os << "phi=" << phi.label();
  if (key) os << ' ' << key << '=' << value;
  return os.str();
}

void finish(LawReport& r) {
  r.max_residual = 0.0;
  for (const auto& s : r.samples) r.max_residual = std::max(r.max_residual, s.residual);
  r.passed = r.max_residual <= r.tolerance;
}

}  // namespace

LawReport verify_scaling(const QahdExpr& expr, const std::vector<TestFunction>& phis,
                         const std::vector<double>& scales, double tol) {
  const ScalingExpansion se = single_scaling_expansion(expr);
  const double ptol = pairing_tol(tol);
  LawReport report;
  report.law = "scaling";
  report.tolerance = tol;
  for (const auto& phi : phis) {
    const Complex base = pair(expr, phi, ptol).value;
    std::vector<Complex> comp;
    for (const auto& c : se.companions) comp.push_back(pair(c, phi, ptol).value);
    for (double a : scales) {
      const Complex lhs = pair(expr, scaled_argument(phi, a), ptol).value;
      const double log_a = std::log(a);
      Complex bracket = base;
      double lp = 1.0;
      for (const auto& c : comp) {
        lp *= log_a;
        bracket += lp * c;
      }
      const Complex rhs = scale_power(a, se.degree + 1.0) * bracket;
      report.samples.push_back({describe(phi, "a", a), lhs, rhs, std::abs(lhs - rhs) / (1.0 + std::abs(lhs))});
    }
  }
  finish(report);
  return report;
}

LawReport verify_euler(const QahdExpr& expr, const std::vector<TestFunction>& phis, double tol) {
  const double ptol = pairing_tol(tol);
  LawReport report;
  report.law = "euler";
  report.tolerance = tol;
  for (const auto& phi : phis) {
    const TestFunction xdphi = phi.x_times_derivative();
    QahdExpr f = expr;
    ScalingExpansion se = single_scaling_expansion(f);
    while (true) {
      const Complex lhs = -pair(f, xdphi, ptol).value;
      Complex rhs = (se.degree + 1.0) * pair(f, phi, ptol).value;
      const QahdExpr next = se.companions.empty() ? QahdExpr{} : se.companions.front();
      if (!next.empty()) rhs += pair(next, phi, ptol).value;
      std::ostringstream os;
      os << describe(phi) << " order=" << se.order;
      report.samples.push_back({os.str(), lhs, rhs, std::abs(lhs - rhs) / (1.0 + std::abs(lhs))});
      if (next.empty()) break;
      f = next;
      se = single_scaling_expansion(f);
    }
  }
  finish(report);
  return report;
}

IndependenceReport verify_independence(const std::vector<QahdTerm>& terms,
                                       const std::vector<TestFunction>& phis) {
  if (terms.empty()) throw Error(ErrorKind::PreconditionViolation, "no terms given");
  if (phis.size() < terms.size()) {
    throw Error(ErrorKind::PreconditionViolation, "need at least as many test functions as terms");
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (terms[i].same_key(terms[j])) {
        throw Error(ErrorKind::PreconditionViolation, "duplicate term " + terms[i].to_string());
      }
    }
  }
  const auto rows = static_cast<Eigen::Index>(terms.size());
  const auto cols = static_cast<Eigen::Index>(phis.size());
  Eigen::MatrixXcd M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) M(i, j) = pair_term(terms[i], phis[j]).value;
    const double norm = M.row(i).norm();
    if (norm > 0.0) M.row(i) /= norm;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto& sv = svd.singularValues();
  IndependenceReport r;
  r.max_singular_value = sv(0);
  r.min_singular_value = sv(sv.size() - 1);
  r.ratio = r.max_singular_value > 0.0 ? r.min_singular_value / r.max_singular_value : 0.0;
  r.passed = r.ratio >= kIndepEps;
  return r;
}

LawReport verify_quasi_asymptotics(const QahdExpr& expr, const TestFunction& phi,
                                   const std::vector<double>& a_grid, AsymptoticPoint at) {
  const QuasiAsymptotic qa = quasi_asymptotics(expr, at);
  const int k = qa.automodel_log_power;
  if (k < 1) {
    throw Error(ErrorKind::PreconditionViolation, "quasi-asymptotic check needs order >= 1");
  }
  if (a_grid.empty()) throw Error(ErrorKind::PreconditionViolation, "empty a grid");
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    if (!(a_grid[i] > 1.0) || (i > 0 && !(a_grid[i] > a_grid[i - 1]))) {
      throw Error(ErrorKind::PreconditionViolation, "a grid must be increasing and > 1");
    }
  }
  const double ptol = 1e-10;
  const Complex target = pair(qa.limit, phi, ptol).value;
  if (target == Complex{}) {
    throw Error(ErrorKind::PreconditionViolation, "limit pairs to zero with this test function");
  }
  LawReport report;
  report.law = at == AsymptoticPoint::Infinity ? "quasi-infinity" : "quasi-zero";
  const Complex lambda = single_scaling_expansion(expr).degree;
  double sum_el = 0.0, sum_ll = 0.0;
  for (double a : a_grid) {
    const double log_a = std::log(a);
    const double log_k = std::pow(log_a, k);
    Complex ratio;
    if (at == AsymptoticPoint::Infinity) {
      ratio = pair(expr, scaled_argument(phi, a), ptol).value / (a * scale_power(a, lambda) * log_k);
    } else {
      ratio = a * pair(expr, scaled_argument(phi, 1.0 / a), ptol).value / (scale_power(a, -lambda) * log_k);
    }
    const double err = std::abs(ratio - target) / std::abs(target);
    report.samples.push_back({describe(phi, "a", a), ratio, target, err});
    sum_el += err / log_a;
    sum_ll += 1.0 / (log_a * log_a);
  }
  const double c_fit = sum_el / sum_ll;
  report.tolerance = 2.0 * c_fit / std::log(a_grid.back());
  for (std::size_t i = 1; i < report.samples.size(); ++i) {
    if (!(report.samples[i].residual < report.samples[i - 1].residual)) report.monotone = false;
  }
  report.max_residual = 0.0;
  for (const auto& s : report.samples) report.max_residual = std::max(report.max_residual, s.residual);
  report.passed = report.monotone && report.samples.back().residual <= report.tolerance;
  return report;
}

}  // namespace qahd
