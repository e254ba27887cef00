#include "qahd/expr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qahd/error.hpp"

namespace qahd {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidTerm: return "InvalidTerm";
    case ErrorKind::NonPositiveScale: return "NonPositiveScale";
    case ErrorKind::NotDifferentiableInLambda: return "NotDifferentiableInLambda";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::PoleArgument: return "PoleArgument";
    case ErrorKind::BranchUnsupported: return "BranchUnsupported";
    case ErrorKind::ZeroFrequency: return "ZeroFrequency";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string family_name(Family f) {
  switch (f) {
    case Family::XPlusLog: return "xplus";
    case Family::XMinusLog: return "xminus";
    case Family::PfPlusLog: return "pfplus";
    case Family::PfMinusLog: return "pfminus";
    case Family::DeltaDeriv: return "delta";
  }
  return "?";
}

double distance_to_negative_integer(Complex z) noexcept {
  double nearest = std::round(z.real());
  if (nearest > -1.0) nearest = -1.0;
  return std::abs(z - Complex(nearest, 0.0));
}

double factorial(int n) noexcept {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double binomial(int n, int k) noexcept {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

namespace {

void check_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorKind::InvalidTerm, std::string(what) + " must be finite");
  }
}

void check_nonnegative(int v, const char* what) {
  if (v < 0) {
    throw Error(ErrorKind::InvalidTerm,
                std::string(what) + " must be non-negative, got " + std::to_string(v));
  }
}

std::strong_ordering cmp_double(double a, double b) noexcept {
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

QahdTerm QahdTerm::xplus(Complex degree, int log_power) {
  check_finite(degree, "degree");
  check_nonnegative(log_power, "log power");
  if (distance_to_negative_integer(degree) <= kPoleEps) {
    std::ostringstream os;
    os << "degree " << degree.real() << (degree.imag() < 0 ? "" : "+") << degree.imag()
       << "i is within " << kPoleEps << " of a negative integer; use the pf family";
    throw Error(ErrorKind::InvalidTerm, os.str());
  }
  return QahdTerm(Family::XPlusLog, degree, 0, log_power);
}

QahdTerm QahdTerm::xminus(Complex degree, int log_power) {
  QahdTerm t = xplus(degree, log_power);
  t.family_ = Family::XMinusLog;
  return t;
}

QahdTerm QahdTerm::pfplus(int pole_order, int log_power) {
  if (pole_order < 1) {
    throw Error(ErrorKind::InvalidTerm, "pole order must be >= 1");
  }
  check_nonnegative(log_power, "log power");
  return QahdTerm(Family::PfPlusLog, Complex(-pole_order, 0.0), pole_order, log_power);
}

QahdTerm QahdTerm::pfminus(int pole_order, int log_power) {
  QahdTerm t = pfplus(pole_order, log_power);
  t.family_ = Family::PfMinusLog;
  return t;
}

QahdTerm QahdTerm::delta(int order) {
  check_nonnegative(order, "delta order");
  return QahdTerm(Family::DeltaDeriv, Complex(-order - 1, 0.0), order, 0);
}

int QahdTerm::order() const noexcept {
  switch (family_) {
    case Family::XPlusLog:
    case Family::XMinusLog: return log_power_;
    case Family::PfPlusLog:
    case Family::PfMinusLog: return log_power_ + 1;
    case Family::DeltaDeriv: return 0;
  }
  return 0;
}

QahdTerm QahdTerm::with_log_power(int log_power) const {
  check_nonnegative(log_power, "log power");
  if (family_ == Family::DeltaDeriv && log_power != 0) {
    throw Error(ErrorKind::InvalidTerm, "delta terms carry no log power");
  }
  QahdTerm t = *this;
  t.log_power_ = log_power;
  return t;
}

std::strong_ordering QahdTerm::operator<=>(const QahdTerm& o) const noexcept {
  if (auto c = static_cast<int>(family_) <=> static_cast<int>(o.family_); c != 0) return c;
  if (auto c = index_ <=> o.index_; c != 0) return c;
  if (auto c = cmp_double(degree_.real(), o.degree_.real()); c != 0) return c;
  if (auto c = cmp_double(degree_.imag(), o.degree_.imag()); c != 0) return c;
  return log_power_ <=> o.log_power_;
}

bool QahdTerm::same_key(const QahdTerm& o) const noexcept {
  return family_ == o.family_ && index_ == o.index_ && log_power_ == o.log_power_ &&
         std::abs(degree_ - o.degree_) <= kMergeEps;
}

std::string QahdTerm::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << family_name(family_) << '(';
  switch (family_) {
    case Family::XPlusLog:
    case Family::XMinusLog:
      os << degree_.real();
      if (degree_.imag() != 0.0) os << (degree_.imag() < 0 ? "" : "+") << degree_.imag() << 'i';
      os << ',' << log_power_;
      break;
    case Family::PfPlusLog:
    case Family::PfMinusLog: os << index_ << ',' << log_power_; break;
    case Family::DeltaDeriv: os << index_; break;
  }
  os << ')';
  return os.str();
}

QahdExpr::QahdExpr(const QahdTerm& term, Complex coeff) {
  const TermCoeff tc{term, coeff};
  *this = canonicalize(std::span<const TermCoeff>(&tc, 1));
}

QahdExpr canonicalize(std::span<const TermCoeff> raw) {
  struct Group {
    QahdTerm term;
    Complex sum;
    double magnitude;
  };
  std::vector<Group> groups;
  groups.reserve(raw.size());
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

  QahdExpr out;
  for (const auto& g : groups) {
    if (g.sum == Complex{} || std::abs(g.sum) <= kDropEps * g.magnitude) continue;
    out.terms_.emplace_back(g.term, g.sum);
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const TermCoeff& a, const TermCoeff& b) { return a.first < b.first; });
  return out;
}

QahdExpr canonicalize(std::initializer_list<TermCoeff> raw) {
  return canonicalize(std::span<const TermCoeff>(raw.begin(), raw.size()));
}

Complex QahdExpr::coefficient(const QahdTerm& term) const noexcept {
  for (const auto& [t, c] : terms_) {
    if (t.same_key(term)) return c;
  }
  return {};
}

QahdExpr QahdExpr::operator+(const QahdExpr& rhs) const {
  std::vector<TermCoeff> all(terms_);
  all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
  return canonicalize(all);
}

QahdExpr QahdExpr::operator-() const {
  QahdExpr out(*this);
  for (auto& tc : out.terms_) tc.second = -tc.second;
  return out;
}

QahdExpr QahdExpr::operator-(const QahdExpr& rhs) const { return *this + (-rhs); }

QahdExpr& QahdExpr::operator+=(const QahdExpr& rhs) {
  *this = *this + rhs;
  return *this;
}

QahdExpr operator*(Complex c, const QahdExpr& e) {
  std::vector<TermCoeff> scaled(e.terms_);
  for (auto& tc : scaled) tc.second *= c;
  return canonicalize(scaled);
}

bool approx_equal(const QahdExpr& a, const QahdExpr& b, double rel_tol) {
  double scale = 0.0;
  for (const auto& [t, c] : a) scale = std::max(scale, std::abs(c));
  for (const auto& [t, c] : b) scale = std::max(scale, std::abs(c));
  const double bound = rel_tol * std::max(scale, std::numeric_limits<double>::min());
  for (const auto& [t, c] : a) {
    if (std::abs(c - b.coefficient(t)) > bound) return false;
  }
  for (const auto& [t, c] : b) {
    if (std::abs(c - a.coefficient(t)) > bound) return false;
  }
  return true;
}

std::vector<QahdExpr> components(const QahdExpr& expr) {
  std::vector<std::vector<TermCoeff>> buckets;
  std::vector<Complex> degrees;
  for (const auto& tc : expr) {
    const Complex d = tc.first.degree();
    auto it = std::find_if(degrees.begin(), degrees.end(),
                           [&](Complex e) { return std::abs(e - d) <= kMergeEps; });
    if (it == degrees.end()) {
      degrees.push_back(d);
      buckets.push_back({tc});
    } else {
      buckets[static_cast<std::size_t>(it - degrees.begin())].push_back(tc);
    }
  }
  std::vector<std::size_t> idx(degrees.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (degrees[a].real() != degrees[b].real()) return degrees[a].real() < degrees[b].real();
    return degrees[a].imag() < degrees[b].imag();
  });
  std::vector<QahdExpr> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(canonicalize(buckets[i]));
  return out;
}

bool is_single_component(const QahdExpr& expr) {
  return expr.empty() || components(expr).size() == 1;
}

}  // namespace qahd
