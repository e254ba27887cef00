#include "qahd/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "qahd/error.hpp"

namespace qahd {

namespace {

// Abscissae and weights of the 21-point Kronrod rule and its embedded
// 10-point Gauss rule (the odd-indexed nodes xgk[1], xgk[3], ...).
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a, b;
  Complex value;
  double error;
  double abs_value;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk21(const std::function<Complex(double)>& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double dhlgth = std::abs(hlgth);

  std::array<Complex, 10> fv1{}, fv2{};
  const Complex fc = f(centr);
  Complex resk = fc * wgk[10];
  Complex resg = 0.0;
  double resabs = std::abs(fc) * wgk[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = hlgth * xgk[j];
    fv1[j] = f(centr - dx);
    fv2[j] = f(centr + dx);
    const Complex s = fv1[j] + fv2[j];
    resk += wgk[j] * s;
    resabs += wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += wg[j / 2] * s;
  }
  const Complex reskh = resk * 0.5;
  double resasc = wgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) {
    resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }
  resk *= hlgth;
  resabs *= dhlgth;
  resasc *= dhlgth;
  double err = std::abs((resk - resg * hlgth));
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  if (!std::isfinite(resk.real()) || !std::isfinite(resk.imag())) err = std::numeric_limits<double>::infinity();
  return {a, b, resk, err, resabs};
}

}  // namespace

QuadratureResult integrate(const std::function<Complex(double)>& f, double a, double b,
                           double tol, int panel_budget) {
  if (!(tol > 0.0)) throw Error(ErrorKind::PreconditionViolation, "quadrature tolerance must be positive");
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::PreconditionViolation, "quadrature limits must be finite");
  }
  QuadratureResult out;
  if (a == b) return out;

  const int n0 = std::clamp(static_cast<int>(std::ceil(std::abs(b - a))), 1, panel_budget / 4);
  std::priority_queue<Panel> heap;
  Complex total = 0.0;
  double err = 0.0, abs_total = 0.0;
  for (int i = 0; i < n0; ++i) {
    const double lo = a + (b - a) * i / n0;
    const double hi = i + 1 == n0 ? b : a + (b - a) * (i + 1) / n0;
    Panel p = gk21(f, lo, hi);
    total += p.value;
    err += p.error;
    abs_total += p.abs_value;
    heap.push(p);
  }
  int panels = n0;
  auto target = [&] {
    return std::max({tol * std::abs(total), 1e-3 * tol * abs_total, 100.0 * kEps * abs_total});
  };
  while (err > target()) {
    if (panels >= panel_budget || !std::isfinite(err)) {
      std::ostringstream os;
      os << "adaptive quadrature on [" << a << ", " << b << "] reached error " << err
         << " after " << panels << " panels, requested " << target();
      throw Error(ErrorKind::QuadratureFailure, os.str());
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
      throw Error(ErrorKind::QuadratureFailure, "quadrature panel cannot be bisected further");
    }
    const Panel left = gk21(f, worst.a, mid);
    const Panel right = gk21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    abs_total += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  // Recompute the sums from the panels so the running updates leave no drift.
  total = 0.0;
  err = 0.0;
  abs_total = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    abs_total += heap.top().abs_value;
    heap.pop();
  }
  out.value = total;
  out.abs_error = err;
  out.abs_integral = abs_total;
  out.panels = panels;
  return out;
}

}  // namespace qahd
