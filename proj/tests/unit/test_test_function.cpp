#include <cmath>

#include "qahd/error.hpp"
#include "qahd/quadrature.hpp"
#include "qahd/test_function.hpp"
#include "test_support.hpp"

using namespace qahd;
using qahd::testing::close_abs;
using qahd::testing::close_rel;

TEST(TestFunction, HermiteBasis) {
  const auto phi = TestFunction::hermite({1, 0, 1});  // He_0 + He_2 = x²
  ASSERT_EQ(phi.polynomial().size(), 3u);
  EXPECT_EQ(phi.polynomial()[0], Complex(0));
  EXPECT_EQ(phi.polynomial()[2], Complex(1));
  const auto he3 = TestFunction::hermite({0, 0, 0, 1});  // x³ - 3x
  EXPECT_EQ(he3.polynomial()[1], Complex(-3));
  EXPECT_EQ(he3.polynomial()[3], Complex(1));
  EXPECT_EQ(phi.label(), "hermite:1,0,1");
}

TEST(TestFunction, HermiteDegreeLimit) {
  EXPECT_NO_THROW(TestFunction::hermite(std::vector<double>(13, 1.0)));
  EXPECT_THROW(TestFunction::hermite(std::vector<double>(14, 1.0)), Error);
  EXPECT_THROW(TestFunction::hermite({}), Error);
}

TEST(TestFunction, ExactDerivativesAtZero) {
  const auto g = TestFunction::hermite({1});
  EXPECT_EQ(g.deriv_at_zero(0), Complex(1));
  EXPECT_EQ(g.deriv_at_zero(1), Complex(0));
  EXPECT_TRUE(close_rel(g.deriv_at_zero(2), -2.0, 1e-15));
  EXPECT_TRUE(close_rel(g.deriv_at_zero(4), 12.0, 1e-15));
  EXPECT_TRUE(close_rel(g.deriv_at_zero(6), -120.0, 1e-15));
  const auto xg = TestFunction::hermite({0, 1});
  EXPECT_TRUE(close_rel(xg.deriv_at_zero(1), 1.0, 1e-15));
  EXPECT_TRUE(close_rel(xg.deriv_at_zero(3), -6.0, 1e-15));
  const auto e = TestFunction::exponential(3.0);
  for (int j = 0; j < 8; ++j) EXPECT_TRUE(close_rel(e.deriv_at_zero(j), std::pow(-3.0, j), 1e-14));
}

TEST(TestFunction, Values) {
  const auto phi = TestFunction::hermite({0, 1, 2});  // x + 2(x²-1)
  const double x = 0.7;
  EXPECT_TRUE(close_rel(phi.value(x), (x + 2 * (x * x - 1)) * std::exp(-x * x), 1e-15));
  EXPECT_TRUE(close_rel(phi.value(Complex(x, 0)), phi.value(x), 1e-15));
}

TEST(TestFunction, ScaledArgument) {
  const auto phi = TestFunction::hermite({0, 1});
  const auto s = phi.scaled(2.0);
  EXPECT_TRUE(close_rel(s.deriv_at_zero(1), 0.5, 1e-15));
  EXPECT_TRUE(close_rel(s.value(1.3), phi.value(0.65), 1e-15));
  EXPECT_THROW(phi.scaled(0.0), Error);
}

TEST(TestFunction, Reflected) {
  const auto phi = TestFunction::hermite({1, 1});
  const auto r = phi.reflected();
  for (double x : {-2.0, -0.3, 0.0, 0.4, 1.9}) EXPECT_TRUE(close_abs(r.value(x), phi.value(-x), 1e-15));
  EXPECT_TRUE(close_rel(r.deriv_at_zero(1), -phi.deriv_at_zero(1), 1e-15));
}

TEST(TestFunction, XTimesDerivative) {
  for (const auto& phi : {TestFunction::hermite({1, 0.5, 0, 1}), TestFunction::exponential(1.5)}) {
    const auto d = phi.x_times_derivative();
    for (double x : {0.2, 0.9, 1.7}) {
      const double h = 1e-5;
      const Complex fd = x * (phi.value(x + h) - phi.value(x - h)) / (2 * h);
      EXPECT_TRUE(close_abs(d.value(x), fd, 1e-9)) << phi.label() << " x=" << x;
    }
  }
}

TEST(TestFunction, TaylorRemainder) {
  const auto phi = TestFunction::hermite({1, 2, 0, 1});
  for (int n : {0, 1, 3, 5}) {
    for (double x : {0.45, 0.55, 1.3}) {
      Complex head = 0.0;
      for (int j = 0; j < n; ++j) head += phi.deriv_at_zero(j) * std::pow(x, j) / std::tgamma(j + 1.0);
      EXPECT_TRUE(close_abs(phi.taylor_remainder(x, n), phi.value(x) - head, 1e-13)) << n << ' ' << x;
    }
  }
  // Near zero the remainder behaves like φ^{(n)}(0) x^n / n! without cancellation loss.
  const double x = 1e-6;
  EXPECT_TRUE(close_rel(phi.taylor_remainder(x, 2), phi.deriv_at_zero(2) / 2.0 * x * x, 1e-5));
}

TEST(TestFunction, FourierMatchesQuadrature) {
  for (const auto& phi : {TestFunction::hermite({1}), TestFunction::hermite({0.3, -1, 0.5, 0.2}),
                          TestFunction::hermite({0, 1}).scaled(1.7).reflected()}) {
    const auto ft = phi.fourier();
    for (double xi : {-2.3, 0.0, 0.8, 3.1}) {
      auto f = [&](double x) { return phi.value(x) * std::exp(Complex(0, xi * x)); };
      const auto q = integrate(f, -25.0, 25.0, 1e-13);
      EXPECT_TRUE(close_abs(ft.value(xi), q.value, 1e-11)) << phi.label() << " xi=" << xi;
    }
  }
}

TEST(TestFunction, HermiteFunctionsAreEigenfunctions) {
  // F[He_j(√2 x) e^{-x²/2}] ∝ i^j He_j(√2 ξ) e^{-ξ²/2}; checked through the
  // Gaussian e^{-x²}, whose transform is √π e^{-ξ²/4}.
  const auto ft = TestFunction::hermite({1}).fourier();
  for (double xi : {0.0, 1.0, 2.5}) {
    EXPECT_TRUE(close_rel(ft.value(xi), std::sqrt(kPi) * std::exp(-xi * xi / 4), 1e-14));
  }
}

TEST(TestFunction, CutoffRejectsGrowth) {
  const auto e = TestFunction::exponential(1.0);
  EXPECT_GT(e.positive_cutoff(1.0, 0), 40.0);
  try {
    e.reflected().positive_cutoff(1.0, 0);
    ADD_FAILURE();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::PreconditionViolation);
  }
  const auto g = TestFunction::hermite({1});
  EXPECT_GT(g.positive_cutoff(1.0, 2), 6.0);
  EXPECT_LT(g.positive_cutoff(1.0, 2), 12.0);
}
