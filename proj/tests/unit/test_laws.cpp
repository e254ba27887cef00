#include <Eigen/Dense>

#include "qahd/error.hpp"
#include "qahd/laws.hpp"
#include "qahd/pairing.hpp"
#include "test_support.hpp"

using namespace qahd;

namespace {

std::vector<TestFunction> battery() {
  return {TestFunction::hermite({1}), TestFunction::hermite({0, 1}), TestFunction::hermite({1, 0, 1}),
          TestFunction::hermite({0, 0, 0, 1})};
}

const std::vector<double> kScales = {0.3, 0.7, 1, 2, 5, 10};

}  // namespace

TEST(VerifyScaling, PureHomogeneity) {
  const auto r = verify_scaling(QahdTerm::xplus(0.5, 0), battery(), {4.0}, 1e-7);
  EXPECT_TRUE(r.passed) << r.max_residual;
  EXPECT_EQ(r.samples.size(), 4u);
  EXPECT_EQ(r.law, "scaling");
}

TEST(VerifyScaling, LogCompanion) {
  const auto r = verify_scaling(QahdTerm::xplus(0.5, 1), battery(), {0.5, 2, 10}, 1e-7);
  EXPECT_TRUE(r.passed) << r.max_residual;
}

TEST(VerifyScaling, DeltaCompanion) {
  const auto r = verify_scaling(QahdTerm::pfplus(1, 0), battery(), {2.0}, 1e-7);
  EXPECT_TRUE(r.passed) << r.max_residual;
}

TEST(VerifyScaling, EveryFamily) {
  for (const auto& t : {QahdTerm::xminus(Complex(-1.3, 0.4), 2), QahdTerm::pfplus(2, 1), QahdTerm::pfminus(3, 2),
                        QahdTerm::delta(3)}) {
    const auto r = verify_scaling(t, battery(), kScales, 1e-7);
    EXPECT_TRUE(r.passed) << t.to_string() << ' ' << r.max_residual;
  }
}

TEST(VerifyScaling, ShiftedCombinationIsStillQuasiHomogeneous) {
  const QahdExpr f = QahdExpr(QahdTerm::xplus(0.5, 1)) + QahdExpr(QahdTerm::xplus(0.5, 0), 3.0);
  EXPECT_TRUE(verify_scaling(f, battery(), {2.0}, 1e-7).passed);
}

TEST(VerifyScaling, MixedDegreesRejected) {
  const auto mixed = QahdExpr(QahdTerm::xplus(0.5, 0)) + QahdExpr(QahdTerm::xplus(0.7, 0));
  EXPECT_THROW(verify_scaling(mixed, battery(), {2.0}, 1e-7), Error);
}

TEST(VerifyScaling, NonPositiveScale) {
  try {
    verify_scaling(QahdTerm::xplus(0.5, 0), battery(), {-1.0}, 1e-7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPositiveScale);
  }
}

TEST(VerifyEuler, Delta) {
  const auto r = verify_euler(QahdTerm::delta(0), battery(), 1e-7);
  EXPECT_TRUE(r.passed);
  for (const auto& s : r.samples) EXPECT_LE(std::abs(s.lhs), 1e-12);
}

TEST(VerifyEuler, PowerAndLogChains) {
  for (const auto& t : {QahdTerm::xplus(Complex(-0.4, 1.0), 0), QahdTerm::xplus(0.5, 1), QahdTerm::xminus(-2.3, 3),
                        QahdTerm::pfplus(1, 0), QahdTerm::pfplus(2, 2), QahdTerm::pfminus(1, 1), QahdTerm::delta(2)}) {
    const auto r = verify_euler(t, battery(), 1e-7);
    EXPECT_TRUE(r.passed) << t.to_string() << ' ' << r.max_residual;
  }
}

TEST(VerifyEuler, ChainLength) {
  // One sample per φ for each of the orders 3, 2, 1, 0.
  const auto r = verify_euler(QahdTerm::xplus(0.25, 3), battery(), 1e-7);
  EXPECT_EQ(r.samples.size(), 16u);
}

TEST(VerifyIndependence, HomogeneousAndAssociated) {
  const auto r = verify_independence({QahdTerm::xplus(0.5, 0), QahdTerm::xplus(0.5, 1)}, battery());
  EXPECT_TRUE(r.passed);
  EXPECT_GT(r.ratio, 1e-6);
}

TEST(VerifyIndependence, MixedDegreesAgainstIndependentRank) {
  const std::vector<QahdTerm> terms = {QahdTerm::xplus(0.3, 0), QahdTerm::xplus(0.7, 0), QahdTerm::delta(2)};
  const auto phis = battery();
  const auto r = verify_independence(terms, phis);
  EXPECT_TRUE(r.passed);
  Eigen::MatrixXcd m(terms.size(), phis.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = 0; j < phis.size(); ++j) m(i, j) = pair_term(terms[i], phis[j]).value;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(m);
  qr.setThreshold(1e-10);
  EXPECT_EQ(qr.rank(), 3);
}

TEST(VerifyIndependence, DuplicateRejected) {
  try {
    verify_independence({QahdTerm::delta(0), QahdTerm::delta(0)}, battery());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolation);
  }
}

TEST(VerifyIndependence, DependentSetFails) {
  // Odd test functions annihilate δ, so its row is zero.
  const std::vector<TestFunction> odd = {TestFunction::hermite({0, 1}), TestFunction::hermite({0, 0, 0, 1}),
                                         TestFunction::hermite({0, 1, 0, 1})};
  const auto r = verify_independence({QahdTerm::delta(0), QahdTerm::xplus(0.5, 0)}, odd);
  EXPECT_FALSE(r.passed);
}

TEST(VerifyQuasi, InfinityDecreases) {
  const auto r = verify_quasi_asymptotics(QahdTerm::xplus(0.5, 1), TestFunction::hermite({1, 0, 1}),
                                          {1e2, 1e3, 1e4}, AsymptoticPoint::Infinity);
  EXPECT_TRUE(r.monotone);
  EXPECT_TRUE(r.passed) << r.max_residual;
}

TEST(VerifyQuasi, ZeroTargetSign) {
  const auto phi = TestFunction::hermite({1, 0, 1});
  const auto f0 = pair_term(QahdTerm::xplus(0.5, 0), phi).value;
  const auto r1 = verify_quasi_asymptotics(QahdTerm::xplus(0.5, 1), phi, {1e2, 1e3, 1e4, 1e5}, AsymptoticPoint::Zero);
  EXPECT_TRUE(r1.passed);
  for (const auto& s : r1.samples) EXPECT_TRUE(qahd::testing::close_rel(s.rhs, -f0, 1e-9));
  const auto r2 = verify_quasi_asymptotics(QahdTerm::xplus(0.5, 2), phi, {1e2, 1e3, 1e4, 1e5}, AsymptoticPoint::Zero);
  EXPECT_TRUE(r2.passed);
  for (const auto& s : r2.samples) EXPECT_TRUE(qahd::testing::close_rel(s.rhs, f0, 1e-9));
}

TEST(VerifyQuasi, Preconditions) {
  const auto phi = TestFunction::hermite({1});
  EXPECT_THROW(verify_quasi_asymptotics(QahdTerm::xplus(0.5, 0), phi, {1e2, 1e3}, AsymptoticPoint::Infinity), Error);
  EXPECT_THROW(verify_quasi_asymptotics(QahdTerm::xplus(0.5, 1), phi, {1e3, 1e2}, AsymptoticPoint::Infinity), Error);
}
