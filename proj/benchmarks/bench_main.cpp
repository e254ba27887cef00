#include <benchmark/benchmark.h>

#include "qahd/fourier.hpp"
#include "qahd/gamma.hpp"
#include "qahd/laws.hpp"
#include "qahd/pairing.hpp"

using namespace qahd;

namespace {

const TestFunction kPhi = TestFunction::hermite({1, 0, 1});

void BM_PairPower(benchmark::State& state) {
  const auto t = QahdTerm::xplus(Complex(-2.3, 0.4), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pair_term(t, kPhi));
}
BENCHMARK(BM_PairPower)->DenseRange(0, 3);

void BM_PairFinitePart(benchmark::State& state) {
  const auto t = QahdTerm::pfplus(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pair_term(t, kPhi));
}
BENCHMARK(BM_PairFinitePart)->DenseRange(1, 4);

void BM_ComplexGamma(benchmark::State& state) {
  Complex z(-3.7, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgamma(z));
    z += 1e-9;
  }
}
BENCHMARK(BM_ComplexGamma);

void BM_LogGammaDerivs(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(loggamma_derivs(Complex(0.4, 1.1), k));
}
BENCHMARK(BM_LogGammaDerivs)->Arg(1)->Arg(4)->Arg(8);

void BM_SolveFourier(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_ft_coeffs(FtFamily::XPlus, Complex(0.3, 0.2), k));
}
BENCHMARK(BM_SolveFourier)->DenseRange(1, 6);

void BM_SolveFourierFinitePart(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_ft_coeffs(FtFamily::PfPlus, 2, 1));
}
BENCHMARK(BM_SolveFourierFinitePart);

void BM_VerifyScaling(benchmark::State& state) {
  const std::vector<TestFunction> phis = {TestFunction::hermite({1}), TestFunction::hermite({0, 1})};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_scaling(QahdTerm::xplus(0.5, 2), phis, {0.3, 2, 10}, 1e-7));
  }
}
BENCHMARK(BM_VerifyScaling)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
