#include <benchmark/benchmark.h>

#include "kstab/bernstein.hpp"
#include "kstab/certify.hpp"
#include "kstab/criterion.hpp"
#include "kstab/rootdata.hpp"

namespace {

using kstab::Rational;

void BM_AssembleCriterion(benchmark::State& state) {
  const auto P = kstab::build_P();
  const auto Q = kstab::stated_Q();
  for (auto _ : state) {
    kstab::Criterion crit(P, Q);
    benchmark::DoNotOptimize(crit.C());
  }
}
BENCHMARK(BM_AssembleCriterion);

void BM_EvaluateC(benchmark::State& state) {
  const auto& crit = kstab::standard_criterion();
  const Rational a(1234, 98765), b(4321, 9876);
  for (auto _ : state) benchmark::DoNotOptimize(crit.evaluate(a, b));
}
BENCHMARK(BM_EvaluateC);

void BM_BernsteinCoefficients(benchmark::State& state) {
  const auto& C = kstab::standard_criterion().C();
  const auto region = kstab::shrunken_triangle(Rational(1, 10));
  for (auto _ : state) benchmark::DoNotOptimize(kstab::bernstein_coefficients(C, region, 8));
}
BENCHMARK(BM_BernsteinCoefficients);

void BM_SubdivideBernstein(benchmark::State& state) {
  const auto net =
      kstab::bernstein_coefficients(kstab::standard_criterion().C(), kstab::shrunken_triangle(Rational(1, 10)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(kstab::subdivide_bernstein(net, 8));
}
BENCHMARK(BM_SubdivideBernstein);

void BM_ScanGrid(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kstab::scan_grid(n));
  state.SetItemsProcessed(state.iterations() * n * (n - 1) / 2);
}
BENCHMARK(BM_ScanGrid)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
