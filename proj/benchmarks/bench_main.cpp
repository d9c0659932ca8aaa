#include <benchmark/benchmark.h>

#include "hillspec/hillspec.hpp"

using namespace hillspec;

namespace {

const FourierPotential& mathieu() {
  static const FourierPotential q = make_mathieu(2.0, 3.0);
  return q;
}

void BM_Monodromy(benchmark::State& state) {
  const auto& p = mathieu();
  const cplx lambda{static_cast<double>(state.range(0)), 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(p, lambda));
}
BENCHMARK(BM_Monodromy)->Arg(10)->Arg(400)->Arg(4000);

void BM_Charpoly(benchmark::State& state) {
  const auto m = build_matrix(QuasiProblem(mathieu(), 1.0), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_eval(m, cplx{100.0, 1.0}));
}
BENCHMARK(BM_Charpoly)->Arg(20)->Arg(60)->Arg(200);

void BM_AllEigenvalues(benchmark::State& state) {
  const auto m = build_matrix(QuasiProblem(mathieu(), 1.0), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_eigenvalues(m));
}
BENCHMARK(BM_AllEigenvalues)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_ASeries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cplx lambda{free_eigenvalue(n, 1.0)};
  for (auto _ : state) benchmark::DoNotOptimize(a_series(n, 1.0, 2.0, 3.0, lambda, 1e-14));
}
BENCHMARK(BM_ASeries)->Arg(5)->Arg(20)->Arg(80);

void BM_CRecursive(benchmark::State& state) {
  const FourierPotential q({{1, 5.0}, {2, 1.0}});
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(c_recursive(order, 0, 1.0, q));
}
BENCHMARK(BM_CRecursive)->Arg(8)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
