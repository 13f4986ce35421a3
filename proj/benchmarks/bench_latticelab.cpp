#include "latticelab/eta_expression.hpp"
#include "latticelab/hypergeometric.hpp"
#include "latticelab/lattice_sums.hpp"
#include "latticelab/mahler.hpp"
#include "latticelab/registry.hpp"
#include "latticelab/runner.hpp"

#include <benchmark/benchmark.h>

using namespace latticelab;

namespace {

void BM_EtaExpansion(benchmark::State& state) {
  const auto x = series::parse_eta_expression("e1 e2 e9 e18");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series::expand_expression(x, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EtaExpansion)->RangeMultiplier(4)->Range(500, 8000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_CoefficientIdentity(benchmark::State& state) {
  const auto lhs = series::parse_eta_expression("e2 e6 e10 e30");
  const auto rhs = series::parse_eta_expression("e1 e12 e15 e20 + e3 e4 e5 e60");
  for (auto _ : state) benchmark::DoNotOptimize(series::verify_coefficient_identity(lhs, rhs, 500));
}
BENCHMARK(BM_CoefficientIdentity)->Unit(benchmark::kMillisecond);

void BM_LatticeIntegral(benchmark::State& state) {
  const auto digits = static_cast<unsigned>(state.range(0));
  WorkingPrecision wp(PrecisionPolicy{digits, {}});
  const auto s = LatticeSpec::shorthand(3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(F_integral(s, static_cast<int>(digits) + 5));
}
BENCHMARK(BM_LatticeIntegral)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_MahlerJensen(benchmark::State& state) {
  WorkingPrecision wp(PrecisionPolicy{40, {}});
  const Complex a = mahler_arg("4i").value;
  for (auto _ : state) benchmark::DoNotOptimize(mahler_m_jensen(a));
}
BENCHMARK(BM_MahlerJensen)->Unit(benchmark::kMillisecond);

void BM_Hypergeometric(benchmark::State& state) {
  WorkingPrecision wp(PrecisionPolicy{static_cast<unsigned>(state.range(0)), {}});
  const BigRational h(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hypergeom_pFq({h, h, h}, {1, BigRational(3, 2)}, BigReal(1) / 16));
}
BENCHMARK(BM_Hypergeometric)->Arg(40)->Arg(100)->Arg(200);

void BM_CatalogRecord(benchmark::State& state) {
  registry::RunOptions o;
  for (auto _ : state) benchmark::DoNotOptimize(registry::run({"F23"}, o));
}
BENCHMARK(BM_CatalogRecord)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

// The packaged benchmark_main archive carries LTO bytecode from another
// compiler release, so main comes from here.
BENCHMARK_MAIN();
