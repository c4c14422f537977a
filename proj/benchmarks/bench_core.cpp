#include <benchmark/benchmark.h>

#include "superflag/flag_charts.hpp"
#include "superflag/osp_algebra.hpp"

using namespace superflag;

namespace {

void BM_PolyMultiply(benchmark::State& state) {
  std::vector<VariableSpec> specs;
  const auto count = static_cast<std::size_t>(state.range(0));
  for (std::size_t k = 0; k < count; ++k) {
    specs.push_back({"x" + std::to_string(k), Parity::even, 0});
    specs.push_back({"xi" + std::to_string(k), Parity::odd, 0});
  }
  const RingPtr ring = RingContext::create(specs);
  SuperPoly p = 1, q = 1;
  for (std::size_t k = 0; k < count; ++k) {
    p += SuperPoly::variable(ring, 2 * k) * SuperPoly::variable(ring, 2 * k + 1);
    q += SuperPoly::variable(ring, 2 * k) + SuperPoly::variable(ring, 2 * k + 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(p * q * p);
}
BENCHMARK(BM_PolyMultiply)->Arg(2)->Arg(4)->Arg(6);

void BM_ClosureCheck(benchmark::State& state) {
  const OspBasis b = basis(OspFlavor::odd, state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(closure_check(b).closed());
}
BENCHMARK(BM_ClosureCheck)->Args({1, 1})->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_FundamentalField(benchmark::State& state) {
  const auto k1 = static_cast<std::size_t>(state.range(0));
  const IsotropicChart ic = isotropic_chart(k1, 1, {1}, {0});
  const OspBasis b = basis(OspFlavor::odd, k1 - 1, 1);
  for (auto _ : state)
    for (const auto& g : b.generators) benchmark::DoNotOptimize(fundamental_field(g.matrix, ic.chart));
}
BENCHMARK(BM_FundamentalField)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
