#include <benchmark/benchmark.h>

#include "vcg/bar.hpp"
#include "vcg/oracle.hpp"
#include "vcg/smith.hpp"
#include "vcg/verify.hpp"

#include <random>

using namespace vcg;

namespace {

const FiniteGroup& q8() {
  static const FiniteGroup g = FiniteGroup::build(GroupSpec::quaternion(3));
  return g;
}

const FiniteGroup& meta21() {
  static const FiniteGroup g = FiniteGroup::build(GroupSpec::metacyclic(7, 3, 2));
  return g;
}

void BM_MorseCoboundary(benchmark::State& state, const FiniteGroup& (*group)(), Assembly assembly) {
  BarComplex bar(group(), Coefficients::integers());
  const int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bar.morse_coboundary(n, assembly).d.rows());
  state.counters["rows"] = double(bar.cells(n + 1));
}
BENCHMARK_CAPTURE(BM_MorseCoboundary, q8_serial, q8, Assembly::Serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MorseCoboundary, q8_parallel, q8, Assembly::Parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MorseCoboundary, meta21_serial, meta21, Assembly::Serial)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MorseCoboundary, meta21_parallel, meta21, Assembly::Parallel)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_BarCohomology(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(bar_cohomology(GroupSpec::quaternion(3), Coefficients::integers(), n).group);
}
BENCHMARK(BM_BarCohomology)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Smith(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::size_t n = std::size_t(state.range(0));
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.set(i, j, long(rng() % 61) - 30);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a).D.rows());
}
BENCHMARK(BM_Smith)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  VerifyConfig c;
  c.only = {"finite", "infinite"};
  c.max_order = 12;
  c.max_degree = 3;
  c.threads = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_verify(c).matches);
}
BENCHMARK(BM_Verify)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
