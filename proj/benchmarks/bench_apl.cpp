#include <benchmark/benchmark.h>

#include "apl/catalog.hpp"

using namespace apl;

namespace {

void BM_BruteForceZ2(benchmark::State& state) {
  const Algebra base = convert(get_family("A9").pair.circ, Field::prime(5));
  BruteForceOptions opt;
  opt.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_Z2(base, opt).solutions.size());
}
BENCHMARK(BM_BruteForceZ2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_VerifyCatalog(benchmark::State& state) {
  const unsigned workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_catalog(CatalogScope::all, workers).failures());
}
BENCHMARK(BM_VerifyCatalog)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_PolynomialProduct(benchmark::State& state) {
  const Field& ring = catalog_ring();
  const Scalar x = ring.parse("alpha + 2*beta - 1/3*gamma + a^-1*delta + lambda");
  Scalar p = ring.one();
  for (int64_t i = 0; i < state.range(0); ++i) p = p * x;
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_PolynomialProduct)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
