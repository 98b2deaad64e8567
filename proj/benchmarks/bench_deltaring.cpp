#include <benchmark/benchmark.h>

#include <random>

#include "deltaring/classify.hpp"
#include "deltaring/dgtriangle.hpp"
#include "deltaring/genhyp.hpp"
#include "deltaring/modcat.hpp"
#include "deltaring/standard_rings.hpp"

using namespace deltaring;

static void BM_ClassifyCyclic(benchmark::State& state) {
  auto r = rings::cyclic(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(r, 0).is_delta);
}
BENCHMARK(BM_ClassifyCyclic)->Arg(4)->Arg(9)->Arg(16);

static void BM_ClassifyTruncated(benchmark::State& state) {
  auto r = rings::truncated_polynomial(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(r, 0).is_delta);
}
BENCHMARK(BM_ClassifyTruncated)->Arg(2)->Arg(3)->Arg(5);

static void BM_HellerShift(benchmark::State& state) {
  auto h = ModuleRing::make(rings::truncated_polynomial(3, static_cast<int>(state.range(0))));
  auto k = FiniteModule::cyclic(h, h->maximal_generators);
  for (auto _ : state) benchmark::DoNotOptimize(heller_shift(k).length());
}
BENCHMARK(BM_HellerShift)->Arg(3)->Arg(9)->Arg(27);

static void BM_StableHom(benchmark::State& state) {
  auto h = ModuleRing::make(rings::truncated_polynomial(3, static_cast<int>(state.range(0))));
  auto k = FiniteModule::cyclic(h, h->maximal_generators);
  auto om = heller_shift(k);
  for (auto _ : state) benchmark::DoNotOptimize(stable_hom(om, k).dimension);
}
BENCHMARK(BM_StableHom)->Arg(3)->Arg(9)->Arg(27);

static void BM_TriangleFromMap(benchmark::State& state) {
  auto alg = std::make_shared<DGAlgebra const>(DGAlgebra::build(3, 1, 1, 2));
  std::mt19937_64 rng(7);
  auto f = random_projective_map(*alg, rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto t = triangle_from_map(alg, f, -3, 3);
    benchmark::DoNotOptimize(verify_triangle_exact(t).passed);
  }
}
BENCHMARK(BM_TriangleFromMap)->Arg(1)->Arg(3);

static void BM_GghVerdict(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ggh_verdict(3, static_cast<int>(state.range(0))).holds);
}
BENCHMARK(BM_GghVerdict)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
