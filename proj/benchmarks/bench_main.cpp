#include <benchmark/benchmark.h>

#include "yetter/classify/driver.hpp"
#include "yetter/grp/catalog.hpp"
#include "yetter/nichols/symmetrizer.hpp"
#include "yetter/rack/type_c.hpp"
#include "yetter/yd/diagonal.hpp"

using namespace yetter;

static void BM_HeisenbergConstruction(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grp::heisenberg(1, p));
}
BENCHMARK(BM_HeisenbergConstruction)->Arg(3)->Arg(5)->Arg(7);

static void BM_ConjugacyClasses(benchmark::State& state) {
  const auto g = grp::unitriangular4(3);
  for (auto _ : state) benchmark::DoNotOptimize(grp::conjugacy_classes(g));
}
BENCHMARK(BM_ConjugacyClasses);

static void BM_TypeCSearch(benchmark::State& state) {
  const auto g = grp::unitriangular4(3);
  const auto rack = rack::conjugation_rack(grp::class_of(g, *g->find_label("(1,1,1,0,0,0)")));
  for (auto _ : state) benchmark::DoNotOptimize(rack::type_c_search(rack));
}
BENCHMARK(BM_TypeCSearch);

// Symmetrizer rank for A2 at a cube root of unity up to the given degree.
static void BM_SymmetrizerA2(benchmark::State& state) {
  const auto c = yd::braiding_from_diagonal(yd::DiagonalBraiding(2, cyclo::RootOfUnity(1, 3)));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nichols::dim_profile(c, n));
}
BENCHMARK(BM_SymmetrizerA2)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_SymmetrizerExterior(benchmark::State& state) {
  const auto c = yd::braiding_from_diagonal(yd::DiagonalBraiding(3, cyclo::RootOfUnity::minus_one()));
  for (auto _ : state) benchmark::DoNotOptimize(nichols::dim_profile(c, 4));
}
BENCHMARK(BM_SymmetrizerExterior)->Unit(benchmark::kMillisecond);

static void BM_ClassifyWreath(benchmark::State& state) {
  const auto g = grp::wreath(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(classify::classify_group(g, {.group_name = "wreath"}));
}
BENCHMARK(BM_ClassifyWreath)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
