#include <benchmark/benchmark.h>

#include "hullx/face_lattice.hpp"
#include "hullx/feasibility.hpp"
#include "hullx/identities.hpp"
#include "hullx/stochastic.hpp"

namespace {

hullx::Configuration sample(std::size_t dim, std::size_t n) {
  return hullx::sample_config({hullx::DistributionKind::kUniformCube, dim, 1 << 16}, n, 42);
}

// Hull membership of a centroid: the LP behind every predicate.
void BM_LpFeasible(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto cfg = sample(3, n);
  auto sys = hullx::FeasibilitySystem::with_vars(4, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < 3; ++c) sys.eq_matrix(c, i) = cfg.point(i)[c];
    sys.eq_matrix(3, i) = 1;
  }
  for (std::size_t c = 0; c < 3; ++c) {
    hullx::Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += cfg.point(i)[c];
    sys.rhs[c] = s / static_cast<long>(n);
  }
  sys.rhs[3] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(hullx::lp_feasible(sys));
}
BENCHMARK(BM_LpFeasible)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_CowanCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto cfg = sample(2, n);
  const hullx::RatVector x = {hullx::Rational(1, 2), hullx::Rational(1, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(hullx::cowan_check(cfg, x));
}
BENCHMARK(BM_CowanCheck)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_EnumerateFaces(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto cfg = sample(3, n);
  const auto all = hullx::IndexSet::all(n);
  for (auto _ : state) benchmark::DoNotOptimize(hullx::enumerate_faces(cfg, all));
}
BENCHMARK(BM_EnumerateFaces)->Arg(6)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
