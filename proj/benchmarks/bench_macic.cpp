#include <benchmark/benchmark.h>

#include "macic/detmodel.hpp"
#include "macic/dmeval.hpp"
#include "macic/fme.hpp"
#include "macic/gaussian.hpp"
#include "macic/gdof.hpp"
#include "macic/random.hpp"
#include "macic/region.hpp"

using namespace macic;

namespace {

Polytope sample_region(int ka, int kb) {
  rnd::Rng rng(1);
  return build_generic_region(rnd::random_entropic_table(rng, ka, kb));
}

void BM_MaximizeSumRate(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Polytope p = sample_region(k, k);
  const std::vector<Rational> obj(p.dim, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(maximize(p, obj));
  state.counters["rows"] = static_cast<double>(p.inequalities.size());
}
BENCHMARK(BM_MaximizeSumRate)->Arg(1)->Arg(2)->Arg(3);

void BM_EnumerateVertices(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto ch = gaussian::Channel::from_db(std::vector<double>(static_cast<std::size_t>(k), 20.0),
                                             std::vector<double>(static_cast<std::size_t>(k), 15.0), 12, 8);
  const Polytope p = build_generic_region(rationalize(gaussian::outer_table(ch)));
  std::size_t n = 0;
  for (auto _ : state) n = enumerate_vertices(p).size();
  state.counters["vertices"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateVertices)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_VerifyProjection(benchmark::State& state) {
  const int ka = static_cast<int>(state.range(0)), kb = static_cast<int>(state.range(1));
  rnd::Rng rng(1);
  const auto t = rnd::random_entropic_table(rng, ka, kb);
  for (auto _ : state) benchmark::DoNotOptimize(fme::verify_projection(t));
}
BENCHMARK(BM_VerifyProjection)->Args({1, 1})->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_DsymSweep(benchmark::State& state) {
  const auto grid = gdof::alpha_grid(3, make_rational(1, 20));
  for (auto _ : state) benchmark::DoNotOptimize(gdof::dsym_curve({2, 3, 4, 5, 6}, grid));
}
BENCHMARK(BM_DsymSweep)->Unit(benchmark::kMillisecond);

void BM_DsymPolytopeLevel(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(symmetric_max(gdof::gdof_region(gdof::Spec::symmetric(k, make_rational(9, 10)))));
  }
}
BENCHMARK(BM_DsymPolytopeLevel)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_GapReport(benchmark::State& state) {
  const auto ch = gaussian::Channel::from_db({30, 20}, {25, 10}, 18, 12);
  for (auto _ : state) benchmark::DoNotOptimize(gaussian::gap_report(ch));
}
BENCHMARK(BM_GapReport)->Unit(benchmark::kMillisecond);

void BM_DmContainment(benchmark::State& state) {
  rnd::Rng rng(5);
  const auto [d, ch] = rnd::random_sd_instance(rng, 2, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dm::verify_containment(d, ch));
}
BENCHMARK(BM_DmContainment)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DetSimulation(benchmark::State& state) {
  const auto a = det::build_allocation(2, 1, 3);
  std::mt19937_64 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(det::simulate(a, 10000, rng));
}
BENCHMARK(BM_DetSimulation)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
