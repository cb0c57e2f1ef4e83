#include <benchmark/benchmark.h>

#include "sot/intertwining.hpp"
#include "sot/random.hpp"
#include "sot/solvers.hpp"
#include "sot/translates.hpp"

namespace {

sot::ProblemInstance quadratic_field_instance(int n) {
  const sot::FieldFunction field({0.0, 0.4, 1.0}, {sot::QuadraticPiece{-1.0, 0.5, 0.0}, sot::AffinePiece{0.3, -0.1}});
  return sot::ProblemInstance(std::vector<double>(static_cast<std::size_t>(n), 1.0), sot::Kernel::log(), field);
}

void BM_IntervalMaxima(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = quadratic_field_instance(n);
  sot::Rng rng(7);
  const sot::NodeSystem y = sot::random_node_system(rng, static_cast<std::size_t>(n));
  for (auto _ : state) benchmark::DoNotOptimize(sot::interval_maxima(inst, y));
}
BENCHMARK(BM_IntervalMaxima)->Arg(1)->Arg(3)->Arg(6)->Arg(12);

void BM_FindEquioscillation(benchmark::State& state) {
  const auto inst = sot::ProblemInstance::unit(static_cast<int>(state.range(0)), sot::Kernel::log());
  for (auto _ : state) benchmark::DoNotOptimize(sot::find_equioscillation(inst));
}
BENCHMARK(BM_FindEquioscillation)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SearchRandomPairs(benchmark::State& state) {
  const auto inst = sot::ProblemInstance::unit(static_cast<int>(state.range(0)), sot::Kernel::log_shifted(0.05));
  sot::SearchOptions opts;
  opts.budget = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(sot::search_majorization(inst, opts));
}
BENCHMARK(BM_SearchRandomPairs)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
