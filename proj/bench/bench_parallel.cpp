// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "fcs/corpus.hpp"
#include "fcs/dynamics.hpp"
#include "fcs/fpt.hpp"
#include "fcs/oracle.hpp"

namespace {

using namespace fcs;

Instance large_instance(std::size_t n) {
  corpus::Rng rng(1);
  return corpus::random_instance(n, 4.0 / static_cast<double>(n), 1, rng);
}

Configuration half_ones(std::size_t n) {
  Configuration c = Configuration::all_ones(n);
  for (std::size_t v = 0; v < n; v += 2) c.states[v] = 0;
  return c;
}

void BM_StepReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance inst = large_instance(n);
  const Configuration c = half_ones(n);
  for (auto _ : state) benchmark::DoNotOptimize(step_reference(inst, c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_Step(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance inst = large_instance(n);
  const Configuration c = half_ones(n);
  for (auto _ : state) benchmark::DoNotOptimize(step(inst, c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_MinCriticalSet(benchmark::State& state) {
  corpus::Rng rng(3);
  const Instance inst = corpus::random_instance(16, 0.25, 16, rng);
  SearchOptions o;
  o.size_cap = 16;
  o.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_critical_set(inst, o));
}

void BM_FptDecide(benchmark::State& state) {
  // passes the gate (24 primed vertices <= 2k²) but has no solution, so every R is tried
  std::vector<Edge> edges;
  for (VertexId v = 0; v < 24; ++v) edges.emplace_back(v, (v + 1) % 24);
  const std::vector<Threshold> f(24, 2);
  const Instance inst = make_instance(24, edges, f, 4);
  fpt::FptOptions o;
  o.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fpt::decide(inst, o));
}

}  // namespace

BENCHMARK(BM_StepReference)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_Step)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_MinCriticalSet)->Arg(1)->Arg(0);
BENCHMARK(BM_FptDecide)->Arg(1)->Arg(0);

BENCHMARK_MAIN();
