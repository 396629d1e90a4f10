#include <benchmark/benchmark.h>

#include <random>

#include "choqpath/generator.hpp"
#include "choqpath/rng.hpp"
#include "choqpath/heuristics.hpp"
#include "choqpath/search_mo.hpp"
#include "choqpath/search_rank.hpp"

using namespace choqpath;

namespace {

Capacity random_v1(int m, std::uint64_t seed) {
  SplitMix64 rng = stream_for(seed, kStreamCapacity);
  return capacity_v1(ProbabilityVector(sample_simplex(m, rng)));
}

std::vector<double> random_costs(int m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> z(static_cast<std::size_t>(m));
  for (double& x : z) x = 100.0 * rng.next_unit();
  return z;
}

void BM_ChoquetIntegral(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Capacity v = random_v1(m, 1);
  const auto z = random_costs(m, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(choquet_integral(v, z));
  }
}
BENCHMARK(BM_ChoquetIntegral)->Arg(3)->Arg(5)->Arg(10)->Arg(16);

void BM_CapacityV1(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  SplitMix64 rng = stream_for(3, kStreamCapacity);
  const ProbabilityVector p(sample_simplex(m, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(capacity_v1(p));
  }
}
BENCHMARK(BM_CapacityV1)->Arg(3)->Arg(5)->Arg(10);

void BM_Shapley(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Capacity v = random_v1(m, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shapley(v));
  }
}
BENCHMARK(BM_Shapley)->Arg(3)->Arg(5)->Arg(10);

void BM_MaxEntropy(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Capacity v = random_v1(m, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_entropy(v));
  }
}
BENCHMARK(BM_MaxEntropy)->Arg(3)->Arg(5)->Arg(10);

Instance bench_instance(int nodes, int m) {
  GenerateParams params;
  params.num_nodes = nodes;
  params.density = 0.45;
  params.m = m;
  params.seed = 90000 + static_cast<std::uint64_t>(nodes) + static_cast<std::uint64_t>(m);
  return generate(params);
}

void BM_PerScenarioBounds(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(per_scenario_bounds(inst.graph));
  }
}
BENCHMARK(BM_PerScenarioBounds)->Arg(200)->Arg(500);

void BM_SolveMo(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)), 5);
  const Capacity v = resolve_capacity(inst);
  const DisutilityFn w = resolve_disutility(inst);
  const ProbabilityVector p = max_entropy(v);
  const HeuristicTables tables = build_heuristic_tables(inst.graph, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_mo(inst.graph, v, w, p, tables));
  }
}
BENCHMARK(BM_SolveMo)->Arg(200)->Arg(500);

void BM_SolveRank(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)), 5);
  const Capacity v = resolve_capacity(inst);
  const DisutilityFn w = resolve_disutility(inst);
  const ProbabilityVector p = max_entropy(v);
  const std::vector<double> hbar = scalar_bound(inst.graph, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_rank(inst.graph, v, w, p, hbar));
  }
}
BENCHMARK(BM_SolveRank)->Arg(200)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
