#include <benchmark/benchmark.h>

#include <set>

#include "qgaforge/fitness.hpp"
#include "qgaforge/grover.hpp"
#include "qgaforge/qga.hpp"
#include "qgaforge/rng.hpp"
#include "qgaforge/rqga.hpp"
#include "qgaforge/sga.hpp"
#include "qgaforge/statevector.hpp"

using namespace qgaforge;

static void BM_UniformSuperposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(uniform_superposition(n));
  }
  state.SetComplexityN(1 << n);
}
BENCHMARK(BM_UniformSuperposition)->Arg(10)->Arg(16)->Arg(20)->Complexity();

static void BM_GroverIteration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DiagonalOperator oracle = oracle_from_marked(n, {1});
  Statevector sv = uniform_superposition(n);
  for (auto _ : state) {
    sv = apply_inversion_about_mean(apply_diagonal(sv, oracle));
    benchmark::DoNotOptimize(sv.amplitudes.data());
  }
  state.SetComplexityN(1 << n);
}
BENCHMARK(BM_GroverIteration)->Arg(10)->Arg(16)->Arg(20)->Complexity();

static void BM_MeasureShots(benchmark::State& state) {
  const Statevector sv = uniform_superposition(10);
  Rng rng(1);
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure_shots(sv, shots, rng));
  }
}
BENCHMARK(BM_MeasureShots)->Arg(1024)->Arg(10000);

static void BM_FitnessTable(benchmark::State& state) {
  FitnessFunction problem;
  problem.name = "ramp";
  problem.domain_bits = static_cast<int>(state.range(0));
  problem.evaluator = [](std::uint64_t x) {
    return static_cast<double>(x % 997);
  };
  const QuantizationRule rule{1.0, 10};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_fitness_table(problem, rule));
  }
}
BENCHMARK(BM_FitnessTable)->Arg(8)->Arg(12)->Arg(16);

static void BM_RqgaEndToEnd(benchmark::State& state) {
  RqgaConfig config;
  config.problem = find_problem("f1-paper");
  config.policy = IterationPolicy::standard();
  config.shots = 10000;
  config.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_rqga(config));
  }
}
BENCHMARK(BM_RqgaEndToEnd);

static void BM_QgaRun(benchmark::State& state) {
  QgaConfig config;
  config.max_generations = static_cast<int>(state.range(0));
  config.seed = 1;
  const FitnessFunction problem = find_problem("f1-paper");
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_qga(config, problem));
  }
}
BENCHMARK(BM_QgaRun)->Arg(10)->Arg(50);

static void BM_SgaRun(benchmark::State& state) {
  SgaConfig config;
  config.max_generations = static_cast<int>(state.range(0));
  config.seed = 1;
  const FitnessFunction problem = find_problem("f1-paper");
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sga(config, problem));
  }
}
BENCHMARK(BM_SgaRun)->Arg(10)->Arg(50);

BENCHMARK_MAIN();
