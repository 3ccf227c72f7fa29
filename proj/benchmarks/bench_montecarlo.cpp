#include <benchmark/benchmark.h>

#include "colorloss/montecarlo.hpp"

using namespace colorloss;

static void BM_FullLossRun(benchmark::State& state) {
  const auto bench = Workbench::make(Geometry::G666, static_cast<int>(state.range(0)));
  std::uint64_t stream = 0;
  for (auto _ : state) benchmark::DoNotOptimize(full_loss_run(bench, 1, stream++));
  state.counters["qubits"] = static_cast<double>(bench.num_qubits());
}
BENCHMARK(BM_FullLossRun)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_PcPfSample(benchmark::State& state) {
  const auto bench = Workbench::make(Geometry::G666, static_cast<int>(state.range(0)));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    const SampleRun run = full_loss_run(bench, 1, stream++);
    benchmark::DoNotOptimize(sample_pc(bench, run));
    benchmark::DoNotOptimize(sample_pf(bench, run));
  }
}
BENCHMARK(BM_PcPfSample)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_EstimateR(benchmark::State& state) {
  const auto bench = Workbench::make(Geometry::G666, 16);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_r(bench, 0.2, 20, 1, 1));
}
BENCHMARK(BM_EstimateR)->Unit(benchmark::kMillisecond);
