#include <benchmark/benchmark.h>

#include "colorloss/montecarlo.hpp"
#include "colorloss/percolation.hpp"

using namespace colorloss;

static void BM_ReverseSweep(benchmark::State& state) {
  const auto bench = Workbench::make(Geometry::G666, static_cast<int>(state.range(0)));
  const SampleRun run = full_loss_run(bench, 1, 0);
  const auto& s = bench.shrunk[index(Color::Red)];
  const auto& seq = run.erasures[index(Color::Red)];
  for (auto _ : state) benchmark::DoNotOptimize(onset_fraction(s, seq, OnsetRule::NoWrapping));
  state.counters["edges"] = static_cast<double>(s.edges.size());
}
BENCHMARK(BM_ReverseSweep)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_WrappingUnionFind(benchmark::State& state) {
  const auto lattice = ColorCodeLattice::build(Geometry::G488, static_cast<int>(state.range(0)));
  const ShrunkLattice s = shrunk(lattice, Color::Red);
  WrappingUnionFind uf(s.nodes.size());
  for (auto _ : state) {
    uf.reset();
    for (const auto& e : s.edges) uf.add(e.nodes[0], e.nodes[1], e.shift);
    benchmark::DoNotOptimize(uf.winding_rank());
  }
}
BENCHMARK(BM_WrappingUnionFind)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);
