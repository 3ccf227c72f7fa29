#include <benchmark/benchmark.h>

#include <vector>

#include "colorloss/coeffs.hpp"
#include "colorloss/protocol.hpp"

using namespace colorloss;

static void BM_Coefficients(benchmark::State& state) {
  const auto g = static_cast<Geometry>(state.range(0));
  const int ell = static_cast<int>(state.range(1));
  const auto lattice = ColorCodeLattice::build(g, minimal_size(g, ell));
  EnumerationOptions o;
  o.ell_max = ell;
  for (auto _ : state) benchmark::DoNotOptimize(compute_coefficients(lattice, o));
}
BENCHMARK(BM_Coefficients)
    ->ArgsProduct({{0, 1, 2}, {2, 3}})
    ->ArgNames({"geometry", "lmax"})
    ->Unit(benchmark::kMillisecond);

static void BM_ScaledErasureTriple(benchmark::State& state) {
  auto lattice = ColorCodeLattice::build(Geometry::G666, 4);
  const std::vector<QubitId> triple{0, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(scaled_erasure(lattice, triple));
}
BENCHMARK(BM_ScaledErasureTriple)->Unit(benchmark::kMicrosecond);
