#include <benchmark/benchmark.h>

#include <vector>

#include "colorloss/gf2.hpp"
#include "colorloss/montecarlo.hpp"

using namespace colorloss;

namespace {

std::vector<gf2::BitVector> supports_of(const Workbench& bench) {
  std::vector<gf2::BitVector> s;
  for (const auto& c : bench.classes) s.push_back(c.mask(bench.num_qubits()));
  return s;
}

}  // namespace

static void BM_FaceMatrixRank(benchmark::State& state) {
  const auto lattice = ColorCodeLattice::build(Geometry::G666, static_cast<int>(state.range(0)));
  const auto faces = face_matrix(lattice);
  for (auto _ : state) benchmark::DoNotOptimize(gf2::rank(faces));
  state.counters["qubits"] = static_cast<double>(lattice.num_qubits());
}
BENCHMARK(BM_FaceMatrixRank)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_FirstInformationLoss(benchmark::State& state) {
  const auto bench = Workbench::make(Geometry::G666, static_cast<int>(state.range(0)));
  const auto supports = supports_of(bench);
  const SampleRun run = full_loss_run(bench, 1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gf2::first_information_loss(bench.faces, supports, run.removal));
  }
}
BENCHMARK(BM_FirstInformationLoss)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_InfoIntact(benchmark::State& state) {
  const auto bench = Workbench::make(Geometry::G666, static_cast<int>(state.range(0)));
  const auto supports = supports_of(bench);
  const gf2::FaceSystem system(bench.faces);
  const SampleRun run = full_loss_run(bench, 1, 0);
  gf2::BitVector removed(bench.num_qubits());
  for (std::size_t i = 0; i < run.removal.size() / 4; ++i) removed.set(run.removal[i]);
  for (auto _ : state) benchmark::DoNotOptimize(system.info_intact(supports, removed));
}
BENCHMARK(BM_InfoIntact)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);
