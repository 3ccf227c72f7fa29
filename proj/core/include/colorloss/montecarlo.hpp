#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "colorloss/gf2.hpp"
#include "colorloss/lattice.hpp"
#include "colorloss/percolation.hpp"
#include "colorloss/protocol.hpp"
#include "colorloss/random.hpp"

namespace colorloss {

class InsufficientPoints : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Everything a sample needs that does not depend on the seed. Built once per
/// (geometry, L) and shared read-only between workers.
struct Workbench {
  ColorCodeLattice lattice;
  std::array<ShrunkLattice, 3> shrunk;
  gf2::BitMatrix faces;
  std::vector<LogicalRepresentative> classes;                  ///< the 4 independent classes
  std::array<std::array<gf2::BitVector, 2>, 3> color_supports;  ///< H, V string per color

  static Workbench make(Geometry geometry, int L);
  std::size_t num_qubits() const { return lattice.num_qubits(); }
};

/// Seed of the sample streams for one (geometry, L) point.
std::uint64_t point_seed(std::uint64_t seed, Geometry geometry, int L);

/// One run in which every qubit is lost, in random order, each loss corrected
/// on arrival. Times count losses drawn so far, including losses of qubits
/// that were already sacrificed.
struct SampleRun {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::vector<QubitId> order;
  std::vector<Step> steps;
  std::vector<std::uint32_t> step_time;
  std::array<std::vector<std::uint32_t>, 3> erasures;  ///< shrunk-edge ids per color
  std::array<std::vector<std::uint32_t>, 3> erasure_time;
  std::vector<QubitId> removal;  ///< lost, sacrificed, lost, sacrificed, ...
};

SampleRun full_loss_run(const Workbench& bench, std::uint64_t seed, std::uint64_t stream);

struct PcSample {
  std::array<double, 3> p_c{};        ///< no wrapping cluster left
  std::array<double, 3> p_lost_dir{};  ///< first winding direction lost
  bool incomplete = false;
};

PcSample sample_pc(const Workbench& bench, const SampleRun& run);
PcSample sample_pc(const Workbench& bench, std::uint64_t seed, std::uint64_t stream);

enum class PfMethod : std::uint8_t { Incremental, BinarySearch };

/// Which qubits count as removed when testing the logical classes.
enum class PfRemoval : std::uint8_t {
  LostAndSacrificed,  ///< every qubit taken out by the corrections
  LostOnly,           ///< only the lost qubits, ignoring sacrifices
};

struct PfSample {
  double p_f = 1.0;  ///< some logical class lost
  std::array<double, 3> per_color{1.0, 1.0, 1.0};
};

struct PfOptions {
  PfMethod method = PfMethod::Incremental;
  PfRemoval removal = PfRemoval::LostAndSacrificed;
  bool per_color = true;
};

PfSample sample_pf(const Workbench& bench, const SampleRun& run, const PfOptions& options = {});
PfSample sample_pf(const Workbench& bench, std::uint64_t seed, std::uint64_t stream,
                   const PfOptions& options = {});

struct MeanError {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t n = 0;
};

MeanError mean_error(const std::vector<double>& values);

struct REstimate {
  double p = 0.0;
  std::array<MeanError, 3> r;  ///< erased original fraction by color
  std::size_t degenerate = 0;  ///< samples discarded (always 0 with this protocol)
};

/// Erased-edge fraction at iid loss rate p, averaged over `samples` runs.
REstimate estimate_r(const Workbench& bench, double p, std::size_t samples, std::uint64_t seed,
                     unsigned threads = 0);

struct ScalingPoint {
  int L = 0;
  double value = 0.0;
  double stderr_ = 0.0;
  std::size_t n = 0;
};

struct ScalingEstimate {
  std::vector<ScalingPoint> points;
  double nu = 4.0 / 3.0;
  double intercept = 0.0;
  double intercept_stderr = 0.0;
  double slope = 0.0;
  std::vector<double> residuals;
};

/// OLS of value against L^(-1/nu). Needs at least three distinct L.
ScalingEstimate scaling_fit(const std::vector<ScalingPoint>& points, double nu = 4.0 / 3.0);

/// Per-size threshold means for all colors at one L.
struct ThresholdPoint {
  int L = 0;
  std::array<ScalingPoint, 3> p_c;
  std::array<ScalingPoint, 3> p_f_color;
  ScalingPoint p_f;
};

struct ThresholdRequest {
  bool pc = true;
  bool pf = false;
  PfRemoval pf_removal = PfRemoval::LostAndSacrificed;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

ThresholdPoint threshold_point(Geometry geometry, int L, const ThresholdRequest& request);

unsigned resolve_threads(unsigned requested);

/// Runs fn(i) for i in [0, n) on up to `threads` workers and returns the
/// results in index order.
template <typename Fn>
auto parallel_map(std::size_t n, unsigned threads, Fn fn) {
  using T = decltype(fn(std::size_t{0}));
  std::vector<T> out(n);
  const unsigned workers = std::max(1U, std::min<unsigned>(resolve_threads(threads),
                                                           static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          out[i] = fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace colorloss
