#include "colorloss/montecarlo.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace colorloss {

Workbench Workbench::make(Geometry geometry, int L) {
  Workbench bench{ColorCodeLattice::build(geometry, L), {}, {}, {}, {}};
  for (Color c : kColors) bench.shrunk[index(c)] = colorloss::shrunk(bench.lattice, c);
  bench.faces = face_matrix(bench.lattice);
  bench.classes = logical_representatives(bench.lattice);
  const std::size_t n = bench.lattice.num_qubits();
  for (Color c : kColors) {
    bench.color_supports[index(c)] = {
        string_operator(bench.lattice, c, Direction::Horizontal).mask(n),
        string_operator(bench.lattice, c, Direction::Vertical).mask(n)};
  }
  return bench;
}

std::uint64_t point_seed(std::uint64_t seed, Geometry geometry, int L) {
  return seed ^ (static_cast<std::uint64_t>(L) << 40) ^
         (static_cast<std::uint64_t>(geometry) << 56);
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

SampleRun full_loss_run(const Workbench& bench, std::uint64_t seed, std::uint64_t stream) {
  SampleRun run;
  run.seed = seed;
  run.stream = stream;
  Rng rng = make_rng(seed, stream);
  const std::size_t N = bench.num_qubits();
  run.order.resize(N);
  std::iota(run.order.begin(), run.order.end(), QubitId{0});
  std::shuffle(run.order.begin(), run.order.end(), rng);

  ColorCodeLattice state = bench.lattice;
  run.steps.reserve(N / 2);
  run.removal.reserve(N);
  for (std::size_t t = 0; t < N; ++t) {
    const QubitId q = run.order[t];
    if (!state.alive(q)) continue;
    const StepOutcome out = random_correction(state, q, rng);
    const auto time = static_cast<std::uint32_t>(t + 1);
    run.steps.push_back({q, out.removal.second});
    run.step_time.push_back(time);
    run.removal.push_back(q);
    run.removal.push_back(out.removal.second);
    for (EdgeId e : out.erased_original_edges()) {
      const std::size_t c = index(state.edge(e).color);
      run.erasures[c].push_back(bench.shrunk[c].edge_of[e]);
      run.erasure_time[c].push_back(time);
    }
  }
  return run;
}

PcSample sample_pc(const Workbench& bench, const SampleRun& run) {
  PcSample sample;
  const double N = static_cast<double>(bench.num_qubits());
  for (std::size_t c = 0; c < 3; ++c) {
    auto to_p = [&](const Onset& onset) {
      if (onset.incomplete) {
        sample.incomplete = true;
        return 1.0;
      }
      if (onset.erased == 0) return 0.0;
      return run.erasure_time[c][onset.erased - 1] / N;
    };
    sample.p_c[c] = to_p(onset_fraction(bench.shrunk[c], run.erasures[c], OnsetRule::NoWrapping));
    sample.p_lost_dir[c] =
        to_p(onset_fraction(bench.shrunk[c], run.erasures[c], OnsetRule::LostDirection));
  }
  return sample;
}

PcSample sample_pc(const Workbench& bench, std::uint64_t seed, std::uint64_t stream) {
  return sample_pc(bench, full_loss_run(bench, seed, stream));
}

namespace {

// Removed qubits in the order they leave the code, and the loss time at which
// the k-th of them is gone.
struct RemovalTimeline {
  std::span<const QubitId> qubits;
  std::function<std::uint32_t(std::size_t)> time_of;  // k >= 1
};

RemovalTimeline timeline(const SampleRun& run, PfRemoval removal) {
  if (removal == PfRemoval::LostOnly) {
    return {run.order, [](std::size_t k) { return static_cast<std::uint32_t>(k); }};
  }
  return {run.removal, [&run](std::size_t k) { return run.step_time[(k - 1) / 2]; }};
}

// Loss time at which information carried by `supports` is first destroyed.
double pf_incremental(const Workbench& bench, const RemovalTimeline& tl,
                      std::span<const gf2::BitVector> supports) {
  const std::size_t k = gf2::first_information_loss(bench.faces, supports, tl.qubits);
  if (k == 0) return 1.0;
  return tl.time_of(k) / static_cast<double>(bench.num_qubits());
}

// Same answer from O(log N) independent solves over removal prefixes, using
// that losing information is monotone in the removed set.
double pf_binary_search(const Workbench& bench, const gf2::FaceSystem& system,
                        const RemovalTimeline& tl, std::span<const gf2::BitVector> supports) {
  const std::size_t N = bench.num_qubits();
  auto lost_after = [&](std::size_t k) {
    gf2::BitVector removed(N);
    for (std::size_t i = 0; i < k; ++i) removed.set(tl.qubits[i]);
    return !system.info_intact(supports, removed);
  };
  std::size_t lo = 0;  // intact after lo removals
  std::size_t hi = tl.qubits.size();
  if (!lost_after(hi)) return 1.0;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (lost_after(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return tl.time_of(hi) / static_cast<double>(N);
}

}  // namespace

PfSample sample_pf(const Workbench& bench, const SampleRun& run, const PfOptions& options) {
  std::vector<gf2::BitVector> classes;
  for (const auto& rep : bench.classes) classes.push_back(rep.mask(bench.num_qubits()));
  const RemovalTimeline tl = timeline(run, options.removal);

  PfSample sample;
  if (options.method == PfMethod::Incremental) {
    sample.p_f = pf_incremental(bench, tl, classes);
    if (options.per_color) {
      for (std::size_t c = 0; c < 3; ++c) {
        sample.per_color[c] = pf_incremental(bench, tl, bench.color_supports[c]);
      }
    }
  } else {
    const gf2::FaceSystem system(bench.faces);
    sample.p_f = pf_binary_search(bench, system, tl, classes);
    if (options.per_color) {
      for (std::size_t c = 0; c < 3; ++c) {
        sample.per_color[c] = pf_binary_search(bench, system, tl, bench.color_supports[c]);
      }
    }
  }
  return sample;
}

PfSample sample_pf(const Workbench& bench, std::uint64_t seed, std::uint64_t stream,
                   const PfOptions& options) {
  return sample_pf(bench, full_loss_run(bench, seed, stream), options);
}

MeanError mean_error(const std::vector<double>& values) {
  MeanError m;
  m.n = values.size();
  if (m.n == 0) return m;
  m.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(m.n);
  if (m.n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - m.mean) * (v - m.mean);
    m.stderr_ = std::sqrt(ss / static_cast<double>(m.n - 1) / static_cast<double>(m.n));
  }
  return m;
}

REstimate estimate_r(const Workbench& bench, double p, std::size_t samples, std::uint64_t seed,
                     unsigned threads) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  const std::size_t N = bench.num_qubits();
  const double half = static_cast<double>(N) / 2.0;
  const std::uint64_t base = point_seed(seed, bench.lattice.geometry(), bench.lattice.size());
  auto fractions = parallel_map(samples, threads, [&](std::size_t i) {
    Rng rng = make_rng(base, i);
    std::bernoulli_distribution lose(p);
    std::vector<QubitId> lost;
    for (QubitId q = 0; q < N; ++q) {
      if (lose(rng)) lost.push_back(q);
    }
    std::shuffle(lost.begin(), lost.end(), rng);
    ColorCodeLattice state = bench.lattice;
    std::array<std::size_t, 3> erased{};
    for (QubitId q : lost) {
      if (!state.alive(q)) continue;
      const StepOutcome out = random_correction(state, q, rng);
      for (std::size_t c = 0; c < 3; ++c) erased[c] += out.erased_per_color[c];
    }
    std::array<double, 3> f{};
    for (std::size_t c = 0; c < 3; ++c) f[c] = static_cast<double>(erased[c]) / half;
    return f;
  });
  REstimate est;
  est.p = p;
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<double> v;
    v.reserve(samples);
    for (const auto& f : fractions) v.push_back(f[c]);
    est.r[c] = mean_error(v);
  }
  return est;
}

ScalingEstimate scaling_fit(const std::vector<ScalingPoint>& points, double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("nu must be positive");
  std::set<int> sizes;
  for (const auto& pt : points) {
    if (pt.L <= 0) throw std::invalid_argument("scaling point with non-positive L");
    sizes.insert(pt.L);
  }
  if (sizes.size() < 3) {
    throw InsufficientPoints("scaling fit needs at least 3 distinct L, got " +
                             std::to_string(sizes.size()));
  }
  ScalingEstimate fit;
  fit.points = points;
  fit.nu = nu;
  const double n = static_cast<double>(points.size());
  std::vector<double> x;
  double xm = 0.0;
  double ym = 0.0;
  for (const auto& pt : points) {
    x.push_back(std::pow(static_cast<double>(pt.L), -1.0 / nu));
    xm += x.back();
    ym += pt.value;
  }
  xm /= n;
  ym /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    sxx += (x[i] - xm) * (x[i] - xm);
    sxy += (x[i] - xm) * (points[i].value - ym);
  }
  fit.slope = sxy / sxx;
  fit.intercept = ym - fit.slope * xm;
  double ssr = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double r = points[i].value - (fit.intercept + fit.slope * x[i]);
    fit.residuals.push_back(r);
    ssr += r * r;
  }
  const double s2 = points.size() > 2 ? ssr / (n - 2.0) : 0.0;
  fit.intercept_stderr = std::sqrt(s2 * (1.0 / n + xm * xm / sxx));
  return fit;
}

ThresholdPoint threshold_point(Geometry geometry, int L, const ThresholdRequest& request) {
  const Workbench bench = Workbench::make(geometry, L);
  const std::uint64_t base = point_seed(request.seed, geometry, L);
  struct Both {
    PcSample pc;
    PfSample pf;
  };
  const auto samples = parallel_map(request.samples, request.threads, [&](std::size_t i) {
    const SampleRun run = full_loss_run(bench, base, i);
    Both b;
    if (request.pc) b.pc = sample_pc(bench, run);
    if (request.pf) b.pf = sample_pf(bench, run, {PfMethod::Incremental, request.pf_removal, true});
    return b;
  });

  ThresholdPoint point;
  point.L = L;
  auto summarize = [&](auto get) {
    std::vector<double> v;
    v.reserve(samples.size());
    for (const auto& s : samples) v.push_back(get(s));
    const MeanError m = mean_error(v);
    return ScalingPoint{L, m.mean, m.stderr_, m.n};
  };
  for (std::size_t c = 0; c < 3; ++c) {
    if (request.pc) point.p_c[c] = summarize([c](const Both& b) { return b.pc.p_c[c]; });
    if (request.pf) point.p_f_color[c] = summarize([c](const Both& b) { return b.pf.per_color[c]; });
  }
  if (request.pf) point.p_f = summarize([](const Both& b) { return b.pf.p_f; });
  return point;
}

}  // namespace colorloss
