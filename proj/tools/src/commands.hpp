#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace cli {

struct Common {
  std::string format = "csv";
  Destination dest;
  unsigned threads = 0;  ///< 0: all cores; never changes results
};

struct LatticeOptions {
  std::string geometry = "666";
  int L = 4;
  std::string input;  ///< reload and re-validate a dump instead of building
  int indent = 2;
};

struct CoeffsOptions {
  std::vector<std::string> geometries{"all"};
  std::vector<std::string> colors{"all"};
  int lmax = 3;
  int L = 0;  ///< 0: smallest size that fits the patch
  unsigned center = 0;
  int extra_radius = 0;
  bool no_prefilter = false;
  bool instances = false;
};

struct ThresholdsOptions {
  std::vector<std::string> geometries{"all"};
  std::vector<std::string> colors{"all"};
  int lmax = 3;
};

struct RCurveOptions {
  std::vector<std::string> geometries{"all"};
  std::vector<int> sizes;  ///< empty: about 4000 qubits per geometry
  std::vector<double> p{0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

struct SizesOptions {
  std::vector<std::string> geometries{"all"};
  std::vector<int> sizes{4, 6, 8, 12, 16};
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::string removal = "lost-and-sacrificed";
  double nu = 4.0 / 3.0;
};

struct ScalingOptions {
  std::string input;
  std::string value_column = "value";
  std::vector<std::string> select;  ///< column=value filters
  double nu = 4.0 / 3.0;
};

struct TraceOptions {
  std::string geometry = "666";
  int L = 4;
  double p = 0.1;
  std::uint64_t seed = 1;
};

/// Each returns the process exit code.
int cmd_lattice(const LatticeOptions& o, const Common& common);
int cmd_coeffs(const CoeffsOptions& o, const Common& common);
int cmd_thresholds(const ThresholdsOptions& o, const Common& common);
int cmd_mc_rcurve(const RCurveOptions& o, const Common& common);
int cmd_mc_pc(const SizesOptions& o, const Common& common);
int cmd_mc_pf(const SizesOptions& o, const Common& common);
int cmd_mc_scaling(const ScalingOptions& o, const Common& common);
int cmd_trace(const TraceOptions& o, const Common& common);

}  // namespace cli
