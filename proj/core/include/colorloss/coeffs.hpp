#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "colorloss/lattice.hpp"
#include "colorloss/rational.hpp"

namespace colorloss {

class MissingSubset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LatticeTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoBracket : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Values keyed by sorted qubit subsets.
using SubsetValues = std::map<std::vector<QubitId>, Rational>;

/// E_i = (-1)^|i| sum_{j ⊆ i} (-1)^|j| R_j, with R_∅ = 0. `instance` must be
/// sorted. Throws MissingSubset if some nonempty subset has no entry.
Rational energy(std::span<const QubitId> instance, const SubsetValues& R);

/// R_i = sum_{j ⊆ i, j nonempty} E_j, the inverse of energy().
Rational reconstruct(std::span<const QubitId> instance, const SubsetValues& E);

/// Qubits within graph distance `radius` of `center`, sorted. Throws
/// LatticeTooSmall if the ball, grown by `margin` more steps, reaches some
/// qubit through two different windings of the torus.
std::vector<QubitId> ball(const ColorCodeLattice& lattice, QubitId center, int radius,
                          int margin = 4);

/// The ball of radius 3(ell - 1) around `center`.
std::vector<QubitId> patch(const ColorCodeLattice& lattice, QubitId center, int ell);

struct InstanceRecord {
  std::vector<QubitId> qubits;  ///< sorted, contains the center
  std::array<Rational, 3> R;    ///< by color
  std::array<Rational, 3> E;
};

struct EnumerationOptions {
  QubitId center = 0;
  int ell_max = 3;
  int extra_radius = 0;   ///< grows every patch radius, for stability checks
  bool prefilter = true;  ///< skip pairs more than 3 apart (separable)
  bool keep_records = false;
};

struct CoefficientRow {
  int ell = 0;
  std::int64_t count = 0;  ///< I_ell
  Rational mean_R;
  Rational mean_E;
  Rational alpha;
};

struct CoefficientTable {
  Geometry geometry = Geometry::G666;
  Color color = Color::Red;
  int L = 0;
  QubitId center = 0;
  std::vector<CoefficientRow> rows;  ///< ell = 1..ell_max

  const CoefficientRow& row(int ell) const { return rows.at(static_cast<std::size_t>(ell - 1)); }
  int ell_max() const noexcept { return static_cast<int>(rows.size()); }
};

struct CoefficientResult {
  std::array<CoefficientTable, 3> tables;  ///< by color
  std::vector<InstanceRecord> records;     ///< filled when keep_records is set
};

/// Tables for all three colors from one enumeration pass.
CoefficientResult compute_coefficients(const ColorCodeLattice& lattice,
                                       const EnumerationOptions& options);

CoefficientTable coefficient_table(const ColorCodeLattice& lattice, Color color, int ell_max);

/// Instances containing `center` with 2 <= size <= ell_max and E != 0 for `color`.
std::vector<InstanceRecord> enumerate_fully_interacting(const ColorCodeLattice& lattice,
                                                        QubitId center, int ell_max, Color color);

/// Smallest L on which the ell_max patch (grown by extra_radius) fits.
int minimal_size(Geometry geometry, int ell_max, int extra_radius = 0);

/// sum_ell alpha_ell p^ell.
double r_of_p(const CoefficientTable& table, double p);

/// Root of r(p) = r_c on [lo, hi] by bisection to absolute tolerance `tol`.
/// Throws NoBracket if r(hi) < r_c or r is not increasing on the interval.
double analytic_threshold(const CoefficientTable& table, double r_c, double lo = 0.0,
                          double hi = 0.6, double tol = 1e-10);

}  // namespace colorloss
