#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "colorloss/lattice.hpp"
#include "colorloss/random.hpp"
#include "colorloss/rational.hpp"

namespace colorloss {

class NotAdjacent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAlive : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reserved for a face collapsing in a way the rewiring cannot represent.
/// The pair-removal rewiring never produces one; see the README.
class DegenerateCode : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set of lost qubits: sorted, duplicate-free.
struct LossInstance {
  std::vector<QubitId> qubits;

  LossInstance() = default;
  explicit LossInstance(std::vector<QubitId> ids);
  std::size_t size() const noexcept { return qubits.size(); }
};

struct Step {
  QubitId lost = kNone;
  QubitId sacrificed = kNone;
  friend bool operator==(const Step&, const Step&) = default;
};

/// Result of one correction step. Only edges that were present in the lattice
/// as built count as erased from the shrunk lattices.
struct StepOutcome {
  PairRemoval removal;
  std::array<EdgeId, 6> erased_original{};
  std::uint8_t num_erased_original = 0;
  std::array<std::uint8_t, 3> erased_per_color{};

  std::span<const EdgeId> erased_original_edges() const {
    return {erased_original.data(), num_erased_original};
  }
};

/// Removes `lost` and `sacrificed` from `state`. Throws NotAlive or NotAdjacent.
StepOutcome apply_step(ColorCodeLattice& state, QubitId lost, QubitId sacrificed);

/// Sacrifices a uniformly random current neighbor of `lost`.
StepOutcome random_correction(ColorCodeLattice& state, QubitId lost, Rng& rng);

struct Correction {
  std::vector<Step> steps;
  Rational weight;  ///< (|i|!)^-1 3^-|steps|
};

struct CorrectionOutcome {
  std::array<std::vector<EdgeId>, 3> erased;  ///< original edges by color, sorted
  std::vector<QubitId> removed;                ///< sorted
};

using CorrectionVisitor =
    std::function<void(const Correction&, const CorrectionOutcome&, const ColorCodeLattice&)>;

/// Visits every (ordering, sacrifice) path for the instance. A loss already
/// removed as an earlier sacrifice contributes no step. `lattice` is used as
/// scratch space and is restored before returning.
void enumerate_corrections(ColorCodeLattice& lattice, const LossInstance& instance,
                           const CorrectionVisitor& visit);

/// Sum over paths of erased original edges per color, in units of
/// 1 / (|i|! 3^|i|). Integer bookkeeping for the coefficient engine.
struct ScaledErasure {
  std::array<std::int64_t, 3> total{};
  std::int64_t paths = 0;         ///< number of correction paths
  std::int64_t weight_sum = 0;    ///< sum of scaled weights, equals scale
  std::int64_t scale = 1;         ///< |i|! 3^|i|

  Rational average(Color c) const { return Rational(total[index(c)], scale); }
};

ScaledErasure scaled_erasure(ColorCodeLattice& lattice, std::span<const QubitId> instance);

/// R_i for one color: exact weighted average of erased original edges.
Rational average_erased(const ColorCodeLattice& lattice, const LossInstance& instance, Color color);

/// JSON-lines trace of a correction sequence, one object per step.
class TraceWriter {
 public:
  explicit TraceWriter(std::ostream& out) : out_(out) {}
  /// Applies the step to `state` and logs it.
  StepOutcome step(ColorCodeLattice& state, QubitId lost, QubitId sacrificed);
  std::size_t steps_written() const noexcept { return count_; }

 private:
  std::ostream& out_;
  std::size_t count_ = 0;
};

}  // namespace colorloss
