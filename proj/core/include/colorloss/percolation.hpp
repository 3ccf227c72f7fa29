#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "colorloss/lattice.hpp"

namespace colorloss {

/// Union-find over the nodes of a periodic graph that tracks, for each node,
/// its displacement from the root of its cluster. An edge closing a cycle with
/// nonzero net displacement is a winding of the torus.
class WrappingUnionFind {
 public:
  explicit WrappingUnionFind(std::size_t nodes);

  void reset();
  /// Adds the edge a -> b whose endpoints differ by `shift` (cell units).
  void add(std::uint32_t a, std::uint32_t b, CellShift shift);
  bool connected(std::uint32_t a, std::uint32_t b);

  /// Rank of the winding vectors found so far: 0 no cluster wraps, 1 wrapping
  /// in a single homology direction, 2 wrapping in two independent ones.
  int winding_rank() const noexcept { return rank_; }
  bool wraps() const noexcept { return rank_ > 0; }
  bool wraps(Direction d) const noexcept {
    return d == Direction::Horizontal ? horizontal_ : vertical_;
  }

 private:
  std::uint32_t find(std::uint32_t x);
  CellShift offset_to_root(std::uint32_t x, std::uint32_t root) const;

  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<CellShift> offset_;  // node position minus parent position
  CellShift first_winding_;
  int rank_ = 0;
  bool horizontal_ = false;
  bool vertical_ = false;
};

/// Shrunk lattice with a set of erased shrunk-edge ids.
struct ErasureState {
  const ShrunkLattice* lattice = nullptr;
  std::vector<std::uint8_t> erased;  ///< per shrunk edge

  explicit ErasureState(const ShrunkLattice& s) : lattice(&s), erased(s.edges.size(), 0) {}
  void erase(std::uint32_t edge) { erased.at(edge) = 1; }
};

/// True iff the surviving edges contain a cluster winding the torus in at
/// least one direction.
bool wraps(const ErasureState& state);
/// Rank of the winding directions of the surviving graph (0, 1 or 2).
int winding_rank(const ErasureState& state);

/// When does an erasure sequence stop the graph from percolating?
enum class OnsetRule : std::uint8_t {
  NoWrapping,     ///< no wrapping cluster left in any direction
  LostDirection,  ///< some winding direction no longer available
};

struct Onset {
  std::size_t erased = 0;   ///< edges erased when the rule first holds
  double fraction = 1.0;    ///< erased / total shrunk edges
  bool incomplete = false;  ///< the whole sequence never triggers the rule
};

/// Reverse sweep: start from the graph with the whole sequence erased and put
/// edges back from the end. The first re-added edge that restores the
/// property marks the onset. `sequence` must be duplicate-free.
Onset onset_fraction(const ShrunkLattice& lattice, std::span<const std::uint32_t> sequence,
                     OnsetRule rule = OnsetRule::NoWrapping);

/// Critical erased-edge fraction of a shrunk lattice.
struct ThresholdConstant {
  Geometry geometry = Geometry::G666;
  Color color = Color::Red;
  std::string lattice;     ///< shrunk lattice name
  std::string expression;  ///< closed form
  double value = 0.0;
};

ThresholdConstant r_c_constant(Geometry geometry, Color color);

}  // namespace colorloss
