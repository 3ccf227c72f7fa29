#include "colorloss/percolation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace colorloss {

WrappingUnionFind::WrappingUnionFind(std::size_t nodes)
    : parent_(nodes), size_(nodes), offset_(nodes) {
  reset();
}

void WrappingUnionFind::reset() {
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    parent_[i] = static_cast<std::uint32_t>(i);
    size_[i] = 1;
    offset_[i] = {};
  }
  first_winding_ = {};
  rank_ = 0;
  horizontal_ = false;
  vertical_ = false;
}

// Path halving; offsets are re-based onto the grandparent as we go.
std::uint32_t WrappingUnionFind::find(std::uint32_t x) {
  while (parent_[x] != x) {
    const std::uint32_t p = parent_[x];
    const std::uint32_t g = parent_[p];
    offset_[x] += offset_[p];
    parent_[x] = g;
    x = g;
  }
  return x;
}

CellShift WrappingUnionFind::offset_to_root(std::uint32_t x, std::uint32_t root) const {
  CellShift d;
  for (; x != root; x = parent_[x]) d += offset_[x];
  return d;
}

bool WrappingUnionFind::connected(std::uint32_t a, std::uint32_t b) { return find(a) == find(b); }

void WrappingUnionFind::add(std::uint32_t a, std::uint32_t b, CellShift shift) {
  const std::uint32_t ra = find(a);
  const std::uint32_t rb = find(b);
  const CellShift da = offset_to_root(a, ra);
  const CellShift db = offset_to_root(b, rb);
  if (ra == rb) {
    const CellShift w = da + shift - db;
    if (w.is_zero()) return;
    horizontal_ = horizontal_ || w.dx != 0;
    vertical_ = vertical_ || w.dy != 0;
    if (rank_ == 0) {
      first_winding_ = w;
      rank_ = 1;
    } else if (rank_ == 1) {
      const long cross = static_cast<long>(first_winding_.dx) * w.dy -
                         static_cast<long>(first_winding_.dy) * w.dx;
      if (cross != 0) rank_ = 2;
    }
    return;
  }
  // pos(b) = pos(a) + shift; root rb placed relative to ra.
  const CellShift rb_from_ra = da + shift - db;
  if (size_[ra] >= size_[rb]) {
    parent_[rb] = ra;
    offset_[rb] = rb_from_ra;
    size_[ra] += size_[rb];
  } else {
    parent_[ra] = rb;
    offset_[ra] = -rb_from_ra;
    size_[rb] += size_[ra];
  }
}

namespace {

WrappingUnionFind surviving(const ErasureState& state) {
  const ShrunkLattice& s = *state.lattice;
  WrappingUnionFind uf(s.nodes.size());
  for (const ShrunkEdge& e : s.edges) {
    if (!state.erased[e.id]) uf.add(e.nodes[0], e.nodes[1], e.shift);
  }
  return uf;
}

bool holds(const WrappingUnionFind& uf, OnsetRule rule) {
  // "holds" = the graph still percolates in the sense of the rule
  return rule == OnsetRule::NoWrapping ? uf.wraps() : uf.winding_rank() == 2;
}

}  // namespace

bool wraps(const ErasureState& state) { return surviving(state).wraps(); }

int winding_rank(const ErasureState& state) { return surviving(state).winding_rank(); }

Onset onset_fraction(const ShrunkLattice& lattice, std::span<const std::uint32_t> sequence,
                     OnsetRule rule) {
  const std::size_t E = lattice.edges.size();
  std::vector<std::uint8_t> in_sequence(E, 0);
  for (std::uint32_t e : sequence) {
    if (e >= E) throw std::out_of_range("erasure sequence names an unknown edge");
    if (in_sequence[e]) throw std::invalid_argument("erasure sequence repeats an edge");
    in_sequence[e] = 1;
  }
  WrappingUnionFind uf(lattice.nodes.size());
  for (const ShrunkEdge& e : lattice.edges) {
    if (!in_sequence[e.id]) uf.add(e.nodes[0], e.nodes[1], e.shift);
  }
  Onset onset;
  if (holds(uf, rule)) {
    onset.incomplete = true;
    onset.erased = sequence.size();
    onset.fraction = 1.0;
    return onset;
  }
  for (std::size_t j = sequence.size(); j-- > 0;) {
    const ShrunkEdge& e = lattice.edges[sequence[j]];
    uf.add(e.nodes[0], e.nodes[1], e.shift);
    if (holds(uf, rule)) {
      onset.erased = j + 1;
      onset.fraction = static_cast<double>(j + 1) / static_cast<double>(E);
      return onset;
    }
  }
  // Only reachable when the intact lattice itself does not percolate.
  onset.erased = 0;
  onset.fraction = 0.0;
  return onset;
}

ThresholdConstant r_c_constant(Geometry geometry, Color color) {
  const double s18 = std::sin(std::numbers::pi / 18.0);
  ThresholdConstant t;
  t.geometry = geometry;
  t.color = color;
  switch (geometry) {
    case Geometry::G488:
      if (color == Color::Red) {
        t.lattice = "square";
        t.expression = "1/2";
        t.value = 0.5;
      } else {
        t.lattice = "square, double bonds";
        t.expression = "sqrt(1/2)";
        t.value = std::sqrt(0.5);
      }
      break;
    case Geometry::G666:
      t.lattice = "triangular";
      t.expression = "1 - 2 sin(pi/18)";
      t.value = 1.0 - 2.0 * s18;
      break;
    case Geometry::G4612:
      if (color == Color::Red) {
        t.lattice = "kagome";
        t.expression = "0.4756 (numerical)";
        t.value = 0.4756;
      } else if (color == Color::Blue) {
        t.lattice = "triangular, double bonds";
        t.expression = "sqrt(1 - 2 sin(pi/18))";
        t.value = std::sqrt(1.0 - 2.0 * s18);
      } else {
        t.lattice = "hexagonal, double bonds";
        t.expression = "sqrt(2 sin(pi/18))";
        t.value = std::sqrt(2.0 * s18);
      }
      break;
  }
  return t;
}

}  // namespace colorloss
