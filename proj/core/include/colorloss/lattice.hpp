#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "colorloss/color.hpp"
#include "colorloss/gf2.hpp"

namespace colorloss {

enum class Geometry : std::uint8_t { G488, G666, G4612 };

inline constexpr std::array<Geometry, 3> kGeometries{Geometry::G488, Geometry::G666,
                                                     Geometry::G4612};

/// "4.8.8", "6.6.6", "4.6.12".
std::string_view to_string(Geometry g) noexcept;
/// Accepts the dotted vertex notation or the bare digits ("488", "4612").
Geometry parse_geometry(std::string_view text);
/// Qubits in one unit cell of the three-colorable tiling.
int qubits_per_cell(Geometry g) noexcept;
/// Planar lattice vectors of the unit cell (unit nearest-face spacing).
std::array<std::array<double, 2>, 2> cell_vectors(Geometry g);

using QubitId = std::uint32_t;
using EdgeId = std::uint32_t;
using FaceId = std::uint32_t;
inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

/// Displacement in unit-cell coordinates, not reduced modulo L. Summed around a
/// closed path it gives the path's winding times L.
struct CellShift {
  int dx = 0;
  int dy = 0;

  friend CellShift operator+(CellShift a, CellShift b) { return {a.dx + b.dx, a.dy + b.dy}; }
  friend CellShift operator-(CellShift a, CellShift b) { return {a.dx - b.dx, a.dy - b.dy}; }
  CellShift operator-() const { return {-dx, -dy}; }
  CellShift& operator+=(CellShift o) {
    dx += o.dx;
    dy += o.dy;
    return *this;
  }
  friend bool operator==(CellShift, CellShift) = default;
  bool is_zero() const { return dx == 0 && dy == 0; }
};

struct Edge {
  EdgeId id = kNone;
  std::array<QubitId, 2> ends{kNone, kNone};
  Color color = Color::Red;
  bool original = true;  ///< present in the lattice as built
  bool alive = true;
  CellShift shift;  ///< from ends[0] to ends[1]

  QubitId other(QubitId q) const { return ends[0] == q ? ends[1] : ends[0]; }
  CellShift shift_from(QubitId q) const { return ends[0] == q ? shift : -shift; }
};

struct Face {
  FaceId id = kNone;
  Color color = Color::Red;
  std::vector<QubitId> qubits;  ///< cyclic boundary order
};

/// Faces of the current graph plus, per (qubit, color), the face holding the
/// qubit and the qubit's cell offset from that face's first qubit.
struct FaceIndex {
  std::vector<Face> faces;
  std::vector<std::array<FaceId, 3>> face_of;
  std::vector<std::array<CellShift, 3>> offset_in_face;
};

class UnsupportedSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bookkeeping for one pair removal, enough to undo it.
struct PairRemoval {
  struct Rewire {
    QubitId qubit = kNone;
    Color color = Color::Red;
    EdgeId previous = kNone;
  };
  QubitId first = kNone;
  QubitId second = kNone;
  std::array<EdgeId, 6> erased{};
  std::uint8_t num_erased = 0;
  std::array<EdgeId, 2> added{};
  std::uint8_t num_added = 0;
  std::array<Rewire, 4> rewired{};
  std::uint8_t num_rewired = 0;

  std::span<const EdgeId> erased_edges() const { return {erased.data(), num_erased}; }
  std::span<const EdgeId> added_edges() const { return {added.data(), num_added}; }
};

/// A trivalent, three-edge-colored graph on an L x L torus of unit cells.
///
/// Every alive qubit owns exactly one alive edge of each color. Faces are not
/// stored: the faces of color c are the cycles alternating the other two edge
/// colors, recomputed on demand, so removals never need face surgery.
class ColorCodeLattice {
 public:
  /// Throws UnsupportedSize when L < 2 or the three-coloring does not close
  /// on the requested torus (odd L for 4.8.8).
  static ColorCodeLattice build(Geometry geometry, int L);

  Geometry geometry() const noexcept { return geometry_; }
  int size() const noexcept { return size_; }

  std::size_t num_qubits() const noexcept { return alive_.size(); }
  std::size_t num_alive_qubits() const noexcept { return num_alive_; }
  bool alive(QubitId q) const { return alive_[q] != 0; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  EdgeId edge_at(QubitId q, Color c) const { return incident_[q][index(c)]; }
  QubitId neighbor(QubitId q, Color c) const { return edges_[edge_at(q, c)].other(q); }
  std::size_t num_alive_edges() const noexcept;
  bool has_new_edges() const noexcept;

  /// Unit cell (column, row) holding the qubit, and its slot inside the cell.
  CellShift cell_of(QubitId q) const;
  int slot_in_cell(QubitId q) const;
  /// Planar coordinates of the qubit in its own unit cell.
  std::array<double, 2> position(QubitId q) const;

  std::vector<Face> faces() const;
  FaceIndex index_faces() const;

  /// Removes the adjacent pair (a, b) with all their edges and, for each
  /// color, joins the two freed endpoints by a new edge of that color. The
  /// caller must ensure both are alive and adjacent.
  PairRemoval remove_pair(QubitId a, QubitId b);
  /// Undoes `removal`; removals must be undone in reverse order.
  void restore(const PairRemoval& removal);

  /// Direct construction from explicit tables, used by the JSON loader. No
  /// invariant is enforced here; run validate() on the result.
  static ColorCodeLattice from_parts(Geometry geometry, int L, std::vector<std::uint8_t> alive,
                                     std::vector<Edge> edges,
                                     std::vector<std::array<EdgeId, 3>> incident);

 private:
  ColorCodeLattice() = default;

  Geometry geometry_ = Geometry::G666;
  int size_ = 0;
  std::vector<std::uint8_t> alive_;
  std::size_t num_alive_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::array<EdgeId, 3>> incident_;
};

// ---------------------------------------------------------------- validation

struct Violation {
  std::string kind;
  std::string message;
  std::vector<std::uint32_t> ids;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  bool has(std::string_view kind) const;
};

/// Checks trivalence, proper edge coloring and face structure. On a lattice
/// that has not been corrected yet it also checks the torus counts
/// E = 3N/2, V - E + F = 0 and k = N - (2F - 4) = 4.
ValidationReport validate(const ColorCodeLattice& lattice);

// ------------------------------------------------------------ shrunk lattices

struct ShrunkEdge {
  std::uint32_t id = 0;
  std::array<std::uint32_t, 2> nodes{};  ///< indices into ShrunkLattice::nodes
  EdgeId lattice_edge = kNone;
  CellShift shift;  ///< between the anchor qubits of the two face-nodes
};

/// Nodes are the faces of one color, edges the lattice edges of that color.
/// Parallel edges are kept (double bonds).
struct ShrunkLattice {
  Color color = Color::Red;
  int size = 0;  ///< L of the parent lattice
  std::vector<FaceId> nodes;
  std::vector<ShrunkEdge> edges;
  std::vector<std::uint32_t> edge_of;  ///< lattice EdgeId -> shrunk edge id, kNone if other color

  std::size_t num_parallel_pairs() const;
};

ShrunkLattice shrunk(const ColorCodeLattice& lattice, Color color);

/// N x F_alive incidence matrix: entry (q, f) is 1 iff qubit q lies on face f.
/// Rows of removed qubits are zero. Columns follow ColorCodeLattice::faces().
gf2::BitMatrix face_matrix(const ColorCodeLattice& lattice);

// ---------------------------------------------------------------- logicals

enum class Direction : std::uint8_t { Horizontal, Vertical };
std::string_view to_string(Direction d) noexcept;

struct LogicalRepresentative {
  int class_id = 0;  ///< 1..4 for the independent set, 0 otherwise
  Color color = Color::Red;
  Direction direction = Direction::Horizontal;
  std::vector<QubitId> support;  ///< sorted

  gf2::BitVector mask(std::size_t num_qubits) const;
};

/// A closed string of `color` edges winding once around the torus in
/// `direction`. Its support is the set of endpoints of those edges.
LogicalRepresentative string_operator(const ColorCodeLattice& lattice, Color color,
                                      Direction direction);

/// The four independent classes {Red, Blue} x {Horizontal, Vertical}.
std::vector<LogicalRepresentative> logical_representatives(const ColorCodeLattice& lattice);

// ---------------------------------------------------------------- JSON dump

inline constexpr int kLatticeSchemaVersion = 1;

std::string lattice_to_json(const ColorCodeLattice& lattice, int indent = -1);
/// Throws std::invalid_argument on schema errors. The result is not validated.
ColorCodeLattice lattice_from_json(std::string_view text);

}  // namespace colorloss
