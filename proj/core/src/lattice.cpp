#include "colorloss/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <unordered_map>

namespace colorloss {

namespace {

using Vec2 = std::array<double, 2>;

struct CellEdge {
  int u;
  int v;
  CellShift shift;
};

/// Planar embedding of one unit cell: lattice vectors, qubit positions and the
/// edges leaving the cell (as shifts to the target cell).
struct CellSpec {
  Vec2 a1;
  Vec2 a2;
  std::vector<Vec2> pos;
  std::vector<CellEdge> edges;
};

CellSpec cell_488() {
  const double s = 1.0 / (2.0 + std::numbers::sqrt2);
  CellSpec spec{{1.0, 0.0}, {0.0, 1.0}, {{s, 0.0}, {0.0, s}, {-s, 0.0}, {0.0, -s}}, {}};
  spec.edges = {{0, 1, {0, 0}}, {1, 2, {0, 0}}, {2, 3, {0, 0}},
                {3, 0, {0, 0}}, {0, 2, {1, 0}}, {1, 3, {0, 1}}};
  return spec;
}

// Honeycomb on a sqrt3 x sqrt3 supercell of the hexagon-center triangular
// lattice: three hexagons (one per color class i - j mod 3) and six qubits.
CellSpec cell_666() {
  const double r3 = std::numbers::sqrt3;
  CellSpec spec{{1.5, r3 / 2.0}, {0.0, r3}, {}, {}};
  for (int p = 0; p < 3; ++p) {
    spec.pos.push_back({static_cast<double>(p), 1.0 / r3});
    spec.pos.push_back({p + 0.5, 0.5 / r3});
  }
  // hexagon (i, j) of the primitive lattice -> (class p, supercell shift)
  auto locate = [](int i, int j) {
    const int p = ((i - j) % 3 + 3) % 3;
    const int n = (j - i + p) / 3;
    const int m = i - p + n;
    return std::pair{p, CellShift{m, n}};
  };
  for (int p = 0; p < 3; ++p) {
    for (auto [di, dj] : {std::pair{0, 0}, std::pair{-1, 0}, std::pair{-1, 1}}) {
      const auto [q, shift] = locate(p + di, dj);
      spec.edges.push_back({2 * p, 2 * q + 1, shift});
    }
  }
  return spec;
}

// One dodecagon per cell; vertex k sits at angle 15 + 30k degrees. Links in
// the three forward directions join vertices 2d, 2d-1 to 2d+5, 2d+6.
CellSpec cell_4612() {
  const double pi = std::numbers::pi;
  const double rho = 1.0 / (2.0 * std::sin(pi / 12.0) + 2.0 * std::cos(pi / 12.0));
  CellSpec spec{{1.0, 0.0}, {0.5, std::numbers::sqrt3 / 2.0}, {}, {}};
  for (int k = 0; k < 12; ++k) {
    const double angle = (15.0 + 30.0 * k) * pi / 180.0;
    spec.pos.push_back({rho * std::cos(angle), rho * std::sin(angle)});
  }
  for (int k = 0; k < 12; ++k) spec.edges.push_back({k, (k + 1) % 12, {0, 0}});
  const std::array<CellShift, 3> forward{CellShift{1, 0}, CellShift{0, 1}, CellShift{-1, 1}};
  for (int d = 0; d < 3; ++d) {
    spec.edges.push_back({2 * d, (2 * d + 5) % 12, forward[d]});
    spec.edges.push_back({(2 * d + 11) % 12, (2 * d + 6) % 12, forward[d]});
  }
  return spec;
}

const CellSpec& cell_spec(Geometry g) {
  static const CellSpec s488 = cell_488();
  static const CellSpec s666 = cell_666();
  static const CellSpec s4612 = cell_4612();
  switch (g) {
    case Geometry::G488: return s488;
    case Geometry::G666: return s666;
    case Geometry::G4612: return s4612;
  }
  return s666;
}

int wrap(int x, int L) { return ((x % L) + L) % L; }

struct Slot {
  double angle;
  EdgeId edge;
  int dir;  // 0: this qubit is ends[0]
};

}  // namespace

std::string_view to_string(Geometry g) noexcept {
  switch (g) {
    case Geometry::G488: return "4.8.8";
    case Geometry::G666: return "6.6.6";
    case Geometry::G4612: return "4.6.12";
  }
  return "?";
}

Geometry parse_geometry(std::string_view text) {
  std::string digits;
  for (char ch : text) {
    if (ch != '.') digits.push_back(ch);
  }
  if (digits == "488") return Geometry::G488;
  if (digits == "666") return Geometry::G666;
  if (digits == "4612") return Geometry::G4612;
  throw std::invalid_argument("unknown geometry '" + std::string(text) +
                              "' (expected 488, 666 or 4612)");
}

int qubits_per_cell(Geometry g) noexcept {
  switch (g) {
    case Geometry::G488: return 4;
    case Geometry::G666: return 6;
    case Geometry::G4612: return 12;
  }
  return 0;
}

std::array<std::array<double, 2>, 2> cell_vectors(Geometry g) {
  const CellSpec& spec = cell_spec(g);
  return {spec.a1, spec.a2};
}

ColorCodeLattice ColorCodeLattice::build(Geometry geometry, int L) {
  if (L < 2) throw UnsupportedSize("L must be at least 2, got " + std::to_string(L));
  const CellSpec& spec = cell_spec(geometry);
  const int K = static_cast<int>(spec.pos.size());
  const std::size_t N = static_cast<std::size_t>(K) * L * L;
  auto qid = [&](int cx, int cy, int k) {
    return static_cast<QubitId>((wrap(cy, L) * L + wrap(cx, L)) * K + k);
  };

  ColorCodeLattice lat;
  lat.geometry_ = geometry;
  lat.size_ = L;
  lat.alive_.assign(N, 1);
  lat.num_alive_ = N;
  lat.incident_.assign(N, {kNone, kNone, kNone});

  std::vector<std::vector<Slot>> slots(N);
  for (int cy = 0; cy < L; ++cy) {
    for (int cx = 0; cx < L; ++cx) {
      for (const CellEdge& ce : spec.edges) {
        Edge e;
        e.id = static_cast<EdgeId>(lat.edges_.size());
        e.ends = {qid(cx, cy, ce.u), qid(cx + ce.shift.dx, cy + ce.shift.dy, ce.v)};
        e.shift = ce.shift;
        if (e.ends[0] == e.ends[1]) throw UnsupportedSize("lattice too small: self-loop edge");
        const double vx = ce.shift.dx * spec.a1[0] + ce.shift.dy * spec.a2[0] +
                          spec.pos[ce.v][0] - spec.pos[ce.u][0];
        const double vy = ce.shift.dx * spec.a1[1] + ce.shift.dy * spec.a2[1] +
                          spec.pos[ce.v][1] - spec.pos[ce.u][1];
        slots[e.ends[0]].push_back({std::atan2(vy, vx), e.id, 0});
        slots[e.ends[1]].push_back({std::atan2(-vy, -vx), e.id, 1});
        lat.edges_.push_back(e);
      }
    }
  }
  for (auto& s : slots) {
    if (s.size() != 3) throw LatticeError("cell table is not trivalent");
    std::sort(s.begin(), s.end(), [](const Slot& a, const Slot& b) { return a.angle < b.angle; });
  }

  // Trace the faces of the embedding. A directed edge is (edge, dir); the
  // face to its right continues with the next slot clockwise at the head.
  const std::size_t E = lat.edges_.size();
  std::vector<std::uint32_t> face_of_dart(2 * E, kNone);
  std::vector<std::vector<QubitId>> geo_faces;
  for (QubitId q = 0; q < N; ++q) {
    for (int s = 0; s < 3; ++s) {
      const Slot& start = slots[q][s];
      if (face_of_dart[2 * start.edge + start.dir] != kNone) continue;
      const auto fid = static_cast<std::uint32_t>(geo_faces.size());
      std::vector<QubitId> boundary;
      QubitId cur = q;
      int cur_slot = s;
      for (;;) {
        const Slot& out = slots[cur][cur_slot];
        const std::size_t dart = 2 * out.edge + out.dir;
        if (face_of_dart[dart] != kNone) break;
        face_of_dart[dart] = fid;
        boundary.push_back(cur);
        const QubitId head = lat.edges_[out.edge].ends[1 - out.dir];
        int back = 0;
        while (!(slots[head][back].edge == out.edge && slots[head][back].dir != out.dir)) ++back;
        cur = head;
        cur_slot = (back + 2) % 3;
      }
      geo_faces.push_back(std::move(boundary));
    }
  }

  // The three faces around each qubit, one per corner.
  std::vector<std::array<std::uint32_t, 3>> corners(N);
  for (QubitId q = 0; q < N; ++q) {
    for (int s = 0; s < 3; ++s) {
      corners[q][s] = face_of_dart[2 * slots[q][s].edge + slots[q][s].dir];
    }
    const auto& c = corners[q];
    if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2]) {
      throw UnsupportedSize("lattice too small: a face touches itself at L=" + std::to_string(L));
    }
  }

  // Seed the coloring at qubit 0, then propagate: two known face colors at a
  // qubit force the third.
  constexpr std::uint8_t kUncolored = 3;
  std::vector<std::uint8_t> face_color(geo_faces.size(), kUncolored);
  {
    std::array<std::uint32_t, 3> seed = corners[0];
    std::sort(seed.begin(), seed.end());
    for (std::uint32_t f : seed) {
      const std::size_t n = geo_faces[f].size();
      Color c = Color::Red;
      switch (geometry) {
        case Geometry::G488: {
          // octagons in increasing id order take blue then green
          const bool first_octagon =
              std::none_of(seed.begin(), seed.end(), [&](std::uint32_t g) {
                return g < f && geo_faces[g].size() != 4;
              });
          c = (n == 4) ? Color::Red : (first_octagon ? Color::Blue : Color::Green);
          break;
        }
        case Geometry::G666:
          c = color_from_index(static_cast<std::size_t>(std::find(seed.begin(), seed.end(), f) -
                                                        seed.begin()));
          break;
        case Geometry::G4612:
          c = (n == 4) ? Color::Red : (n == 12 ? Color::Blue : Color::Green);
          break;
      }
      face_color[f] = static_cast<std::uint8_t>(c);
    }
  }
  std::vector<std::vector<QubitId>> qubits_of_face(geo_faces.size());
  for (QubitId q = 0; q < N; ++q) {
    for (std::uint32_t f : corners[q]) qubits_of_face[f].push_back(q);
  }
  std::deque<QubitId> work(geo_faces[corners[0][0]].begin(), geo_faces[corners[0][0]].end());
  for (int s = 1; s < 3; ++s) {
    work.insert(work.end(), geo_faces[corners[0][s]].begin(), geo_faces[corners[0][s]].end());
  }
  while (!work.empty()) {
    const QubitId q = work.front();
    work.pop_front();
    int unknown = -1;
    int known = 0;
    unsigned used = 0;
    for (int s = 0; s < 3; ++s) {
      const std::uint8_t fc = face_color[corners[q][s]];
      if (fc == kUncolored) {
        unknown = s;
      } else {
        ++known;
        used |= 1U << fc;
      }
    }
    if (known != 2 || unknown < 0) continue;
    if (std::popcount(used) != 2) continue;  // conflict, reported below
    const std::uint32_t f = corners[q][unknown];
    face_color[f] = static_cast<std::uint8_t>(std::countr_zero(~used & 7U));
    work.insert(work.end(), qubits_of_face[f].begin(), qubits_of_face[f].end());
  }
  for (QubitId q = 0; q < N; ++q) {
    unsigned used = 0;
    for (std::uint32_t f : corners[q]) {
      if (face_color[f] == kUncolored) {
        throw UnsupportedSize("three-coloring does not reach every face at L=" + std::to_string(L));
      }
      used |= 1U << face_color[f];
    }
    if (used != 7U) {
      throw UnsupportedSize("face three-coloring of " + std::string(to_string(geometry)) +
                            " does not close periodically at L=" + std::to_string(L));
    }
  }

  for (Edge& e : lat.edges_) {
    const std::uint8_t left = face_color[face_of_dart[2 * e.id]];
    const std::uint8_t right = face_color[face_of_dart[2 * e.id + 1]];
    if (left == right) throw UnsupportedSize("edge between two faces of the same color");
    e.color = third_color(color_from_index(left), color_from_index(right));
    for (QubitId q : e.ends) {
      EdgeId& slot = lat.incident_[q][index(e.color)];
      if (slot != kNone) throw UnsupportedSize("edge coloring is not proper at L=" + std::to_string(L));
      slot = e.id;
    }
  }
  return lat;
}

ColorCodeLattice ColorCodeLattice::from_parts(Geometry geometry, int L,
                                              std::vector<std::uint8_t> alive,
                                              std::vector<Edge> edges,
                                              std::vector<std::array<EdgeId, 3>> incident) {
  if (alive.size() != incident.size()) {
    throw std::invalid_argument("alive and incidence tables differ in length");
  }
  ColorCodeLattice lat;
  lat.geometry_ = geometry;
  lat.size_ = L;
  lat.num_alive_ = static_cast<std::size_t>(std::count(alive.begin(), alive.end(), 1));
  lat.alive_ = std::move(alive);
  lat.edges_ = std::move(edges);
  lat.incident_ = std::move(incident);
  return lat;
}

std::size_t ColorCodeLattice::num_alive_edges() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.alive; }));
}

bool ColorCodeLattice::has_new_edges() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return !e.original; });
}

CellShift ColorCodeLattice::cell_of(QubitId q) const {
  const int cell = static_cast<int>(q) / qubits_per_cell(geometry_);
  return {cell % size_, cell / size_};
}

int ColorCodeLattice::slot_in_cell(QubitId q) const {
  return static_cast<int>(q) % qubits_per_cell(geometry_);
}

std::array<double, 2> ColorCodeLattice::position(QubitId q) const {
  const CellSpec& spec = cell_spec(geometry_);
  const CellShift c = cell_of(q);
  const auto& p = spec.pos[static_cast<std::size_t>(slot_in_cell(q))];
  return {c.dx * spec.a1[0] + c.dy * spec.a2[0] + p[0], c.dx * spec.a1[1] + c.dy * spec.a2[1] + p[1]};
}

FaceIndex ColorCodeLattice::index_faces() const {
  FaceIndex idx;
  const std::size_t N = num_qubits();
  idx.face_of.assign(N, {kNone, kNone, kNone});
  idx.offset_in_face.assign(N, {});
  for (QubitId q = 0; q < N; ++q) {
    if (!alive(q)) continue;
    for (Color c : kColors) {
      if (idx.face_of[q][index(c)] != kNone) continue;
      const Color a = color_from_index(index(c) == 0 ? 1 : 0);
      const Color b = third_color(a, c);
      Face face;
      face.id = static_cast<FaceId>(idx.faces.size());
      face.color = c;
      QubitId cur = q;
      CellShift offset;
      Color step = a;
      do {
        face.qubits.push_back(cur);
        idx.face_of[cur][index(c)] = face.id;
        idx.offset_in_face[cur][index(c)] = offset;
        const Edge& e = edges_[edge_at(cur, step)];
        offset += e.shift_from(cur);
        cur = e.other(cur);
        step = (step == a) ? b : a;
      } while (cur != q);
      idx.faces.push_back(std::move(face));
    }
  }
  return idx;
}

std::vector<Face> ColorCodeLattice::faces() const { return index_faces().faces; }

PairRemoval ColorCodeLattice::remove_pair(QubitId a, QubitId b) {
  PairRemoval rec;
  rec.first = a;
  rec.second = b;
  for (QubitId q : {a, b}) {
    for (Color c : kColors) {
      const EdgeId e = edge_at(q, c);
      if (std::find(rec.erased.begin(), rec.erased.begin() + rec.num_erased, e) ==
          rec.erased.begin() + rec.num_erased) {
        rec.erased[rec.num_erased++] = e;
      }
    }
  }

  CellShift a_to_b;
  for (Color c : kColors) {
    if (neighbor(a, c) == b) {
      a_to_b = edges_[edge_at(a, c)].shift_from(a);
      break;
    }
  }

  for (Color c : kColors) {
    const Edge& ea = edges_[edge_at(a, c)];
    const QubitId p = ea.other(a);
    if (p == b) continue;
    const Edge& eb = edges_[edge_at(b, c)];
    const QubitId q = eb.other(b);
    Edge added;
    added.id = static_cast<EdgeId>(edges_.size());
    added.ends = {p, q};
    added.color = c;
    added.original = false;
    added.shift = -ea.shift_from(a) + a_to_b + eb.shift_from(b);
    rec.rewired[rec.num_rewired++] = {p, c, incident_[p][index(c)]};
    rec.rewired[rec.num_rewired++] = {q, c, incident_[q][index(c)]};
    incident_[p][index(c)] = added.id;
    incident_[q][index(c)] = added.id;
    rec.added[rec.num_added++] = added.id;
    edges_.push_back(added);
  }

  for (EdgeId e : rec.erased_edges()) edges_[e].alive = false;
  alive_[a] = 0;
  alive_[b] = 0;
  num_alive_ -= 2;
  return rec;
}

void ColorCodeLattice::restore(const PairRemoval& removal) {
  for (std::size_t i = removal.num_added; i-- > 0;) {
    if (edges_.empty() || edges_.back().id != removal.added[i]) {
      throw LatticeError("restore called out of order");
    }
    edges_.pop_back();
  }
  for (std::size_t i = removal.num_rewired; i-- > 0;) {
    const auto& r = removal.rewired[i];
    incident_[r.qubit][index(r.color)] = r.previous;
  }
  for (EdgeId e : removal.erased_edges()) edges_[e].alive = true;
  alive_[removal.first] = 1;
  alive_[removal.second] = 1;
  num_alive_ += 2;
}

// ---------------------------------------------------------------- validation

bool ValidationReport::has(std::string_view kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate(const ColorCodeLattice& lattice) {
  ValidationReport report;
  auto add = [&](std::string kind, std::string message, std::vector<std::uint32_t> ids) {
    report.violations.push_back({std::move(kind), std::move(message), std::move(ids)});
  };
  const std::size_t N = lattice.num_qubits();
  const auto& edges = lattice.edges();

  bool graph_ok = true;
  for (QubitId q = 0; q < N; ++q) {
    if (!lattice.alive(q)) continue;
    for (Color c : kColors) {
      const EdgeId e = lattice.edge_at(q, c);
      if (e == kNone || e >= edges.size()) {
        add("trivalence", "qubit has no " + std::string(to_string(c)) + " edge", {q});
        graph_ok = false;
        continue;
      }
      const Edge& edge = edges[e];
      if (!edge.alive) {
        add("trivalence", "qubit points at an erased edge", {q, e});
        graph_ok = false;
      }
      if (edge.ends[0] != q && edge.ends[1] != q) {
        add("incidence", "edge slot does not contain the qubit", {q, e});
        graph_ok = false;
      }
      if (edge.color != c) {
        add("edge-coloring", "qubit has two edges of color " + std::string(to_string(edge.color)),
            {q, e});
        graph_ok = false;
      }
    }
  }
  for (const Edge& e : edges) {
    if (!e.alive) continue;
    if (e.ends[0] == e.ends[1]) {
      add("incidence", "self-loop edge", {e.id});
      graph_ok = false;
      continue;
    }
    for (QubitId q : e.ends) {
      if (q >= N || !lattice.alive(q)) {
        add("incidence", "alive edge touches a removed qubit", {e.id, q});
        graph_ok = false;
      } else if (lattice.edge_at(q, e.color) != e.id) {
        add("edge-coloring", "edge is not registered in its endpoint's color slot", {e.id, q});
        graph_ok = false;
      }
    }
  }
  if (!graph_ok) return report;  // faces are undefined on a broken graph

  const auto faces = lattice.faces();
  for (const Face& f : faces) {
    if (f.qubits.size() < 2 || f.qubits.size() % 2 != 0) {
      add("face-size", "face has odd or zero size", {f.id});
    }
  }

  if (lattice.num_alive_qubits() == N && !lattice.has_new_edges()) {
    const auto V = static_cast<long>(N);
    const auto E = static_cast<long>(lattice.num_alive_edges());
    const auto F = static_cast<long>(faces.size());
    if (2 * E != 3 * V) add("torus-counts", "E != 3N/2", {});
    if (V - E + F != 0) add("torus-counts", "V - E + F != 0 on the torus", {});
    if (V - (2 * F - 4) != 4) add("torus-counts", "k = N - (2F - 4) != 4", {});
  }
  return report;
}

// ------------------------------------------------------------ shrunk lattices

std::size_t ShrunkLattice::num_parallel_pairs() const {
  std::map<std::tuple<std::uint32_t, std::uint32_t, int, int>, std::size_t> seen;
  std::size_t pairs = 0;
  for (const ShrunkEdge& e : edges) {
    auto [a, b] = e.nodes;
    CellShift s = e.shift;
    if (a > b || (a == b && (s.dx < 0 || (s.dx == 0 && s.dy < 0)))) {
      std::swap(a, b);
      s = -s;
    }
    pairs += seen[{a, b, s.dx, s.dy}]++;
  }
  return pairs;
}

ShrunkLattice shrunk(const ColorCodeLattice& lattice, Color color) {
  const FaceIndex idx = lattice.index_faces();
  const std::size_t c = index(color);
  ShrunkLattice out;
  out.color = color;
  out.size = lattice.size();
  std::vector<std::uint32_t> node_of(idx.faces.size(), kNone);
  for (const Face& f : idx.faces) {
    if (f.color != color) continue;
    node_of[f.id] = static_cast<std::uint32_t>(out.nodes.size());
    out.nodes.push_back(f.id);
  }
  out.edge_of.assign(lattice.edges().size(), kNone);
  for (const Edge& e : lattice.edges()) {
    if (!e.alive || e.color != color) continue;
    const QubitId u = e.ends[0];
    const QubitId v = e.ends[1];
    ShrunkEdge se;
    se.id = static_cast<std::uint32_t>(out.edges.size());
    se.nodes = {node_of[idx.face_of[u][c]], node_of[idx.face_of[v][c]]};
    se.lattice_edge = e.id;
    se.shift = idx.offset_in_face[u][c] + e.shift - idx.offset_in_face[v][c];
    out.edge_of[e.id] = se.id;
    out.edges.push_back(se);
  }
  return out;
}

gf2::BitMatrix face_matrix(const ColorCodeLattice& lattice) {
  const auto faces = lattice.faces();
  gf2::BitMatrix m(lattice.num_qubits(), faces.size());
  for (const Face& f : faces) {
    for (QubitId q : f.qubits) m.set(q, f.id);
  }
  return m;
}

// ---------------------------------------------------------------- logicals

std::string_view to_string(Direction d) noexcept {
  return d == Direction::Horizontal ? "horizontal" : "vertical";
}

gf2::BitVector LogicalRepresentative::mask(std::size_t num_qubits) const {
  return gf2::BitVector::from_indices(num_qubits, std::span<const QubitId>(support));
}

LogicalRepresentative string_operator(const ColorCodeLattice& lattice, Color color,
                                      Direction direction) {
  const ShrunkLattice s = shrunk(lattice, color);
  if (s.nodes.empty()) throw LatticeError("no faces of the requested color");
  const int L = lattice.size();
  const int bound = 2 * L;
  const long span = 2 * bound + 1;
  auto key = [&](std::uint32_t node, CellShift at) {
    return (static_cast<long>(node) * span + (at.dx + bound)) * span + (at.dy + bound);
  };

  std::vector<std::vector<std::pair<std::uint32_t, int>>> adj(s.nodes.size());
  for (const ShrunkEdge& e : s.edges) {
    adj[e.nodes[0]].push_back({e.id, 0});
    adj[e.nodes[1]].push_back({e.id, 1});
  }

  const CellShift target = direction == Direction::Horizontal ? CellShift{L, 0} : CellShift{0, L};
  struct Visit {
    long parent;
    std::uint32_t via;
  };
  std::unordered_map<long, Visit> seen;
  std::deque<std::pair<std::uint32_t, CellShift>> queue;
  const long start = key(0, {});
  seen.emplace(start, Visit{-1, kNone});
  queue.push_back({0, {}});
  long found = -1;
  while (!queue.empty() && found < 0) {
    const auto [node, at] = queue.front();
    queue.pop_front();
    const long here = key(node, at);
    for (const auto& [eid, dir] : adj[node]) {
      const ShrunkEdge& e = s.edges[eid];
      const std::uint32_t next = e.nodes[1 - dir];
      const CellShift moved = dir == 0 ? at + e.shift : at - e.shift;
      if (std::abs(moved.dx) > bound || std::abs(moved.dy) > bound) continue;
      const long k = key(next, moved);
      if (seen.contains(k)) continue;
      seen.emplace(k, Visit{here, eid});
      if (next == 0 && moved == target) {
        found = k;
        break;
      }
      queue.push_back({next, moved});
    }
  }
  if (found < 0) throw LatticeError("no winding string found in the shrunk lattice");

  gf2::BitVector support(lattice.num_qubits());
  for (long k = found; seen.at(k).parent >= 0; k = seen.at(k).parent) {
    const Edge& e = lattice.edge(s.edges[seen.at(k).via].lattice_edge);
    support.flip(e.ends[0]);
    support.flip(e.ends[1]);
  }
  LogicalRepresentative rep;
  rep.color = color;
  rep.direction = direction;
  for (std::size_t q : support.ones()) rep.support.push_back(static_cast<QubitId>(q));
  return rep;
}

std::vector<LogicalRepresentative> logical_representatives(const ColorCodeLattice& lattice) {
  std::vector<LogicalRepresentative> reps;
  int id = 1;
  for (Color c : {Color::Red, Color::Blue}) {
    for (Direction d : {Direction::Horizontal, Direction::Vertical}) {
      reps.push_back(string_operator(lattice, c, d));
      reps.back().class_id = id++;
    }
  }
  return reps;
}

}  // namespace colorloss
