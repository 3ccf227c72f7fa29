#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "colorloss/lattice.hpp"
#include "doctest.h"

using namespace colorloss;

namespace {

std::multiset<std::size_t> face_sizes_of_qubit(const FaceIndex& idx, QubitId q) {
  std::multiset<std::size_t> s;
  for (Color c : kColors) s.insert(idx.faces[idx.face_of[q][index(c)]].qubits.size());
  return s;
}

std::vector<std::array<EdgeId, 3>> incidence_of(const ColorCodeLattice& lat) {
  std::vector<std::array<EdgeId, 3>> inc(lat.num_qubits());
  for (QubitId q = 0; q < lat.num_qubits(); ++q) {
    for (Color c : kColors) inc[q][index(c)] = lat.edge_at(q, c);
  }
  return inc;
}

}  // namespace

TEST_CASE("geometry names round trip") {
  for (Geometry g : kGeometries) CHECK(parse_geometry(to_string(g)) == g);
  CHECK(parse_geometry("4612") == Geometry::G4612);
  CHECK_THROWS_AS(parse_geometry("4.4.4"), std::invalid_argument);
  CHECK(parse_color("R") == Color::Red);
  CHECK(parse_color("green") == Color::Green);
  CHECK_THROWS_AS(parse_color("purple"), std::invalid_argument);
}

TEST_CASE("unsupported sizes") {
  CHECK_THROWS_AS(ColorCodeLattice::build(Geometry::G666, 1), UnsupportedSize);
  CHECK_THROWS_AS(ColorCodeLattice::build(Geometry::G488, 3), UnsupportedSize);
  CHECK_NOTHROW(ColorCodeLattice::build(Geometry::G488, 4));
  CHECK_NOTHROW(ColorCodeLattice::build(Geometry::G4612, 3));
}

TEST_CASE("face census per geometry") {
  struct Expect {
    Geometry g;
    int L;
    std::map<std::size_t, std::size_t> per_cell;  // face size -> count per unit cell
    std::multiset<std::size_t> around_qubit;
  };
  const std::vector<Expect> cases{
      {Geometry::G488, 4, {{4, 1}, {8, 1}}, {4, 8, 8}},
      {Geometry::G666, 3, {{6, 3}}, {6, 6, 6}},
      {Geometry::G4612, 3, {{4, 3}, {6, 2}, {12, 1}}, {4, 6, 12}},
  };
  for (const auto& ex : cases) {
    CAPTURE(to_string(ex.g));
    const auto lat = ColorCodeLattice::build(ex.g, ex.L);
    const std::size_t cells = static_cast<std::size_t>(ex.L) * ex.L;
    CHECK(lat.num_qubits() == cells * static_cast<std::size_t>(qubits_per_cell(ex.g)));
    CHECK(lat.num_alive_edges() * 2 == lat.num_qubits() * 3);

    const FaceIndex idx = lat.index_faces();
    std::map<std::size_t, std::size_t> hist;
    for (const Face& f : idx.faces) ++hist[f.qubits.size()];
    for (const auto& [size, n] : ex.per_cell) CHECK(hist[size] == n * cells);
    CHECK(hist.size() == ex.per_cell.size());

    for (QubitId q = 0; q < lat.num_qubits(); ++q) {
      CHECK(face_sizes_of_qubit(idx, q) == ex.around_qubit);
    }
    // no face holds the same qubit twice, and every face of color c avoids c-edges
    for (const Face& f : idx.faces) {
      std::set<QubitId> distinct(f.qubits.begin(), f.qubits.end());
      CHECK(distinct.size() == f.qubits.size());
      for (std::size_t i = 0; i < f.qubits.size(); ++i) {
        const QubitId a = f.qubits[i];
        const QubitId b = f.qubits[(i + 1) % f.qubits.size()];
        CHECK(lat.neighbor(a, f.color) != b);
      }
    }
  }
}

TEST_CASE("edges have unit length in the plane") {
  for (Geometry g : kGeometries) {
    CAPTURE(to_string(g));
    const auto lat = ColorCodeLattice::build(g, 4);
    const auto v = cell_vectors(g);
    double lo = 1e9;
    double hi = 0.0;
    for (const Edge& e : lat.edges()) {
      const auto pa = lat.position(e.ends[0]);
      const auto pb = lat.position(e.ends[1]);
      // positions sit in the qubit's own cell; undo the wrap of the far end
      const CellShift w = lat.cell_of(e.ends[0]) + e.shift - lat.cell_of(e.ends[1]);
      const double dx = pb[0] + w.dx * v[0][0] + w.dy * v[1][0] - pa[0];
      const double dy = pb[1] + w.dx * v[0][1] + w.dy * v[1][1] - pa[1];
      const double len = std::hypot(dx, dy);
      lo = std::min(lo, len);
      hi = std::max(hi, len);
    }
    CHECK(hi - lo < 1e-9);
    CHECK(lo > 0.1);
  }
}

TEST_CASE("qubit ids follow the cell layout") {
  const auto lat = ColorCodeLattice::build(Geometry::G4612, 3);
  for (QubitId q = 0; q < lat.num_qubits(); ++q) {
    const CellShift cell = lat.cell_of(q);
    CHECK(q == static_cast<QubitId>((cell.dy * 3 + cell.dx) * 12 + lat.slot_in_cell(q)));
  }
}

TEST_CASE("validation passes on built lattices and flags injected faults") {
  for (Geometry g : kGeometries) {
    for (int L : {2, 4, 6}) {
      CAPTURE(to_string(g));
      CAPTURE(L);
      const auto lat = ColorCodeLattice::build(g, L);
      const auto report = validate(lat);
      for (const auto& v : report.violations) MESSAGE(v.kind << ": " << v.message);
      CHECK(report.ok());
    }
  }
  const auto lat = ColorCodeLattice::build(Geometry::G666, 3);
  std::vector<std::uint8_t> alive(lat.num_qubits(), 1);

  SUBCASE("recolored edge") {
    auto edges = lat.edges();
    edges[0].color = color_from_index((index(edges[0].color) + 1) % 3);
    const auto bad = ColorCodeLattice::from_parts(Geometry::G666, 3, alive, edges, incidence_of(lat));
    CHECK(validate(bad).has("edge-coloring"));
  }
  SUBCASE("dead qubit still wired") {
    auto dead = alive;
    dead[5] = 0;
    const auto bad = ColorCodeLattice::from_parts(Geometry::G666, 3, dead, lat.edges(), incidence_of(lat));
    CHECK_FALSE(validate(bad).ok());
  }
  SUBCASE("faithful copy is fine") {
    const auto copy = ColorCodeLattice::from_parts(Geometry::G666, 3, alive, lat.edges(), incidence_of(lat));
    CHECK(validate(copy).ok());
  }
}

TEST_CASE("remove_pair keeps the lattice valid and restore undoes it") {
  std::mt19937_64 rng(3);
  for (Geometry g : kGeometries) {
    CAPTURE(to_string(g));
    const auto fresh = ColorCodeLattice::build(g, 4);
    auto lat = fresh;
    std::vector<PairRemoval> history;
    while (lat.num_alive_qubits() > 2) {
      std::vector<QubitId> alive;
      for (QubitId q = 0; q < lat.num_qubits(); ++q) {
        if (lat.alive(q)) alive.push_back(q);
      }
      const QubitId a = alive[rng() % alive.size()];
      const QubitId b = lat.neighbor(a, color_from_index(rng() % 3));
      const std::size_t faces_before = lat.faces().size();
      history.push_back(lat.remove_pair(a, b));
      // -1 while every face is a disc; later rewiring can split or fuse
      // bicolored cycles, but always changes their number by an odd amount
      const long delta = static_cast<long>(lat.faces().size()) - static_cast<long>(faces_before);
      if (history.size() == 1) CHECK(delta == -1);
      CHECK(std::abs(delta) % 2 == 1);
      const auto report = validate(lat);
      for (const auto& v : report.violations) MESSAGE(v.kind << ": " << v.message);
      REQUIRE(report.ok());
    }
    for (auto it = history.rbegin(); it != history.rend(); ++it) lat.restore(*it);
    CHECK(lattice_to_json(lat) == lattice_to_json(fresh));
    CHECK_FALSE(lat.has_new_edges());
  }
}

TEST_CASE("shrunk lattices") {
  struct Expect {
    Geometry g;
    Color c;
    bool double_bonds;
  };
  const std::vector<Expect> cases{
      {Geometry::G488, Color::Red, false},   {Geometry::G488, Color::Blue, true},
      {Geometry::G488, Color::Green, true},  {Geometry::G666, Color::Red, false},
      {Geometry::G666, Color::Blue, false},  {Geometry::G666, Color::Green, false},
      {Geometry::G4612, Color::Red, false},  {Geometry::G4612, Color::Blue, true},
      {Geometry::G4612, Color::Green, true},
  };
  for (const auto& ex : cases) {
    CAPTURE(to_string(ex.g));
    CAPTURE(to_string(ex.c));
    const auto lat = ColorCodeLattice::build(ex.g, 4);
    const ShrunkLattice s = shrunk(lat, ex.c);
    CHECK(s.edges.size() * 2 == lat.num_qubits());
    CHECK((s.num_parallel_pairs() > 0) == ex.double_bonds);
    if (ex.double_bonds) CHECK(s.num_parallel_pairs() * 2 == s.edges.size());

    // each c-edge of the lattice maps to exactly one shrunk edge and back
    std::size_t mapped = 0;
    for (const Edge& e : lat.edges()) {
      if (e.color != ex.c) {
        CHECK(s.edge_of[e.id] == kNone);
        continue;
      }
      ++mapped;
      REQUIRE(s.edge_of[e.id] != kNone);
      CHECK(s.edges[s.edge_of[e.id]].lattice_edge == e.id);
    }
    CHECK(mapped == s.edges.size());

    // degree of a shrunk node is the size of its face
    const auto faces = lat.faces();
    std::vector<std::size_t> degree(s.nodes.size(), 0);
    for (const auto& e : s.edges) {
      ++degree[e.nodes[0]];
      ++degree[e.nodes[1]];
    }
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
      CHECK(faces[s.nodes[i]].color == ex.c);
      CHECK(degree[i] == faces[s.nodes[i]].qubits.size());
    }
  }
}

TEST_CASE("face matrix") {
  for (Geometry g : kGeometries) {
    CAPTURE(to_string(g));
    const auto lat = ColorCodeLattice::build(g, 4);
    const auto faces = lat.faces();
    const auto F = face_matrix(lat);
    REQUIRE(F.rows() == lat.num_qubits());
    REQUIRE(F.cols() == faces.size());
    for (std::size_t q = 0; q < F.rows(); ++q) CHECK(F.row_weight(q) == 3);
    for (std::size_t f = 0; f < F.cols(); ++f) CHECK(F.column_weight(f) == faces[f].qubits.size());
    CHECK(gf2::rank(F) == faces.size() - 2);
  }
}

TEST_CASE("logical representatives") {
  for (Geometry g : kGeometries) {
    for (int L : {4, 6}) {
      CAPTURE(to_string(g));
      CAPTURE(L);
      const auto lat = ColorCodeLattice::build(g, L);
      const std::size_t N = lat.num_qubits();
      const auto F = face_matrix(lat);
      const auto Ft = F.transpose();
      const auto reps = logical_representatives(lat);
      REQUIRE(reps.size() == 4);
      std::vector<gf2::BitVector> masks;
      for (int i = 0; i < 4; ++i) {
        CHECK(reps[i].class_id == i + 1);
        CHECK(std::is_sorted(reps[i].support.begin(), reps[i].support.end()));
        masks.push_back(reps[i].mask(N));
        // commutes with every face: even overlap
        CHECK_FALSE(Ft.multiply(masks.back()).any());
      }
      CHECK(reps[0].color == Color::Red);
      CHECK(reps[3].color == Color::Blue);
      CHECK(reps[1].direction == Direction::Vertical);
      CHECK(gf2::rank(F.append_columns(masks)) == gf2::rank(F) + 4);

      // the green string is the product of red and blue up to faces
      for (Direction d : {Direction::Horizontal, Direction::Vertical}) {
        auto sum = string_operator(lat, Color::Green, d).mask(N);
        sum ^= string_operator(lat, Color::Red, d).mask(N);
        sum ^= string_operator(lat, Color::Blue, d).mask(N);
        CHECK(gf2::solve(F, sum).has_value());
      }
    }
  }
}

TEST_CASE("json round trip") {
  auto lat = ColorCodeLattice::build(Geometry::G4612, 2);
  lat.remove_pair(0, lat.neighbor(0, Color::Blue));
  const std::string text = lattice_to_json(lat, 2);
  const auto back = lattice_from_json(text);
  CHECK(lattice_to_json(back, 2) == text);
  CHECK(validate(back).ok());
  CHECK(back.num_alive_qubits() == lat.num_alive_qubits());
  CHECK(text.find("\"schema_version\"") != std::string::npos);
  CHECK_THROWS_AS(lattice_from_json("{\"schema\": 3}"), std::invalid_argument);
  CHECK_THROWS_AS(lattice_from_json("not json"), std::invalid_argument);
}
