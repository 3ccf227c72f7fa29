#include <random>

#include "colorloss/gf2.hpp"
#include "colorloss/lattice.hpp"
#include "doctest.h"
#include "../support/oracles.hpp"

using namespace colorloss;
using gf2::BitMatrix;
using gf2::BitVector;

namespace {

BitMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (bit(rng)) m.set(i, j);
    }
  }
  return m;
}

BitVector random_vector(std::size_t n, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (bit(rng)) v.set(i);
  }
  return v;
}

}  // namespace

TEST_CASE("bit vectors") {
  BitVector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 3);
  CHECK(v.ones() == std::vector<std::size_t>{0, 64, 129});
  v.flip(64);
  CHECK_FALSE(v.get(64));
  BitVector w = v;
  w ^= v;
  CHECK_FALSE(w.any());
  const std::vector<std::uint32_t> idx{3, 5};
  CHECK(BitVector::from_indices(8, idx).count() == 2);
}

TEST_CASE("rank and solve on hand-made systems") {
  CHECK(gf2::rank(BitMatrix::identity(70)) == 70);
  BitMatrix m(3, 3);
  m.set(0, 0);
  m.set(0, 1);
  m.set(1, 1);
  m.set(1, 2);
  m.set(2, 0);
  m.set(2, 2);  // row 2 = row 0 + row 1
  CHECK(gf2::rank(m) == 2);

  BitVector b(3);
  b.set(0);
  b.set(1);  // reachable: (x0+x1, x1+x2, x0+x2) = (1,1,0) with x = (1,0,1)
  const auto x = gf2::solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m.multiply(*x) == b);

  BitVector bad(3);
  bad.set(0);
  CHECK_FALSE(gf2::solve(m, bad).has_value());
  CHECK_THROWS_AS(gf2::solve(m, BitVector(4)), gf2::DimensionMismatch);
}

TEST_CASE("planted solutions are recovered") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 20 + rng() % 100;
    const std::size_t c = 10 + rng() % 100;
    const BitMatrix a = random_matrix(r, c, rng, 0.3);
    const BitVector planted = random_vector(c, rng);
    const BitVector b = a.multiply(planted);
    const auto x = gf2::solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a.multiply(*x) == b);
    CHECK(gf2::rank(a) == gf2::rank(a.transpose()));
  }
}

TEST_CASE("incremental echelon tracks rank") {
  std::mt19937_64 rng(6);
  const BitMatrix a = random_matrix(60, 90, rng, 0.1);
  gf2::IncrementalEchelon inc(90);
  BitMatrix prefix(0, 90);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    inc.insert(a.row(i));
    BitVector keep(a.rows());
    for (std::size_t k = 0; k <= i; ++k) keep.set(k);
    CHECK(inc.rank() == gf2::rank(a.select_rows(keep)));
  }
}

TEST_CASE("class intactness against exhaustive face products") {
  std::mt19937_64 rng(13);
  for (Geometry g : {Geometry::G666, Geometry::G488}) {
    CAPTURE(to_string(g));
    const auto lat = ColorCodeLattice::build(g, 2);
    const BitMatrix F = face_matrix(lat);
    REQUIRE(F.cols() <= 16);
    const gf2::FaceSystem sys(F);
    const auto reps = logical_representatives(lat);
    std::vector<BitVector> supports;
    for (const auto& r : reps) supports.push_back(r.mask(lat.num_qubits()));
    for (int trial = 0; trial < 150; ++trial) {
      const BitVector removed = random_vector(lat.num_qubits(), rng, 0.1 + 0.5 * (trial % 5) / 4.0);
      bool all = true;
      for (const auto& s : supports) {
        const bool expect = oracle::class_intact(F, s, removed);
        CHECK(sys.class_intact(s, removed) == expect);
        all = all && expect;
        const auto x = sys.cleaning_faces(s, removed);
        CHECK(x.has_value() == expect);
        if (x) {
          BitVector moved = s;
          moved ^= F.multiply(*x);
          for (std::size_t q : removed.ones()) CHECK_FALSE(moved.get(q));
        }
      }
      CHECK(sys.info_intact(supports, removed) == all);
      CHECK(sys.info_intact(supports, removed) == !sys.contains_logical(removed));
    }
  }
}

TEST_CASE("losing information is monotone in the removed set") {
  std::mt19937_64 rng(14);
  const auto lat = ColorCodeLattice::build(Geometry::G4612, 3);
  const gf2::FaceSystem sys(face_matrix(lat));
  std::vector<BitVector> supports;
  for (const auto& r : logical_representatives(lat)) supports.push_back(r.mask(lat.num_qubits()));
  std::vector<std::uint32_t> order(lat.num_qubits());
  std::iota(order.begin(), order.end(), 0U);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    BitVector removed(lat.num_qubits());
    bool lost = false;
    std::size_t first = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      removed.set(order[k]);
      const bool now = !sys.info_intact(supports, removed);
      CHECK((lost && !now) == false);
      if (now && !lost) first = k + 1;
      lost = lost || now;
    }
    CHECK(lost);
    CHECK(gf2::first_information_loss(sys.faces(), supports, order) == first);
  }
}

TEST_CASE("mask length is checked") {
  const auto lat = ColorCodeLattice::build(Geometry::G666, 2);
  const gf2::FaceSystem sys(face_matrix(lat));
  CHECK_THROWS_AS(sys.contains_logical(BitVector(3)), gf2::DimensionMismatch);
  CHECK(sys.face_rank() == sys.faces().cols() - 2);
}
