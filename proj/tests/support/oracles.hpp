#pragma once

// Slow, direct re-implementations used to cross-check the library. They share
// no code with core/ beyond the lattice accessors.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "colorloss/coeffs.hpp"
#include "colorloss/lattice.hpp"
#include "colorloss/percolation.hpp"
#include "colorloss/rational.hpp"

namespace oracle {

using colorloss::CellShift;
using colorloss::Color;
using colorloss::ColorCodeLattice;
using colorloss::QubitId;
using colorloss::Rational;

/// Adjacency copy of a lattice: per qubit and color the neighbor and an edge
/// tag. Tags below `num_original` are the lattice's original edge ids.
struct NaiveGraph {
  struct Slot {
    QubitId to = colorloss::kNone;
    std::uint32_t tag = 0;
  };
  std::vector<std::array<Slot, 3>> slots;
  std::vector<bool> alive;
  std::uint32_t num_original = 0;
  std::uint32_t next_tag = 0;

  explicit NaiveGraph(const ColorCodeLattice& lat) {
    slots.resize(lat.num_qubits());
    alive.assign(lat.num_qubits(), true);
    num_original = static_cast<std::uint32_t>(lat.edges().size());
    next_tag = num_original;
    for (QubitId q = 0; q < lat.num_qubits(); ++q) {
      for (Color c : colorloss::kColors) {
        slots[q][colorloss::index(c)] = {lat.neighbor(q, c), lat.edge_at(q, c)};
      }
    }
  }

  bool adjacent(QubitId a, QubitId b) const {
    for (const auto& s : slots[a]) {
      if (s.to == b) return true;
    }
    return false;
  }

  /// Removes the pair and returns the original edges erased, per color.
  std::array<int, 3> remove(QubitId a, QubitId b) {
    std::array<std::set<std::uint32_t>, 3> gone;
    for (QubitId q : {a, b}) {
      for (std::size_t c = 0; c < 3; ++c) {
        if (slots[q][c].tag < num_original) gone[c].insert(slots[q][c].tag);
      }
    }
    for (std::size_t c = 0; c < 3; ++c) {
      const QubitId na = slots[a][c].to;
      const QubitId nb = slots[b][c].to;
      if (na == b) continue;
      const std::uint32_t tag = next_tag++;
      slots[na][c] = {nb, tag};
      slots[nb][c] = {na, tag};
    }
    alive[a] = alive[b] = false;
    return {static_cast<int>(gone[0].size()), static_cast<int>(gone[1].size()),
            static_cast<int>(gone[2].size())};
  }
};

/// Exact average erased-edge counts for an instance by explicit recursion over
/// orderings and sacrifice colors, with Rational weights.
inline std::array<Rational, 3> average_erased(const ColorCodeLattice& lat,
                                              const std::vector<QubitId>& instance) {
  std::array<Rational, 3> total{};
  std::function<void(NaiveGraph, std::vector<QubitId>, Rational, std::array<int, 3>)> rec =
      [&](NaiveGraph g, std::vector<QubitId> left, Rational w, std::array<int, 3> acc) {
        std::vector<QubitId> pending;
        for (QubitId q : left) {
          if (g.alive[q]) pending.push_back(q);
        }
        if (pending.empty()) {
          for (std::size_t c = 0; c < 3; ++c) total[c] += w * acc[c];
          return;
        }
        // every loss not yet removed is equally likely to be the next one;
        // losses already sacrificed are skipped without a step
        for (std::size_t i = 0; i < pending.size(); ++i) {
          const QubitId q = pending[i];
          std::vector<QubitId> rest = pending;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
          for (std::size_t c = 0; c < 3; ++c) {
            NaiveGraph h = g;
            const QubitId s = h.slots[q][c].to;
            const auto erased = h.remove(q, s);
            std::array<int, 3> next = acc;
            for (std::size_t k = 0; k < 3; ++k) next[k] += erased[k];
            rec(std::move(h), rest, w / Rational(static_cast<long>(pending.size()) * 3), next);
          }
        }
      };
  rec(NaiveGraph(lat), instance, Rational(1), {0, 0, 0});
  return total;
}

/// BFS distances over all alive edges.
inline std::vector<int> distances(const ColorCodeLattice& lat, QubitId from) {
  std::vector<int> d(lat.num_qubits(), -1);
  std::queue<QubitId> q;
  d[from] = 0;
  q.push(from);
  while (!q.empty()) {
    const QubitId a = q.front();
    q.pop();
    for (Color c : colorloss::kColors) {
      const QubitId b = lat.neighbor(a, c);
      if (d[b] < 0) {
        d[b] = d[a] + 1;
        q.push(b);
      }
    }
  }
  return d;
}

/// Winding rank of the surviving edges of a shrunk lattice, by BFS spanning
/// forest with lifted positions. Each non-tree edge contributes the cycle's
/// net displacement.
inline int winding_rank(const colorloss::ShrunkLattice& s, const std::vector<std::uint8_t>& erased) {
  const std::size_t n = s.nodes.size();
  std::vector<std::vector<std::pair<std::uint32_t, CellShift>>> adj(n);
  for (const auto& e : s.edges) {
    if (erased[e.id]) continue;
    adj[e.nodes[0]].push_back({e.nodes[1], e.shift});
    adj[e.nodes[1]].push_back({e.nodes[0], -e.shift});
  }
  std::vector<bool> seen(n, false);
  std::vector<CellShift> pos(n);
  std::vector<CellShift> windings;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<std::uint32_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::uint32_t a = q.front();
      q.pop();
      for (const auto& [b, d] : adj[a]) {
        if (!seen[b]) {
          seen[b] = true;
          pos[b] = pos[a] + d;
          q.push(b);
        } else {
          const CellShift w = pos[a] + d - pos[b];
          if (!w.is_zero()) windings.push_back(w);
        }
      }
    }
  }
  // rank of a set of integer 2-vectors
  int rank = 0;
  CellShift first;
  for (const CellShift& w : windings) {
    if (rank == 0) {
      first = w;
      rank = 1;
    } else if (static_cast<long>(first.dx) * w.dy - static_cast<long>(first.dy) * w.dx != 0) {
      return 2;
    }
  }
  return rank;
}

/// Number of erasures after which the rule first holds, or sequence size + 1
/// if it never does. Recomputes connectivity from scratch after every erasure.
inline std::size_t forward_onset(const colorloss::ShrunkLattice& s,
                                 const std::vector<std::uint32_t>& sequence,
                                 colorloss::OnsetRule rule) {
  std::vector<std::uint8_t> erased(s.edges.size(), 0);
  auto holds = [&] {
    const int r = winding_rank(s, erased);
    return rule == colorloss::OnsetRule::NoWrapping ? r == 0 : r < 2;
  };
  if (holds()) return 0;
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    erased[sequence[k]] = 1;
    if (holds()) return k + 1;
  }
  return sequence.size() + 1;
}

/// Brute force over all face subsets: can `support` be moved off `removed`?
inline bool class_intact(const colorloss::gf2::BitMatrix& faces,
                         const colorloss::gf2::BitVector& support,
                         const colorloss::gf2::BitVector& removed) {
  const std::size_t F = faces.cols();
  const std::size_t N = faces.rows();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << F); ++x) {
    bool clean = true;
    for (std::size_t q = 0; q < N && clean; ++q) {
      if (!removed.get(q)) continue;
      bool bit = support.get(q);
      for (std::size_t f = 0; f < F; ++f) {
        if ((x >> f) & 1U) bit ^= faces.get(q, f);
      }
      clean = !bit;
    }
    if (clean) return true;
  }
  return false;
}

}  // namespace oracle
