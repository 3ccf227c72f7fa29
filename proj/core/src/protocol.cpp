#include "colorloss/protocol.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"

namespace colorloss {

LossInstance::LossInstance(std::vector<QubitId> ids) : qubits(std::move(ids)) {
  std::sort(qubits.begin(), qubits.end());
  qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
}

StepOutcome apply_step(ColorCodeLattice& state, QubitId lost, QubitId sacrificed) {
  if (lost >= state.num_qubits() || !state.alive(lost)) {
    throw NotAlive("lost qubit " + std::to_string(lost) + " is not alive");
  }
  if (sacrificed >= state.num_qubits() || !state.alive(sacrificed)) {
    throw NotAlive("sacrificed qubit " + std::to_string(sacrificed) + " is not alive");
  }
  bool adjacent = false;
  for (Color c : kColors) adjacent = adjacent || state.neighbor(lost, c) == sacrificed;
  if (!adjacent) {
    throw NotAdjacent("qubits " + std::to_string(lost) + " and " + std::to_string(sacrificed) +
                      " are not adjacent");
  }

  StepOutcome out;
  out.removal = state.remove_pair(lost, sacrificed);
  for (EdgeId e : out.removal.erased_edges()) {
    const Edge& edge = state.edge(e);
    if (!edge.original) continue;
    out.erased_original[out.num_erased_original++] = e;
    ++out.erased_per_color[index(edge.color)];
  }
  return out;
}

StepOutcome random_correction(ColorCodeLattice& state, QubitId lost, Rng& rng) {
  if (lost >= state.num_qubits() || !state.alive(lost)) {
    throw NotAlive("lost qubit " + std::to_string(lost) + " is not alive");
  }
  std::uniform_int_distribution<int> pick(0, 2);
  const Color c = color_from_index(static_cast<std::size_t>(pick(rng)));
  return apply_step(state, lost, state.neighbor(lost, c));
}

namespace {

void require_alive(const ColorCodeLattice& lattice, std::span<const QubitId> qubits) {
  for (QubitId q : qubits) {
    if (q >= lattice.num_qubits() || !lattice.alive(q)) {
      throw NotAlive("instance qubit " + std::to_string(q) + " is not alive");
    }
  }
}

std::int64_t factorial(std::size_t n) {
  std::int64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<std::int64_t>(k);
  return f;
}

std::int64_t pow3(std::size_t n) {
  std::int64_t p = 1;
  for (std::size_t k = 0; k < n; ++k) p *= 3;
  return p;
}

// Depth-first walk over orderings and sacrifice choices with apply/undo.
struct ScaledWalk {
  ColorCodeLattice& lattice;
  std::span<const QubitId> instance;
  std::vector<std::int64_t> pow3_table;
  ScaledErasure result;

  void run(unsigned used, std::size_t steps, std::array<std::int64_t, 3> erased) {
    if (used == (1U << instance.size()) - 1U) {
      const std::int64_t w = pow3_table[instance.size() - steps];
      for (std::size_t c = 0; c < 3; ++c) result.total[c] += w * erased[c];
      result.weight_sum += w;
      ++result.paths;
      return;
    }
    for (std::size_t i = 0; i < instance.size(); ++i) {
      if (used & (1U << i)) continue;
      const QubitId q = instance[i];
      if (!lattice.alive(q)) {
        run(used | (1U << i), steps, erased);
        continue;
      }
      for (Color c : kColors) {
        const StepOutcome out = apply_step(lattice, q, lattice.neighbor(q, c));
        auto next = erased;
        for (std::size_t k = 0; k < 3; ++k) next[k] += out.erased_per_color[k];
        run(used | (1U << i), steps + 1, next);
        lattice.restore(out.removal);
      }
    }
  }
};

}  // namespace

ScaledErasure scaled_erasure(ColorCodeLattice& lattice, std::span<const QubitId> instance) {
  if (instance.size() > 12) throw std::invalid_argument("loss instance too large to enumerate");
  require_alive(lattice, instance);
  ScaledWalk walk{lattice, instance, {}, {}};
  for (std::size_t k = 0; k <= instance.size(); ++k) walk.pow3_table.push_back(pow3(k));
  walk.result.scale = factorial(instance.size()) * pow3(instance.size());
  if (!instance.empty()) {
    walk.run(0, 0, {});
  } else {
    walk.result.paths = 1;
    walk.result.weight_sum = 1;
  }
  return walk.result;
}

Rational average_erased(const ColorCodeLattice& lattice, const LossInstance& instance, Color color) {
  ColorCodeLattice scratch = lattice;
  return scaled_erasure(scratch, instance.qubits).average(color);
}

void enumerate_corrections(ColorCodeLattice& lattice, const LossInstance& instance,
                           const CorrectionVisitor& visit) {
  const auto& qubits = instance.qubits;
  if (qubits.size() > 12) throw std::invalid_argument("loss instance too large to enumerate");
  require_alive(lattice, qubits);
  const Rational base(1, factorial(qubits.size()));
  Correction correction;
  std::array<std::vector<EdgeId>, 3> erased;
  std::vector<QubitId> removed;

  std::function<void(unsigned)> walk = [&](unsigned used) {
    if (used == (1U << qubits.size()) - 1U) {
      correction.weight = base / Rational(pow3(correction.steps.size()));
      CorrectionOutcome outcome;
      for (std::size_t c = 0; c < 3; ++c) {
        outcome.erased[c] = erased[c];
        std::sort(outcome.erased[c].begin(), outcome.erased[c].end());
      }
      outcome.removed = removed;
      std::sort(outcome.removed.begin(), outcome.removed.end());
      visit(correction, outcome, lattice);
      return;
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      if (used & (1U << i)) continue;
      const QubitId q = qubits[i];
      if (!lattice.alive(q)) {
        walk(used | (1U << i));
        continue;
      }
      for (Color c : kColors) {
        const QubitId s = lattice.neighbor(q, c);
        const StepOutcome out = apply_step(lattice, q, s);
        correction.steps.push_back({q, s});
        removed.push_back(q);
        removed.push_back(s);
        for (EdgeId e : out.erased_original_edges()) {
          erased[index(lattice.edge(e).color)].push_back(e);
        }
        walk(used | (1U << i));
        for (EdgeId e : out.erased_original_edges()) erased[index(lattice.edge(e).color)].pop_back();
        removed.resize(removed.size() - 2);
        correction.steps.pop_back();
        lattice.restore(out.removal);
      }
    }
  };
  walk(0);
}

StepOutcome TraceWriter::step(ColorCodeLattice& state, QubitId lost, QubitId sacrificed) {
  nlohmann::json record;
  record["step"] = count_;
  record["lost"] = lost;
  record["sacrificed"] = sacrificed;

  nlohmann::json shrunk_faces = nlohmann::json::array();
  nlohmann::json merged_faces = nlohmann::json::array();
  if (state.alive(lost) && state.alive(sacrificed)) {
    const FaceIndex idx = state.index_faces();
    for (Color c : kColors) {
      const FaceId a = idx.face_of[lost][index(c)];
      const FaceId b = idx.face_of[sacrificed][index(c)];
      if (a == b) {
        shrunk_faces.push_back({{"color", to_string(c)}, {"face", a}});
      } else {
        merged_faces.push_back({{"color", to_string(c)}, {"faces", {a, b}}});
      }
    }
  }

  const StepOutcome out = apply_step(state, lost, sacrificed);
  nlohmann::json erased = nlohmann::json::object();
  for (Color c : kColors) erased[std::string(to_string(c))] = nlohmann::json::array();
  for (EdgeId e : out.erased_original_edges()) {
    erased[std::string(to_string(state.edge(e).color))].push_back(e);
  }
  nlohmann::json added = nlohmann::json::array();
  for (EdgeId e : out.removal.added_edges()) {
    const Edge& edge = state.edge(e);
    added.push_back({{"id", e}, {"ends", {edge.ends[0], edge.ends[1]}}, {"color", to_string(edge.color)}});
  }
  record["erased"] = std::move(erased);
  record["added"] = std::move(added);
  record["shrunk_faces"] = std::move(shrunk_faces);
  record["merged_faces"] = std::move(merged_faces);
  out_ << record.dump() << '\n';
  ++count_;
  return out;
}

}  // namespace colorloss
