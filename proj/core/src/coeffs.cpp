#include "colorloss/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <unordered_map>

#include "colorloss/protocol.hpp"

namespace colorloss {

namespace {

std::vector<QubitId> subset(std::span<const QubitId> items, unsigned mask) {
  std::vector<QubitId> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (mask & (1U << i)) out.push_back(items[i]);
  }
  return out;
}

void check_instance(std::span<const QubitId> instance) {
  if (instance.size() > 20) throw std::invalid_argument("instance too large for subset sums");
  if (!std::is_sorted(instance.begin(), instance.end())) {
    throw std::invalid_argument("instance must be sorted");
  }
}

std::string describe(const std::vector<QubitId>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s + "}";
}

const Rational& lookup(const SubsetValues& values, const std::vector<QubitId>& key) {
  const auto it = values.find(key);
  if (it == values.end()) throw MissingSubset("no value for subset " + describe(key));
  return it->second;
}

}  // namespace

Rational energy(std::span<const QubitId> instance, const SubsetValues& R) {
  check_instance(instance);
  const std::size_t n = instance.size();
  Rational e = 0;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    const auto key = subset(instance, mask);
    const bool negative = (n - key.size()) % 2 != 0;
    if (negative) {
      e -= lookup(R, key);
    } else {
      e += lookup(R, key);
    }
  }
  return e;
}

Rational reconstruct(std::span<const QubitId> instance, const SubsetValues& E) {
  check_instance(instance);
  Rational r = 0;
  for (unsigned mask = 1; mask < (1U << instance.size()); ++mask) {
    r += lookup(E, subset(instance, mask));
  }
  return r;
}

std::vector<QubitId> ball(const ColorCodeLattice& lattice, QubitId center, int radius, int margin) {
  if (radius < 0 || margin < 0) throw std::invalid_argument("radius and margin must be >= 0");
  if (center >= lattice.num_qubits() || !lattice.alive(center)) {
    throw std::invalid_argument("ball center is not an alive qubit");
  }
  std::unordered_map<QubitId, std::pair<int, CellShift>> seen;  // depth, unwrapped offset
  std::deque<QubitId> queue{center};
  seen[center] = {0, {}};
  const int limit = radius + margin;
  while (!queue.empty()) {
    const QubitId q = queue.front();
    queue.pop_front();
    const auto [depth, at] = seen.at(q);
    if (depth == limit) continue;
    for (Color c : kColors) {
      const Edge& e = lattice.edge(lattice.edge_at(q, c));
      const QubitId next = e.other(q);
      const CellShift moved = at + e.shift_from(q);
      const auto it = seen.find(next);
      if (it == seen.end()) {
        seen[next] = {depth + 1, moved};
        queue.push_back(next);
      } else if (!(it->second.second == moved)) {
        throw LatticeTooSmall("L=" + std::to_string(lattice.size()) +
                              " is too small: a ball of radius " + std::to_string(limit) +
                              " wraps around the torus");
      }
    }
  }
  std::vector<QubitId> out;
  for (const auto& [q, info] : seen) {
    if (info.first <= radius) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QubitId> patch(const ColorCodeLattice& lattice, QubitId center, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  return ball(lattice, center, 3 * (ell - 1));
}

namespace {

// Two losses farther apart than this cannot touch a common edge or each
// other's neighborhoods. Larger instances can interact through the rewiring,
// so only pairs are filtered this way.
constexpr int kInteractionRange = 3;

using Scaled = std::array<std::int64_t, 3>;

class Engine {
 public:
  Engine(const ColorCodeLattice& lattice, const EnumerationOptions& options)
      : scratch_(lattice), options_(options) {
    for (int k = 2; k <= options.ell_max; ++k) scale_ *= k;
    for (int k = 0; k < options.ell_max; ++k) scale_ *= 3;
  }

  std::int64_t scale() const { return scale_; }

  const Scaled& R(const std::vector<QubitId>& instance) {
    auto it = cache_.find(instance);
    if (it != cache_.end()) return it->second;
    const ScaledErasure se = scaled_erasure(scratch_, instance);
    Scaled value{};
    for (std::size_t c = 0; c < 3; ++c) value[c] = se.total[c] * (scale_ / se.scale);
    return cache_.emplace(instance, value).first->second;
  }

  Scaled E(const std::vector<QubitId>& instance) {
    const std::size_t n = instance.size();
    Scaled e{};
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
      const auto key = subset(instance, mask);
      const Scaled& r = R(key);
      const std::int64_t sign = ((n - key.size()) % 2 == 0) ? 1 : -1;
      for (std::size_t c = 0; c < 3; ++c) e[c] += sign * r[c];
    }
    return e;
  }

  bool near(QubitId a, QubitId b) {
    auto it = near_.find(a);
    if (it == near_.end()) {
      std::vector<QubitId> reach = ball(scratch_, a, kInteractionRange, 0);
      it = near_.emplace(a, std::move(reach)).first;
    }
    return std::binary_search(it->second.begin(), it->second.end(), b);
  }

 private:
  ColorCodeLattice scratch_;
  EnumerationOptions options_;
  std::int64_t scale_ = 1;
  std::map<std::vector<QubitId>, Scaled> cache_;
  std::unordered_map<QubitId, std::vector<QubitId>> near_;
};

template <typename Fn>
void for_each_combination(const std::vector<QubitId>& pool, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > pool.size()) return;
  std::vector<QubitId> pick(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) pick[i] = pool[idx[i]];
    fn(pick);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

CoefficientResult compute_coefficients(const ColorCodeLattice& lattice,
                                       const EnumerationOptions& options) {
  if (options.ell_max < 1 || options.ell_max > 6) {
    throw std::invalid_argument("ell_max must be in 1..6");
  }
  if (options.extra_radius < 0) throw std::invalid_argument("extra_radius must be >= 0");
  const QubitId center = options.center;
  // Fail early, before any enumeration, if the largest patch does not fit.
  ball(lattice, center, 3 * (options.ell_max - 1) + options.extra_radius);

  Engine engine(lattice, options);
  const std::int64_t D = engine.scale();
  CoefficientResult result;
  for (Color c : kColors) {
    CoefficientTable& t = result.tables[index(c)];
    t.geometry = lattice.geometry();
    t.color = c;
    t.L = lattice.size();
    t.center = center;
  }

  auto add_row = [&](int ell, const std::array<std::int64_t, 3>& count, const Scaled& sum_R,
                     const Scaled& sum_E) {
    for (std::size_t c = 0; c < 3; ++c) {
      CoefficientRow row;
      row.ell = ell;
      row.count = count[c];
      if (count[c] > 0) {
        row.mean_R = Rational(sum_R[c], count[c] * D);
        row.mean_E = Rational(sum_E[c], count[c] * D);
      }
      row.alpha = Rational(2 * sum_E[c], static_cast<std::int64_t>(ell) * D);
      result.tables[c].rows.push_back(row);
    }
  };

  {
    const Scaled r1 = engine.R({center});
    add_row(1, {1, 1, 1}, r1, r1);
  }

  for (int ell = 2; ell <= options.ell_max; ++ell) {
    std::vector<QubitId> pool = ball(lattice, center, 3 * (ell - 1) + options.extra_radius);
    pool.erase(std::find(pool.begin(), pool.end(), center));
    std::array<std::int64_t, 3> count{};
    Scaled sum_R{};
    Scaled sum_E{};
    for_each_combination(pool, static_cast<std::size_t>(ell - 1),
                         [&](const std::vector<QubitId>& others) {
                           std::vector<QubitId> inst = others;
                           inst.push_back(center);
                           std::sort(inst.begin(), inst.end());
                           if (options.prefilter && inst.size() == 2 && !engine.near(inst[0], inst[1])) return;
                           const Scaled e = engine.E(inst);
                           const Scaled& r = engine.R(inst);
                           bool any = false;
                           for (std::size_t c = 0; c < 3; ++c) {
                             if (e[c] == 0) continue;
                             any = true;
                             ++count[c];
                             sum_R[c] += r[c];
                             sum_E[c] += e[c];
                           }
                           if (any && options.keep_records) {
                             InstanceRecord rec;
                             rec.qubits = inst;
                             for (std::size_t c = 0; c < 3; ++c) {
                               rec.R[c] = Rational(r[c], D);
                               rec.E[c] = Rational(e[c], D);
                             }
                             result.records.push_back(std::move(rec));
                           }
                         });
    add_row(ell, count, sum_R, sum_E);
  }
  return result;
}

CoefficientTable coefficient_table(const ColorCodeLattice& lattice, Color color, int ell_max) {
  EnumerationOptions options;
  options.ell_max = ell_max;
  return compute_coefficients(lattice, options).tables[index(color)];
}

std::vector<InstanceRecord> enumerate_fully_interacting(const ColorCodeLattice& lattice,
                                                        QubitId center, int ell_max, Color color) {
  EnumerationOptions options;
  options.center = center;
  options.ell_max = ell_max;
  options.keep_records = true;
  auto records = compute_coefficients(lattice, options).records;
  std::erase_if(records, [&](const InstanceRecord& r) { return r.E[index(color)] == 0; });
  return records;
}

int minimal_size(Geometry geometry, int ell_max, int extra_radius) {
  for (int L = 2; L <= 256; ++L) {
    if (geometry == Geometry::G488 && L % 2 != 0) continue;
    try {
      const auto lattice = ColorCodeLattice::build(geometry, L);
      ball(lattice, 0, 3 * (ell_max - 1) + extra_radius);
      return L;
    } catch (const LatticeTooSmall&) {
    } catch (const UnsupportedSize&) {
    }
  }
  throw std::invalid_argument("no lattice size up to 256 fits the requested patch");
}

double r_of_p(const CoefficientTable& table, double p) {
  double r = 0.0;
  double power = 1.0;
  for (const CoefficientRow& row : table.rows) {
    power *= p;
    r += to_double(row.alpha) * power;
  }
  return r;
}

double analytic_threshold(const CoefficientTable& table, double r_c, double lo, double hi,
                          double tol) {
  if (!(lo < hi)) throw std::invalid_argument("empty bracketing interval");
  if (r_of_p(table, hi) < r_c) {
    throw NoBracket("r(" + std::to_string(hi) + ") = " + std::to_string(r_of_p(table, hi)) +
                    " stays below r_c = " + std::to_string(r_c));
  }
  if (r_of_p(table, lo) > r_c) throw NoBracket("r(lo) already exceeds r_c");
  constexpr int kGrid = 1000;
  double prev = r_of_p(table, lo);
  for (int k = 1; k <= kGrid; ++k) {
    const double cur = r_of_p(table, lo + (hi - lo) * k / kGrid);
    if (cur <= prev) throw NoBracket("r(p) is not increasing on the bracketing interval");
    prev = cur;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (r_of_p(table, mid) < r_c) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace colorloss
