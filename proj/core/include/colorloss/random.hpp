#pragma once

#include <cstdint>
#include <random>

namespace colorloss {

/// Per-sample generator. Stream s of a run seeded with `seed` is keyed by
/// (seed, s) through std::seed_seq, so sample i draws the same numbers no
/// matter which worker runs it or in which order.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x636c7373U};
  return Rng(seq);
}

}  // namespace colorloss
