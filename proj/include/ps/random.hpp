#pragma once

#include <cstdint>
#include <random>

namespace ps {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
/// Used instead of std::uniform_real_distribution, whose output is not
/// pinned down by the standard and differs across library implementations.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Deterministic per-agent stream: the same (master_seed, agent_index) pair
/// always yields the same engine state, no matter how agents are scheduled
/// across threads.
inline Rng make_agent_rng(std::uint64_t master_seed, std::uint64_t agent_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(agent_index),
                    static_cast<std::uint32_t>(agent_index >> 32)};
  return Rng(seq);
}

}  // namespace ps
