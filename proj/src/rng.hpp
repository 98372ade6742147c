#pragma once

#include <array>
#include <cstdint>

namespace gcmp {

// Counter-based random numbers (Philox2x64-10). A draw is a pure function of
// (seed, stream, counter), so any chunk of work can be recomputed on any
// thread and the result never depends on scheduling.

/// One Philox2x64-10 block: two 64-bit words for counter (ctr, stream) under key seed.
std::array<std::uint64_t, 2> philox2x64(std::uint64_t seed, std::uint64_t ctr, std::uint64_t stream);

/// Uniform in (0, 1), never exactly 0 or 1.
double u64_to_unit(std::uint64_t word);

/// Two independent standard normals from one block (Box-Muller).
std::array<double, 2> normal_pair(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// One standard normal (the cosine branch of the pair).
double normal_single(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Uniform in [0, 1) as a single word.
double uniform_unit(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Uniform integer in [0, bound) without modulo bias for bound << 2^64.
std::uint64_t uniform_below(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                            std::uint64_t bound);

} // namespace gcmp
