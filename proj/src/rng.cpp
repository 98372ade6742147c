#include "rng.hpp"

#include <cmath>

namespace gcmp {

namespace {

constexpr std::uint64_t kPhiloxM = 0xD2B74407B1CE6E93ULL;
constexpr std::uint64_t kPhiloxW = 0x9E3779B97F4A7C15ULL;

inline void mulhilo64(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
    __uint128_t p = static_cast<__uint128_t>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
}

constexpr double kTwoPi = 6.2831853071795864769252867665590058;

} // namespace

std::array<std::uint64_t, 2> philox2x64(std::uint64_t seed, std::uint64_t ctr, std::uint64_t stream) {
    std::uint64_t c0 = ctr;
    std::uint64_t c1 = stream;
    std::uint64_t key = seed;
    for (int round = 0; round < 10; ++round) {
        std::uint64_t hi, lo;
        mulhilo64(kPhiloxM, c0, hi, lo);
        c0 = hi ^ key ^ c1;
        c1 = lo;
        key += kPhiloxW;
    }
    return {c0, c1};
}

double u64_to_unit(std::uint64_t word) {
    // 53-bit mantissa plus half an ulp keeps the value strictly inside (0, 1).
    return (static_cast<double>(word >> 11) + 0.5) * 0x1.0p-53;
}

std::array<double, 2> normal_pair(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    auto block = philox2x64(seed, counter, stream);
    double u1 = u64_to_unit(block[0]);
    double u2 = u64_to_unit(block[1]);
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = kTwoPi * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

double normal_single(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return normal_pair(seed, stream, counter)[0];
}

double uniform_unit(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<double>(philox2x64(seed, counter, stream)[0] >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                            std::uint64_t bound) {
    if (bound == 0) return 0;
    // Rejection-free multiply-shift; bias is < bound / 2^64, negligible for desk-scale bounds.
    auto word = philox2x64(seed, counter, stream)[0];
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(word) * bound) >> 64);
}

} // namespace gcmp
