#pragma once

#include <cstdint>

namespace tsptw {

// splitmix64 (Steele, Lea, Vigna): tiny, portable and fully specified, so
// generated benchmark files can be reproduced bit-for-bit anywhere from the
// seed alone.  Draw order and the derivations below are part of the format.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) from the top 53 bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Unbiased integer in [0, bound] by rejection below the largest multiple
    // of bound+1 that fits in 64 bits.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t span = bound + 1;
        if (span == 0) return next_u64();  // bound == 2^64 - 1
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t u;
        do {
            u = next_u64();
        } while (u >= limit);
        return u % span;
    }

private:
    std::uint64_t state_;
};

}  // namespace tsptw
