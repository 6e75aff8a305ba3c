#pragma once

#include <cstdint>
#include <vector>

#include "logchern/numeric.hpp"

namespace logchern {

// splitmix64: tiny, well-mixed, and identical on every platform. All sampling
// in the library goes through this so that (input, seed) pins the output
// bit-for-bit.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) by rejection; n > 0
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~0ULL) / n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // uniform Int in [0, n) by rejection on the bit length; n > 0
    Int below_big(const Int& n);

    // uniform k-subset of {1, ..., n-1}, sorted (used for composition cuts)
    std::vector<std::int64_t> sorted_cuts(std::int64_t n, long k);
};

// Derive an independent stream for a sub-task; mixing is itself splitmix-like
// so seeds (0, 1, 2, ...) are fine.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    Rng r(seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xd1b54a32d192ed03ULL));
    r.next();
    return r.next();
}

}  // namespace logchern
