#include "logchern/rng.hpp"

#include <stdexcept>

namespace logchern {

Int Rng::below_big(const Int& n) {
    if (n <= 0) throw std::invalid_argument("Rng::below_big: n <= 0");
    if (n <= Int((~0ULL))) return Int(below(static_cast<std::uint64_t>(n)));
    const std::size_t bits = boost::multiprecision::msb(n) + 1;
    const std::size_t words = (bits + 63) / 64;
    while (true) {
        Int v = 0;
        for (std::size_t i = 0; i < words; ++i) {
            v <<= 64;
            v |= Int(next());
        }
        v >>= (words * 64 - bits);
        if (v < n) return v;
    }
}

std::vector<std::int64_t> Rng::sorted_cuts(std::int64_t n, long k) {
    // Floyd's subset sampling: uniform k-subset of {1..n-1}
    if (k < 0 || k > n - 1) throw std::invalid_argument("Rng::sorted_cuts: bad k");
    std::vector<std::int64_t> chosen;
    chosen.reserve(k);
    auto contains = [&](std::int64_t v) {
        for (auto c : chosen)
            if (c == v) return true;
        return false;
    };
    for (std::int64_t j = n - k; j <= n - 1; ++j) {
        std::int64_t t = 1 + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(j)));
        chosen.push_back(contains(t) ? j : t);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace logchern
