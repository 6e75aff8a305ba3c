#pragma once

#include <cstdint>

#include "logchern/arrangement.hpp"

namespace logchern {

// Seeded generator of arbitrary valid arrangements: scatters every pair's
// contact budget across fibers as nodes, ordinary multi-points, tangencies
// and nested (witnessed) tangencies. Output always passes validate(); no
// other property is promised. Used by the oracle-equivalence tests.
struct RandomSpecParams {
    int d_min = 3, d_max = 8;
    std::int64_t e_min = 1, e_max = 4;
    int g_min = 0, g_max = 1;
    int max_delta = 10;        // resamples until delta fits
    bool allow_tangencies = true;
};

ArrangementSpec gen_random_spec(const RandomSpecParams& params, std::uint64_t seed);

// Seeded generator of generic-position arrangements: e layers of round-robin
// simple crossings on disjoint fibers (randomly relabeled per layer), plus
// random stacking of a pair's crossings into higher-order tangencies while a
// combinatorial margin certificate keeps tau strictly below
// (d-1)(delta + 2(g-1) + e). This family models arrangements of sections in
// general position, where the strict log Miyaoka-Yau bound provably holds;
// the inequality property tests draw from it. Requires (d, e) != (4, 1) when
// g = 0 (that margin is zero: the four-line pairing configuration).
ArrangementSpec gen_generic_spec(int d, std::int64_t e, int g, std::uint64_t seed);

}  // namespace logchern
