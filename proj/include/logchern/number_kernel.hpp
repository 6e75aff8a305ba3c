#pragma once

#include <cstdint>
#include <vector>

#include "logchern/numeric.hpp"

namespace logchern {

// Dedekind sum s(q,p) for 0 < q < p, gcd(q,p) = 1. Reciprocity recursion,
// O(log p) exact rational steps.
Rat dedekind_sum(std::int64_t q, std::int64_t p);

// Same value by the defining sum over sawtooth products, O(p). Kept as the
// small-input cross-check for the recursion.
Rat dedekind_sum_direct(std::int64_t q, std::int64_t p);

// Negative-regular (Hirzebruch-Jung) continued fraction of p/q:
//   p/q = b1 - 1/(b2 - 1/(...)),  all bi >= 2.
struct HJExpansion {
    std::vector<std::int64_t> coefficients;
    long length() const { return static_cast<long>(coefficients.size()); }
    // Re-evaluates the expansion back to a rational.
    Rat evaluate() const;
};

HJExpansion hj_expansion(std::int64_t q, std::int64_t p);

std::int64_t hj_length(std::int64_t q, std::int64_t p);

// c(q,p) := 12 s(q,p) + l(q,p)
Rat c_value(std::int64_t q, std::int64_t p);

// Multiplicative inverse of v mod p, in (0, p).
std::int64_t mod_inverse(std::int64_t v, std::int64_t p);

// A residue is bad when its continued fraction length or Dedekind sum leaves
// the sqrt(p) window used by the root-cover error bounds:
//   l(q,p) > 3 sqrt(p) + 2   or   12 |s(q,p)| > 3 sqrt(p) + 5.
// Comparisons are exact (squared), no floating point.
bool is_bad_residue(std::int64_t q, std::int64_t p);

struct BadSet {
    std::int64_t p;
    std::vector<std::int64_t> members;  // ascending residues in {1..p-1}
    std::size_t size() const { return members.size(); }
};

BadSet bad_set(std::int64_t p);

struct BadSetCensusRow {
    std::int64_t p;
    std::int64_t size;
    std::int64_t max_l;   // max over residues of l(q,p)
    Rat max_12s;          // max over residues of 12|s(q,p)|
};

// One row per prime; parallelized over primes, output in input order.
std::vector<BadSetCensusRow> bad_set_census(const std::vector<std::int64_t>& primes, int workers);

}  // namespace logchern
