#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace logchern {

// All invariants are computed in exact arithmetic. Int/Rat are the only
// numeric types that ever leave a module; floating point appears nowhere
// in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Binomial coefficient C(n, k), exact; 0 when k < 0 or k > n.
Int binomial(const Int& n, long k);

Int factorial(long n);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// All primes in [lo, hi], ascending.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

// Decimal rendering of a rational: "a/b", or "a" when integral.
std::string rat_to_string(const Rat& r);

// Fixed-point decimal expansion with `digits` fractional digits (truncated),
// used by the table renderer.
std::string rat_to_decimal(const Rat& r, int digits);

}  // namespace logchern
