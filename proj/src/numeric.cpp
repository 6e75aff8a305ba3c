#include "logchern/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace logchern {

Int binomial(const Int& n, long k) {
    if (k < 0 || n < 0 || Int(k) > n) return 0;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - (k - i);
        r /= i;
    }
    return r;
}

Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic base set for 64-bit integers
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = std::max<std::int64_t>(2, lo); n <= hi; ++n)
        if (is_prime(static_cast<std::uint64_t>(n))) out.push_back(n);
    return out;
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    if (is_integer(r))
        os << rat_num(r);
    else
        os << rat_num(r) << "/" << rat_den(r);
    return os.str();
}

std::string rat_to_decimal(const Rat& r, int digits) {
    Int num = rat_num(r), den = rat_den(r);
    bool neg = num < 0;
    if (neg) num = -num;
    Int whole = num / den, rem = num % den;
    std::ostringstream os;
    if (neg) os << "-";
    os << whole;
    if (digits > 0) {
        os << ".";
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            os << rem / den;
            rem %= den;
        }
    }
    return os.str();
}

}  // namespace logchern
