#include "logchern/number_kernel.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace logchern {

namespace {

void check_range(std::int64_t q, std::int64_t p, const char* who) {
    if (p < 2 || q <= 0 || q >= p)
        throw std::invalid_argument(std::string(who) + ": need 0 < q < p, got q=" +
                                    std::to_string(q) + " p=" + std::to_string(p));
}

}  // namespace

Rat dedekind_sum(std::int64_t q, std::int64_t p) {
    check_range(q, p, "dedekind_sum");
    if (std::gcd(q, p) != 1)
        throw std::invalid_argument("dedekind_sum: gcd(q,p) != 1");
    // s(q,p) = -1/4 + (p^2 + q^2 + 1)/(12 p q) - s(p mod q, q),  s(1,p) closed form
    Rat s = 0;
    int sign = 1;
    while (q > 1) {
        Int pp = p, qq = q;
        Rat term = Rat(-1, 4) + Rat(pp * pp + qq * qq + 1, 12 * pp * qq);
        s += sign * term;
        std::int64_t r = p % q;
        p = q;
        q = r;
        sign = -sign;
    }
    Int pp = p;
    s += sign * Rat((pp - 1) * (pp - 2), 12 * pp);
    return s;
}

Rat dedekind_sum_direct(std::int64_t q, std::int64_t p) {
    check_range(q, p, "dedekind_sum_direct");
    if (std::gcd(q, p) != 1)
        throw std::invalid_argument("dedekind_sum_direct: gcd(q,p) != 1");
    // ((x)) = x - floor(x) - 1/2 for non-integer x, else 0
    auto saw = [](std::int64_t a, std::int64_t p_) -> Rat {
        std::int64_t r = ((a % p_) + p_) % p_;
        if (r == 0) return 0;
        return Rat(2 * r - p_, 2 * p_);
    };
    Rat s = 0;
    for (std::int64_t k = 1; k < p; ++k) s += saw(k, p) * saw(k * q, p);
    return s;
}

Rat HJExpansion::evaluate() const {
    if (coefficients.empty()) throw std::logic_error("empty HJ expansion");
    Rat v = coefficients.back();
    for (auto it = coefficients.rbegin() + 1; it != coefficients.rend(); ++it)
        v = *it - 1 / v;
    return v;
}

HJExpansion hj_expansion(std::int64_t q, std::int64_t p) {
    check_range(q, p, "hj_expansion");
    std::int64_t g = std::gcd(q, p);
    std::int64_t num = p / g, den = q / g;
    HJExpansion e;
    while (den > 0) {
        std::int64_t b = (num + den - 1) / den;  // ceil(num/den)
        e.coefficients.push_back(b);
        std::int64_t next = b * den - num;
        num = den;
        den = next;
    }
    return e;
}

std::int64_t hj_length(std::int64_t q, std::int64_t p) {
    check_range(q, p, "hj_length");
    std::int64_t g = std::gcd(q, p);
    std::int64_t num = p / g, den = q / g, len = 0;
    while (den > 0) {
        std::int64_t b = (num + den - 1) / den;
        ++len;
        std::int64_t next = b * den - num;
        num = den;
        den = next;
    }
    return len;
}

Rat c_value(std::int64_t q, std::int64_t p) {
    return 12 * dedekind_sum(q, p) + hj_length(q, p);
}

std::int64_t mod_inverse(std::int64_t v, std::int64_t p) {
    if (p < 2) throw std::invalid_argument("mod_inverse: p < 2");
    v %= p;
    if (v < 0) v += p;
    if (v == 0) throw std::invalid_argument("mod_inverse: v divisible by p");
    // extended Euclid
    std::int64_t a = v, b = p, x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t t = a / b;
        a -= t * b;
        std::swap(a, b);
        x0 -= t * x1;
        std::swap(x0, x1);
    }
    if (a != 1) throw std::invalid_argument("mod_inverse: v not invertible mod p");
    x0 %= p;
    if (x0 < 0) x0 += p;
    return x0;
}

bool is_bad_residue(std::int64_t q, std::int64_t p) {
    check_range(q, p, "is_bad_residue");
    // l > 3 sqrt(p) + 2  <=>  l > 2 and (l-2)^2 > 9p
    std::int64_t l = hj_length(q, p);
    if (l > 2) {
        Int t = l - 2;
        if (t * t > Int(9) * p) return true;
    }
    // 12|s| > 3 sqrt(p) + 5  <=>  t := 12|s| - 5 > 0 and t^2 > 9p
    Rat t = 12 * rat_abs(dedekind_sum(q, p)) - 5;
    return t > 0 && t * t > Rat(9) * p;
}

BadSet bad_set(std::int64_t p) {
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("bad_set: p must be prime");
    BadSet f;
    f.p = p;
    for (std::int64_t q = 1; q < p; ++q)
        if (is_bad_residue(q, p)) f.members.push_back(q);
    return f;
}

std::vector<BadSetCensusRow> bad_set_census(const std::vector<std::int64_t>& primes, int workers) {
    std::vector<BadSetCensusRow> rows(primes.size());
    auto run_one = [&](std::size_t i) {
        const std::int64_t p = primes[i];
        if (!is_prime(static_cast<std::uint64_t>(p)))
            throw std::invalid_argument("bad_set_census: composite " + std::to_string(p));
        BadSetCensusRow row{p, 0, 0, Rat(0)};
        const Int nine_p = Int(9) * p;
        for (std::int64_t q = 1; q < p; ++q) {
            const std::int64_t l = hj_length(q, p);
            const Rat s12 = 12 * rat_abs(dedekind_sum(q, p));
            row.max_l = std::max(row.max_l, l);
            if (s12 > row.max_12s) row.max_12s = s12;
            bool bad = false;
            if (l > 2 && Int(l - 2) * (l - 2) > nine_p) bad = true;
            if (!bad) {
                Rat t = s12 - 5;
                bad = t > 0 && t * t > Rat(nine_p);
            }
            row.size += bad;
        }
        rows[i] = std::move(row);
    };
    if (workers <= 1 || primes.size() <= 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const std::size_t nw = std::min<std::size_t>(workers, primes.size());
        for (std::size_t w = 0; w < nw; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < primes.size(); i = next.fetch_add(1))
                    run_one(i);
            });
        for (auto& t : pool) t.join();
    }
    return rows;
}

}  // namespace logchern
