#pragma once

// Canonical two-squares representations m = a^2 + b^2 with a odd and b
// even, for primes p = 1 mod 4 (Cornacchia) and their squarefree
// products (Gaussian composition in ascending prime order).

#include "rqr/arith.hpp"

namespace rqr {

struct TwoSquaresRep {
    i64 m = 0;
    i64 a = 0; // odd, positive
    i64 b = 0; // even, positive
};

/// p = a^2 + b^2 for prime p = 1 mod 4: take the smaller root of
/// x^2 = -1 mod p and run the Euclidean descent, keeping the first
/// remainder below sqrt(p).
inline TwoSquaresRep cornacchia_prime(i64 p)
{
    if (p < 5 || p % 4 != 1 || !is_prime(static_cast<u64>(p)))
        throw std::invalid_argument("cornacchia_prime: p must be a prime congruent to 1 mod 4");
    i64 x = sqrt_mod_prime(p - 1, p);
    i64 r0 = p, r1 = x;
    while (r1 * r1 > p) {
        i64 t = r0 % r1;
        r0 = r1;
        r1 = t;
    }
    i64 a = r1;
    i64 b = static_cast<i64>(isqrt(static_cast<u64>(p - a * a)));
    if (a % 2 == 0)
        std::swap(a, b);
    return {p, a, b};
}

/// Canonical representation of a squarefree product of primes = 1 mod 4:
/// compose the prime representations as Gaussian integers in ascending
/// prime order, then normalize to a odd > 0, b even > 0.
inline TwoSquaresRep two_squares_composite(i64 m)
{
    auto primes = four_one_factors(m);
    if (primes.empty())
        throw std::invalid_argument("two_squares_composite: m must exceed 1");
    i64 x = 1, y = 0;
    bool first = true;
    for (i64 p : primes) {
        auto r = cornacchia_prime(p);
        if (first) {
            x = r.a;
            y = r.b;
            first = false;
        } else {
            i64 nx = x * r.a - y * r.b;
            i64 ny = x * r.b + y * r.a;
            x = nx;
            y = ny;
        }
    }
    if (x % 2 == 0)
        std::swap(x, y);
    x = std::abs(x);
    y = std::abs(y);
    return {m, x, y};
}

/// Every primitive representation m = a^2 + b^2 with a odd > 0,
/// b even > 0, by exhaustive scan; sorted by a. Test-oracle scale.
inline std::vector<TwoSquaresRep> all_two_squares(i64 m)
{
    if (m < 1 || m > 1000000)
        throw std::invalid_argument("all_two_squares: m must lie in [1, 10^6]");
    std::vector<TwoSquaresRep> out;
    for (i64 a = 1; a * a < m; a += 2) {
        i64 b2 = m - a * a;
        i64 b = static_cast<i64>(isqrt(static_cast<u64>(b2)));
        if (b * b == b2 && b > 0 && b % 2 == 0 && std::gcd(a, b) == 1)
            out.push_back({m, a, b});
    }
    return out;
}

} // namespace rqr
