#pragma once

// The normalized triple (A, B, C) with A^2 = m(B^2 + C^2), A odd,
// B even, A + B = 1 mod 4, and evaluation of the quadratic residue
// symbol (A + B*sqrt(m) / p). Coordinates are arbitrary precision:
// Pell-derived triples grow without bound.

#include "rqr/arith.hpp"
#include "rqr/two_squares.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace rqr {

using bigint = boost::multiprecision::cpp_int;

/// Reduce a bigint into [0, p).
inline i64 mod_reduce(const bigint& x, i64 p)
{
    bigint r = x % p;
    if (r < 0)
        r += p;
    return static_cast<i64>(r);
}

struct AlphaTriple {
    i64 m = 0;
    bigint A, B, C;
};

inline void check_alpha_invariants(const AlphaTriple& t)
{
    if (t.A * t.A != bigint(t.m) * (t.B * t.B + t.C * t.C))
        throw std::logic_error("AlphaTriple: A^2 != m(B^2 + C^2)");
    if (t.A % 2 == 0 || t.B % 2 != 0)
        throw std::logic_error("AlphaTriple: parity violated (need A odd, B even)");
    bigint r = (t.A + t.B) % 4;
    if (r < 0)
        r += 4;
    if (r != 1)
        throw std::logic_error("AlphaTriple: A + B != 1 mod 4");
}

/// Deterministic witness for m: with m = a^2 + b^2 canonical, the triple
/// (A, B, C) = (±m, ±b, a) satisfies A^2 = m^2 = m(b^2 + a^2); the sign
/// pair is fixed by A + B = 1 mod 4. gcd(A, B) = gcd(m, b) = 1, so the
/// symbol of alpha = A + B*sqrt(m) depends only on p mod m.
inline AlphaTriple alpha_triple(i64 m)
{
    auto rep = two_squares_composite(m);
    AlphaTriple t;
    t.m = m;
    t.A = m;
    t.B = rep.b;
    t.C = rep.a;
    if ((t.A + t.B) % 4 != 1) {
        t.A = -t.A;
        t.B = -t.B;
    }
    check_alpha_invariants(t);
    return t;
}

/// (A + B*sqrt(m) / p) for p = 1 mod 4 with p coprime to m and
/// jacobi(m, p) = +1. The gcd g of A and B is split off so primes
/// dividing it are handled through jacobi(g, p); of the two square roots
/// of m mod p, the one not annihilating A' + B'*r is used (the two
/// values multiply to m*C^2/g^2, so at most one vanishes).
inline int eval_alpha_symbol(const AlphaTriple& t, i64 p)
{
    if (p % 4 != 1 || !is_prime(static_cast<u64>(p)))
        throw std::invalid_argument("eval_alpha_symbol: p must be a prime congruent to 1 mod 4");
    if (t.m % p == 0)
        throw std::domain_error("eval_alpha_symbol: p divides m");
    if (jacobi(t.m % p, p) != 1)
        throw std::domain_error("eval_alpha_symbol: m is not a quadratic residue mod p");
    bigint g = boost::multiprecision::gcd(boost::multiprecision::abs(t.A),
                                          boost::multiprecision::abs(t.B));
    if (g % p == 0)
        throw std::domain_error("eval_alpha_symbol: p divides gcd(A, B)");
    bigint A1 = t.A / g, B1 = t.B / g;
    i64 s = sqrt_mod_prime(t.m % p, p);
    for (i64 r : {s, p - s}) {
        i64 v = mod_reduce(A1 + B1 * r, p);
        if (v != 0)
            return jacobi(mod_reduce(g, p), p) * jacobi(v, p);
    }
    throw std::logic_error("eval_alpha_symbol: both root values vanished");
}

/// ((2 + sqrt(2)) / p) for p = 1 mod 8 — the conductor-8 factor of the
/// even-modulus extension. Root choice is immaterial:
/// (2+s)(2-s) = 2 mod p and (2/p) = +1.
inline int conductor8_symbol(i64 p)
{
    if (p % 8 != 1 || !is_prime(static_cast<u64>(p)))
        throw std::invalid_argument("conductor8_symbol: p must be a prime congruent to 1 mod 8");
    i64 s = sqrt_mod_prime(2, p);
    return jacobi(2 + s, p);
}

} // namespace rqr
