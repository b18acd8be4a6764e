#pragma once

// Rational quartic residue symbols. For p = 1 mod 4 and a quadratic
// residue a, (a/p)_4 = a^((p-1)/4) mod p lands in {+1, -1} and is +1
// exactly when a is a fourth power mod p. Extended to denominator 2 by
// (a/2)_4 = (-1)^((a-1)/8) for a = 1 mod 8, and to composite moduli by
// multiplicativity. The symbol is deliberately undefined (an error, not
// a silent 0) when the underlying quadratic symbol is not +1.

#include "rqr/arith.hpp"

namespace rqr {

/// (a/p)_4 for prime p = 1 mod 4 and a with jacobi(a, p) = +1.
inline int quartic_symbol_prime(i64 a, i64 p)
{
    if (p < 5 || p % 4 != 1 || !is_prime(static_cast<u64>(p)))
        throw std::invalid_argument("quartic_symbol_prime: p must be a prime congruent to 1 mod 4");
    if (jacobi(a, p) != 1)
        throw std::domain_error("quartic_symbol_prime: a is not a quadratic residue mod p");
    i64 v = mod_pow(a, static_cast<u64>((p - 1) / 4), p);
    if (v == 1)
        return 1;
    if (v == p - 1)
        return -1;
    throw std::logic_error("quartic_symbol_prime: fourth-power test escaped {1, p-1}");
}

/// (a/2)_4 = (-1)^((a-1)/8), defined only for a = 1 mod 8.
inline int quartic_symbol_two(i64 a)
{
    i64 r = a % 8;
    if (r < 0)
        r += 8;
    if (r != 1)
        throw std::invalid_argument("quartic_symbol_two: argument must be 1 mod 8");
    i64 k = (a - 1) / 8;
    return (k % 2 == 0) ? 1 : -1;
}

/// (a/m)_4 for m a squarefree product of primes = 1 mod 4, optionally
/// times 8 (the conductor-8 character); (a/1)_4 = +1.
inline int quartic_symbol_composite(i64 a, i64 m)
{
    if (m < 1)
        throw std::invalid_argument("quartic_symbol_composite: modulus must be positive");
    int sign = 1;
    if (m % 2 == 0) {
        if (m % 8 != 0 || (m / 8) % 2 == 0)
            throw std::invalid_argument("quartic_symbol_composite: even modulus must have 2-part exactly 8");
        sign *= quartic_symbol_two(a);
        m /= 8;
    }
    for (i64 p : four_one_factors(m))
        sign *= quartic_symbol_prime(a, p);
    return sign;
}

} // namespace rqr
