#pragma once

// Negative-norm units of Z[sqrt(m)]: t^2 - m u^2 = -1 via the continued
// fraction of sqrt(m), and evaluation of (eps_m / p).

#include "rqr/alpha.hpp"
#include "rqr/arith.hpp"

#include <optional>

namespace rqr {

struct PellUnit {
    i64 m = 0;
    bigint t, u; // t^2 - m u^2 = -1, both positive
};

/// Minimal positive solution of t^2 - m u^2 = -1, from the convergents
/// of sqrt(m). The norms of the convergents hit -1 at the end of an odd
/// period and +1 at the end of an even one, so the first convergent of
/// norm ±1 decides solvability.
inline std::optional<PellUnit> fundamental_negative_unit(i64 m)
{
    auto primes = four_one_factors(m);
    if (primes.empty())
        throw std::invalid_argument("fundamental_negative_unit: m must exceed 1");
    i64 a0 = static_cast<i64>(isqrt(static_cast<u64>(m)));
    i64 mk = 0, dk = 1, ak = a0;
    bigint h0 = 1, h1 = a0, k0 = 0, k1 = 1;
    for (;;) {
        bigint norm = h1 * h1 - bigint(m) * k1 * k1;
        if (norm == -1) {
            PellUnit e{m, h1, k1};
            if (e.t * e.t - bigint(m) * e.u * e.u != -1)
                throw std::logic_error("fundamental_negative_unit: norm re-check failed");
            return e;
        }
        if (norm == 1)
            return std::nullopt;
        mk = dk * ak - mk;
        dk = (m - mk * mk) / dk;
        ak = (a0 + mk) / dk;
        bigint h2 = ak * h1 + h0;
        bigint k2 = ak * k1 + k0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
    }
}

/// eps_m * sqrt(m) = m*u + t*sqrt(m) as a normalized AlphaTriple:
/// A = ±m*u, B = ±t, C = 1 with A + B = 1 mod 4. Parity is verified,
/// not assumed (t^2 - m u^2 = -1 with m = 1 mod 4 forces t even, u odd).
inline AlphaTriple unit_times_sqrt_as_alpha(const PellUnit& e)
{
    AlphaTriple t;
    t.m = e.m;
    t.A = bigint(e.m) * e.u;
    t.B = e.t;
    t.C = 1;
    if (t.A % 2 == 0 || t.B % 2 != 0)
        throw std::logic_error("unit_times_sqrt_as_alpha: unexpected parity of (m*u, t)");
    if ((t.A + t.B) % 4 != 1) {
        t.A = -t.A;
        t.B = -t.B;
    }
    check_alpha_invariants(t);
    return t;
}

/// (eps_m / p) = (t + u*s / p) with s^2 = m mod p. Root choice is
/// immaterial: the two values multiply to -1 mod p and (-1/p) = +1.
inline int eval_unit_symbol(const PellUnit& e, i64 p)
{
    if (p % 4 != 1 || !is_prime(static_cast<u64>(p)))
        throw std::invalid_argument("eval_unit_symbol: p must be a prime congruent to 1 mod 4");
    if (e.m % p == 0)
        throw std::domain_error("eval_unit_symbol: p divides m");
    if (jacobi(e.m % p, p) != 1)
        throw std::domain_error("eval_unit_symbol: m is not a quadratic residue mod p");
    i64 s = sqrt_mod_prime(e.m % p, p);
    i64 v = mod_reduce(e.t + e.u * s, p);
    if (v == 0)
        throw std::logic_error("eval_unit_symbol: unit value vanished mod p");
    return jacobi(v, p);
}

/// (eps_m / n) for n a squarefree product of admissible primes:
/// the product over prime factors; (eps_m / 1) = +1.
inline int eval_unit_symbol_composite(const PellUnit& e, i64 n)
{
    int sign = 1;
    for (i64 q : four_one_factors(n)) {
        if (e.m % q == 0)
            throw std::invalid_argument("eval_unit_symbol_composite: moduli not coprime");
        sign *= eval_unit_symbol(e, q);
    }
    return sign;
}

} // namespace rqr
