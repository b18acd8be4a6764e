#pragma once

// Brute-force reference implementations. Shipped in the library (not
// test-only) so the CLI can expose --oracle cross-checks; O(p) or worse
// by design.

#include "rqr/arith.hpp"

#include <optional>
#include <set>

namespace rqr {

/// True iff some x in [1, p) has x^4 = a mod p, by exhaustive scan.
inline bool quartic_residue_bruteforce(i64 a, i64 p)
{
    if (p < 3 || p >= 100000 || !is_prime(static_cast<u64>(p)))
        throw std::invalid_argument("quartic_residue_bruteforce: need an odd prime below 10^5");
    i64 r = a % p;
    if (r < 0)
        r += p;
    if (r == 0)
        throw std::invalid_argument("quartic_residue_bruteforce: p divides a");
    for (i64 x = 1; x < p; ++x) {
        i64 x2 = static_cast<i64>(mul_mod(u64(x), u64(x), u64(p)));
        if (mul_mod(u64(x2), u64(x2), u64(p)) == u64(r))
            return true;
    }
    return false;
}

/// Minimal u <= u_max with m*u^2 - 1 a perfect square.
inline std::optional<std::pair<i64, i64>> pell_bruteforce(i64 m, i64 u_max)
{
    if (u_max < 1 || u_max > 1000000)
        throw std::invalid_argument("pell_bruteforce: u_max must lie in [1, 10^6]");
    for (i64 u = 1; u <= u_max; ++u) {
        u64 v = static_cast<u64>(m) * static_cast<u64>(u) * static_cast<u64>(u) - 1;
        u64 t = isqrt(v);
        if (t * t == v)
            return std::make_pair(static_cast<i64>(t), u);
    }
    return std::nullopt;
}

/// All s in [0, p) with s^2 = a mod p.
inline std::set<i64> sqrt_bruteforce(i64 a, i64 p)
{
    if (p < 3 || p >= 10000 || !is_prime(static_cast<u64>(p)))
        throw std::invalid_argument("sqrt_bruteforce: need an odd prime below 10^4");
    i64 r = a % p;
    if (r < 0)
        r += p;
    std::set<i64> roots;
    for (i64 s = 0; s < p; ++s)
        if (static_cast<i64>(mul_mod(u64(s), u64(s), u64(p))) == r)
            roots.insert(s);
    return roots;
}

} // namespace rqr
