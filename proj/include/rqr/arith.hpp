#pragma once

// Exact elementary number theory on 64-bit integers: deterministic
// primality, factorization, Jacobi symbols, modular exponentiation and
// deterministic modular square roots. All intermediates go through
// 128-bit arithmetic, so every operation is exact for inputs up to 2^48
// (and in fact for the full int64 range of the individual operations).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rqr {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 n) { return static_cast<u64>(u128(a) * b % n); }

/// a^e mod n, exact for any 64-bit inputs with n >= 1.
inline u64 pow_mod(u64 a, u64 e, u64 n)
{
    if (n < 1)
        throw std::invalid_argument("pow_mod: modulus must be positive");
    if (n == 1)
        return 0;
    u64 r = 1;
    a %= n;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, n);
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    return r;
}

/// Signed convenience overload: reduces a into [0, n) first.
inline i64 mod_pow(i64 a, u64 e, i64 n)
{
    if (n < 1)
        throw std::invalid_argument("mod_pow: modulus must be positive");
    i64 r = a % n;
    if (r < 0)
        r += n;
    return static_cast<i64>(pow_mod(static_cast<u64>(r), e, static_cast<u64>(n)));
}

namespace detail {

inline bool miller_rabin_witness(u64 n, u64 a, u64 d, int s)
{
    a %= n;
    if (a == 0)
        return true;
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace detail

/// Deterministic primality for the full 64-bit range. The witness set
/// {2,3,5,7,11,13,17,19,23,29,31,37} is known complete below 3.3e24.
inline bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
        if (!detail::miller_rabin_witness(n, a, d, s))
            return false;
    return true;
}

struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, unsigned>> factors; // primes strictly increasing
};

namespace detail {

inline u64 pollard_rho(u64 n)
{
    // Brent's cycle detection; c advances deterministically so runs are
    // reproducible across platforms.
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i)
                y = (mul_mod(y, y, n) + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                u64 ys = y;
                int lim = std::min(128, lam - k);
                for (int i = 0; i < lim; ++i) {
                    y = (mul_mod(y, y, n) + c) % n;
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                if (d == n) {
                    // backtrack one step at a time
                    d = 1;
                    y = ys;
                    do {
                        y = (mul_mod(y, y, n) + c) % n;
                        d = std::gcd(x > y ? x - y : y - x, n);
                    } while (d == 1);
                    break;
                }
                k += lim;
            }
            lam *= 2;
        }
        if (d != n)
            return d;
    }
}

inline void factor_rec(u64 n, std::vector<u64>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace detail

/// Complete factorization, primes ascending. Trial division up to 1e6,
/// Pollard rho for what remains.
inline Factorization factorize(u64 n)
{
    if (n < 1)
        throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    std::vector<u64> primes;
    for (u64 d : {2ull, 3ull, 5ull}) {
        while (n % d == 0) {
            primes.push_back(d);
            n /= d;
        }
    }
    for (u64 d = 7; d <= 1000000 && d * d <= n; d += 2) {
        while (n % d == 0) {
            primes.push_back(d);
            n /= d;
        }
    }
    detail::factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1u);
    }
    return f;
}

/// Jacobi symbol (a/n) for odd positive n; 0 iff gcd(a,n) > 1, (a/1) = 1.
inline int jacobi(i64 a, i64 n)
{
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("jacobi: denominator must be odd and positive");
    a %= n;
    if (a < 0)
        a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

/// Least quadratic nonresidue mod an odd prime p, by ascending scan.
inline i64 least_nonresidue(i64 p)
{
    for (i64 z = 2;; ++z)
        if (jacobi(z, p) == -1)
            return z;
}

/// Deterministic square root of a mod an odd prime p, requiring
/// jacobi(a, p) = +1. Of the two roots, returns the smaller.
inline i64 sqrt_mod_prime(i64 a, i64 p)
{
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("sqrt_mod_prime: p must be an odd prime");
    a %= p;
    if (a < 0)
        a += p;
    if (a == 0)
        throw std::domain_error("sqrt_mod_prime: p divides a");
    if (jacobi(a, p) != 1)
        throw std::domain_error("sqrt_mod_prime: a is a quadratic nonresidue mod p");
    i64 s;
    if (p % 4 == 3) {
        s = mod_pow(a, static_cast<u64>((p + 1) / 4), p);
    } else {
        // Tonelli-Shanks with the least nonresidue as auxiliary
        i64 q = p - 1;
        int e = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++e;
        }
        i64 z = least_nonresidue(p);
        i64 c = mod_pow(z, static_cast<u64>(q), p);
        i64 x = mod_pow(a, static_cast<u64>((q + 1) / 2), p);
        i64 t = mod_pow(a, static_cast<u64>(q), p);
        int m = e;
        while (t != 1) {
            i64 tt = t;
            int i = 0;
            while (tt != 1) {
                tt = static_cast<i64>(mul_mod(u64(tt), u64(tt), u64(p)));
                ++i;
            }
            i64 b = c;
            for (int j = 0; j < m - i - 1; ++j)
                b = static_cast<i64>(mul_mod(u64(b), u64(b), u64(p)));
            x = static_cast<i64>(mul_mod(u64(x), u64(b), u64(p)));
            c = static_cast<i64>(mul_mod(u64(b), u64(b), u64(p)));
            t = static_cast<i64>(mul_mod(u64(t), u64(c), u64(p)));
            m = i;
        }
        s = x;
    }
    return std::min(s, p - s);
}

/// Integer square root (floor).
inline u64 isqrt(u64 n)
{
    if (n == 0)
        return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

/// The odd prime factors of a valid modulus m = p1...pr (squarefree,
/// every prime 1 mod 4), ascending. Throws if m is not of that shape.
/// m = 1 yields the empty list.
inline std::vector<i64> four_one_factors(i64 m)
{
    if (m < 1)
        throw std::invalid_argument("modulus must be positive");
    if (m % 2 == 0)
        throw std::invalid_argument("modulus must be odd");
    std::vector<i64> out;
    auto f = factorize(static_cast<u64>(m));
    for (auto [p, e] : f.factors) {
        if (e != 1)
            throw std::invalid_argument("modulus must be squarefree");
        if (p % 4 != 1)
            throw std::invalid_argument("modulus has a prime factor not congruent to 1 mod 4");
        out.push_back(static_cast<i64>(p));
    }
    return out;
}

inline bool is_four_one_modulus(i64 m)
{
    if (m < 1 || m % 2 == 0)
        return false;
    auto f = factorize(static_cast<u64>(m));
    for (auto [p, e] : f.factors)
        if (e != 1 || p % 4 != 1)
            return false;
    return true;
}

} // namespace rqr
