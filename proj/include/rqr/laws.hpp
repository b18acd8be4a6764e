#pragma once

// Law verifiers. Each one computes every side of a reciprocity identity
// through a disjoint code path (quadratic symbols of explicit algebraic
// integers on one side, quartic symbols via exponentiation on the other)
// and reports whether they agree. Out-of-condition instances yield
// skipped reports, never hard errors: the laws are conditional
// statements and sweeps must be able to census a range.

#include "rqr/alpha.hpp"
#include "rqr/arith.hpp"
#include "rqr/pell.hpp"
#include "rqr/quartic.hpp"
#include "rqr/two_squares.hpp"

#include <optional>
#include <string>

namespace rqr {

struct LawReport {
    std::string law;
    std::vector<std::pair<std::string, i64>> inputs;
    std::vector<int> sides;
    bool match = false;
    std::optional<std::string> skipped;
};

namespace detail {

inline LawReport make_report(std::string law, std::vector<std::pair<std::string, i64>> inputs,
                             std::vector<int> sides)
{
    LawReport r;
    r.law = std::move(law);
    r.inputs = std::move(inputs);
    r.sides = std::move(sides);
    r.match = !r.sides.empty();
    for (int s : r.sides)
        if (s != r.sides.front())
            r.match = false;
    return r;
}

inline LawReport make_skipped(std::string law, std::vector<std::pair<std::string, i64>> inputs,
                              std::string reason)
{
    LawReport r;
    r.law = std::move(law);
    r.inputs = std::move(inputs);
    r.match = false;
    r.skipped = std::move(reason);
    return r;
}

/// (2/x) = (-1)^((x^2-1)/8), a function of |x| mod 8 only.
inline int two_symbol(i64 x)
{
    i64 r = std::abs(x) % 8;
    if (r % 2 == 0)
        throw std::invalid_argument("two_symbol: argument must be odd");
    return (r == 1 || r == 7) ? 1 : -1;
}

} // namespace detail

/// All pairwise cross Legendre conditions between the prime factors of
/// m and n. Both directions are evaluated (they must agree by
/// reciprocity for primes = 1 mod 4; disagreement is an internal error).
inline bool is_admissible(i64 m, i64 n)
{
    if (std::gcd(m, n) != 1)
        return false;
    auto ps = four_one_factors(m);
    auto qs = four_one_factors(n);
    for (i64 p : ps) {
        for (i64 q : qs) {
            int fwd = jacobi(p, q), bwd = jacobi(q, p);
            if (fwd != bwd)
                throw std::logic_error("is_admissible: reciprocity self-test failed");
            if (fwd != 1)
                return false;
        }
    }
    return true;
}

/// Eq. (EC): (A + B*sqrt(m) / p) = (p/m)_4 for admissible p. Even
/// moduli 8*m' use the conductor-8 factor and require p = 1 mod 8.
inline LawReport verify_ec(i64 m, i64 p)
{
    std::vector<std::pair<std::string, i64>> in{{"m", m}, {"p", p}};
    if (!is_prime(static_cast<u64>(p)))
        throw std::invalid_argument("verify_ec: p must be prime");
    i64 modd = m;
    bool even = false;
    if (m % 2 == 0) {
        if (m % 8 != 0 || (m / 8) % 2 == 0)
            throw std::invalid_argument("verify_ec: even m must have 2-part exactly 8");
        modd = m / 8;
        even = true;
    }
    if (!is_four_one_modulus(modd))
        throw std::invalid_argument("verify_ec: odd part of m must be a squarefree product of primes = 1 mod 4");
    if (m == 1)
        throw std::invalid_argument("verify_ec: m must exceed 1");
    if (p % 4 != 1)
        return detail::make_skipped("ec", in, "p not 1 mod 4");
    if (even && p % 8 != 1)
        return detail::make_skipped("ec", in, "even m requires p = 1 mod 8");
    if (m % p == 0)
        return detail::make_skipped("ec", in, "p divides m");
    if (modd > 1 && !is_admissible(modd, p))
        return detail::make_skipped("ec", in, "inadmissible: some (p/p_j) != +1");

    int left = 1;
    if (even)
        left *= conductor8_symbol(p);
    if (modd > 1)
        left *= eval_alpha_symbol(alpha_triple(modd), p);
    int right = quartic_symbol_composite(p, m);
    return detail::make_report("ec", in, {left, right});
}

/// Burde: (m/n)_4 (n/m)_4 = (ac-bd / m) = (ac-bd / n) with m = a^2+b^2,
/// n = c^2+d^2, ac odd. Representations default to the canonical ones;
/// explicit (possibly sign-flipped) representations may be supplied.
inline LawReport verify_burde_with_reps(i64 m, i64 n, i64 a, i64 b, i64 c, i64 d)
{
    std::vector<std::pair<std::string, i64>> in{
        {"m", m}, {"n", n}, {"a", a}, {"b", b}, {"c", c}, {"d", d}};
    if (a * a + b * b != m || c * c + d * d != n)
        throw std::invalid_argument("verify_burde: representations do not match m, n");
    if (a % 2 == 0 || c % 2 == 0)
        throw std::invalid_argument("verify_burde: need a, c odd");
    if (!is_admissible(m, n))
        return detail::make_skipped("burde", in, "inadmissible pair");
    if (m == 1 || n == 1)
        return detail::make_skipped("burde", in, "degenerate modulus 1");
    int q4 = quartic_symbol_composite(m, n) * quartic_symbol_composite(n, m);
    i64 e = a * c - b * d;
    return detail::make_report("burde", in, {q4, jacobi(e, m), jacobi(e, n)});
}

inline LawReport verify_burde(i64 m, i64 n)
{
    if (!is_four_one_modulus(m) || !is_four_one_modulus(n))
        throw std::invalid_argument("verify_burde: m, n must be squarefree products of primes = 1 mod 4");
    if (std::gcd(m, n) != 1 || !is_admissible(m, n))
        return detail::make_skipped("burde", {{"m", m}, {"n", n}}, "inadmissible pair");
    if (m == 1 || n == 1)
        return detail::make_skipped("burde", {{"m", m}, {"n", n}}, "degenerate modulus 1");
    auto rm = two_squares_composite(m);
    auto rn = two_squares_composite(n);
    return verify_burde_with_reps(m, n, rm.a, rm.b, rn.a, rn.b);
}

/// Gauss: (2/p)_4 = (-1)^b for p = a^2 + 16 b^2, a = 1 mod 4. The third
/// side is Burde's route: (2/p)_4 (p/2)_4 = (2 / a-4b).
inline LawReport verify_gauss2(i64 p)
{
    std::vector<std::pair<std::string, i64>> in{{"p", p}};
    if (!is_prime(static_cast<u64>(p)))
        throw std::invalid_argument("verify_gauss2: p must be prime");
    if (p % 8 != 1)
        return detail::make_skipped("gauss2", in, "p not 1 mod 8");
    auto rep = cornacchia_prime(p);
    if (rep.b % 4 != 0)
        throw std::logic_error("verify_gauss2: b not divisible by 4 for p = 1 mod 8");
    i64 b = rep.b / 4;
    i64 a = (rep.a % 4 == 1) ? rep.a : -rep.a;
    in.emplace_back("a", a);
    in.emplace_back("b", b);
    int s1 = quartic_symbol_prime(2, p);
    int s2 = (b % 2 == 0) ? 1 : -1;
    int s3 = quartic_symbol_two(p) * detail::two_symbol(a - 4 * b);
    return detail::make_report("gauss2", in, {s1, s2, s3});
}

/// Scholz (SRL, composite n): (eps_m / n) = (m/n)_4 (n/m)_4.
inline LawReport verify_scholz(i64 m, i64 n)
{
    std::vector<std::pair<std::string, i64>> in{{"m", m}, {"n", n}};
    if (!is_four_one_modulus(m) || !is_four_one_modulus(n))
        throw std::invalid_argument("verify_scholz: m, n must be squarefree products of primes = 1 mod 4");
    if (m == 1 || n == 1)
        return detail::make_skipped("scholz", in, "degenerate modulus 1");
    if (!is_admissible(m, n))
        return detail::make_skipped("scholz", in, "inadmissible pair");
    auto unit = fundamental_negative_unit(m);
    if (!unit)
        return detail::make_skipped("scholz", in, "no negative norm unit for m");
    int left = eval_unit_symbol_composite(*unit, n);
    int right = quartic_symbol_composite(m, n) * quartic_symbol_composite(n, m);
    return detail::make_report("scholz", in, {left, right});
}

/// Mutuality: (eps_m / n) = (eps_n / m) when both units exist.
inline LawReport verify_scholz_mutual(i64 m, i64 n)
{
    std::vector<std::pair<std::string, i64>> in{{"m", m}, {"n", n}};
    if (!is_four_one_modulus(m) || !is_four_one_modulus(n))
        throw std::invalid_argument("verify_scholz_mutual: invalid moduli");
    if (m == 1 || n == 1)
        return detail::make_skipped("scholz_mutual", in, "degenerate modulus 1");
    if (!is_admissible(m, n))
        return detail::make_skipped("scholz_mutual", in, "inadmissible pair");
    auto um = fundamental_negative_unit(m);
    auto un = fundamental_negative_unit(n);
    if (!um || !un)
        return detail::make_skipped("scholz_mutual", in, "missing negative norm unit");
    return detail::make_report("scholz_mutual", in,
                               {eval_unit_symbol_composite(*um, n),
                                eval_unit_symbol_composite(*un, m)});
}

/// Furuta: (eps_m / n) = prod_j (eps_{p_j} / n) over the prime factors
/// of m. When a two-part split m = r*s is supplied and both eps_r and
/// eps_s exist, the two-factor product side is appended.
inline LawReport verify_furuta(i64 m, i64 n, std::optional<std::pair<i64, i64>> split = {})
{
    std::vector<std::pair<std::string, i64>> in{{"m", m}, {"n", n}};
    if (split) {
        in.emplace_back("r", split->first);
        in.emplace_back("s", split->second);
        if (split->first * split->second != m || std::gcd(split->first, split->second) != 1 ||
            split->first <= 1 || split->second <= 1)
            throw std::invalid_argument("verify_furuta: split must be a nontrivial coprime factorization of m");
    }
    if (!is_four_one_modulus(m) || !is_four_one_modulus(n))
        throw std::invalid_argument("verify_furuta: invalid moduli");
    if (m == 1 || n == 1)
        return detail::make_skipped("furuta", in, "degenerate modulus 1");
    if (!is_admissible(m, n))
        return detail::make_skipped("furuta", in, "inadmissible pair");
    auto um = fundamental_negative_unit(m);
    if (!um)
        return detail::make_skipped("furuta", in, "no negative norm unit for m");
    int left = eval_unit_symbol_composite(*um, n);
    int right = 1;
    for (i64 pj : four_one_factors(m)) {
        auto uj = fundamental_negative_unit(pj);
        if (!uj)
            throw std::logic_error("verify_furuta: prime = 1 mod 4 without negative norm unit");
        right *= eval_unit_symbol_composite(*uj, n);
    }
    std::vector<int> sides{left, right};
    if (split) {
        auto ur = fundamental_negative_unit(split->first);
        auto us = fundamental_negative_unit(split->second);
        if (!ur || !us)
            return detail::make_skipped("furuta", in, "split part lacks a negative norm unit");
        sides.push_back(eval_unit_symbol_composite(*ur, n) * eval_unit_symbol_composite(*us, n));
    }
    return detail::make_report("furuta", in, sides);
}

} // namespace rqr
