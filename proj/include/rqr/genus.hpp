#pragma once

// C4-factorization explorer for quadratic discriminants expressible as
// sums of two squares: d = m or 8m with m an odd squarefree product of
// primes = 1 mod 4. Splits d = d1*d2 into coprime products of prime
// discriminants, flags the C4 condition, and evaluates Scholz's
// totally-real criterion (d1/d2)_4 = (d2/d1)_4 on C4 splits.

#include "rqr/arith.hpp"
#include "rqr/quartic.hpp"

#include <optional>

namespace rqr {

/// The prime discriminants dividing d: 8 (if present) first, then the
/// odd primes ascending. Throws if d is not of the admissible shape.
inline std::vector<i64> prime_discriminants(i64 d)
{
    if (d < 1)
        throw std::invalid_argument("prime_discriminants: d must be positive");
    std::vector<i64> parts;
    i64 odd = d;
    if (d % 2 == 0) {
        if (d % 8 != 0 || (d / 8) % 2 == 0)
            throw std::invalid_argument("prime_discriminants: even d must have 2-part exactly 8");
        parts.push_back(8);
        odd = d / 8;
    }
    for (i64 p : four_one_factors(odd))
        parts.push_back(p);
    return parts;
}

struct DiscSplit {
    i64 d = 0;
    i64 d1 = 0; // d1 < d2, both > 1
    i64 d2 = 0;
    bool is_c4 = false;
    std::optional<bool> scholz_equal; // present iff is_c4
};

namespace detail {

/// C4 condition of x against the prime-discriminant parts of y:
/// (x/p) = +1 for every odd prime part, and x = 1 mod 8 at the part 8
/// (the quartic symbol at 2 is only defined there).
inline bool c4_one_direction(i64 x, i64 y)
{
    if (y % 2 == 0) {
        if (x % 8 != 1)
            return false;
        y /= 8;
    }
    for (i64 p : four_one_factors(y))
        if (jacobi(x, p) != 1)
            return false;
    return true;
}

} // namespace detail

/// (d1/d2)_4 = (d2/d1)_4, defined on C4 splits only.
inline bool scholz_real_criterion(const DiscSplit& s)
{
    if (!s.is_c4)
        throw std::domain_error("scholz_real_criterion: split is not C4");
    return quartic_symbol_composite(s.d1, s.d2) == quartic_symbol_composite(s.d2, s.d1);
}

/// All 2^(r-1) - 1 nontrivial unordered coprime splits of d, ordered by
/// d1, each with is_c4 evaluated (and scholz_equal filled on C4 splits).
inline std::vector<DiscSplit> enumerate_splits(i64 d)
{
    auto parts = prime_discriminants(d);
    std::size_t r = parts.size();
    if (r < 2)
        throw std::invalid_argument("enumerate_splits: need at least two prime discriminants");
    std::vector<DiscSplit> out;
    for (std::size_t mask = 1; mask < (std::size_t(1) << r) - 1; ++mask) {
        i64 d1 = 1, d2 = 1;
        for (std::size_t i = 0; i < r; ++i)
            (mask >> i & 1 ? d1 : d2) *= parts[i];
        if (d1 > d2)
            continue; // unordered pairs stored once
        DiscSplit s;
        s.d = d;
        s.d1 = d1;
        s.d2 = d2;
        s.is_c4 = detail::c4_one_direction(d1, d2) && detail::c4_one_direction(d2, d1);
        if (s.is_c4)
            s.scholz_equal = scholz_real_criterion(s);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const DiscSplit& a, const DiscSplit& b) { return a.d1 < b.d1; });
    return out;
}

struct GenusReport {
    i64 d = 0;
    std::vector<DiscSplit> splits;
    int c4_count = 0;
    int real_count = 0;
};

inline GenusReport explore(i64 d)
{
    GenusReport r;
    r.d = d;
    r.splits = enumerate_splits(d);
    for (const auto& s : r.splits) {
        if (s.is_c4) {
            ++r.c4_count;
            if (s.scholz_equal && *s.scholz_equal)
                ++r.real_count;
        }
    }
    return r;
}

} // namespace rqr
