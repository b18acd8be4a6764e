#pragma once

// Range sweeps over law instances. Enumeration order is fixed by the
// input ranges; workers evaluate contiguous chunks and results are
// merged by enumeration index, so output is identical for any job count.

#include "rqr/laws.hpp"

#include <future>
#include <string>
#include <thread>

namespace rqr {

enum class Law { ec, burde, gauss2, scholz, scholz_mutual, furuta };

inline const char* law_name(Law law)
{
    switch (law) {
    case Law::ec: return "ec";
    case Law::burde: return "burde";
    case Law::gauss2: return "gauss2";
    case Law::scholz: return "scholz";
    case Law::scholz_mutual: return "scholz-mutual";
    case Law::furuta: return "furuta";
    }
    throw std::invalid_argument("law_name: unknown law");
}

inline std::optional<Law> law_from_name(const std::string& s)
{
    if (s == "ec") return Law::ec;
    if (s == "burde") return Law::burde;
    if (s == "gauss2") return Law::gauss2;
    if (s == "scholz") return Law::scholz;
    if (s == "scholz-mutual") return Law::scholz_mutual;
    if (s == "furuta") return Law::furuta;
    return std::nullopt;
}

/// Odd squarefree products of primes = 1 mod 4 in (1, max], ascending;
/// with_even additionally interleaves 8*m' values (including 8 itself).
inline std::vector<i64> admissible_moduli(i64 max, bool with_even = false)
{
    std::vector<i64> out;
    for (i64 m = 2; m <= max; ++m) {
        if (m % 2 == 1 && is_four_one_modulus(m))
            out.push_back(m);
        else if (with_even && m % 8 == 0 && (m / 8) % 2 == 1 && is_four_one_modulus(m / 8))
            out.push_back(m);
    }
    return out;
}

/// Primes in [5, max] congruent to r mod q, ascending.
inline std::vector<i64> primes_in(i64 max, i64 q = 4, i64 r = 1)
{
    std::vector<i64> out;
    for (i64 p = 5; p <= max; p += 2)
        if (p % q == r && is_prime(static_cast<u64>(p)))
            out.push_back(p);
    return out;
}

struct SweepResult {
    u64 checked = 0; // non-skipped instances
    u64 matched = 0;
    u64 skipped = 0;
    std::vector<LawReport> reports;        // enumeration order
    std::vector<LawReport> counterexamples; // non-skipped mismatches
};

namespace detail {

inline std::vector<std::pair<i64, i64>> enumerate_instances(Law law, i64 m_max, i64 n_max)
{
    std::vector<std::pair<i64, i64>> out;
    switch (law) {
    case Law::ec:
        for (i64 m : admissible_moduli(m_max, /*with_even=*/true))
            for (i64 p : primes_in(n_max))
                out.emplace_back(m, p);
        break;
    case Law::gauss2:
        for (i64 p : primes_in(n_max > 0 ? n_max : m_max, 8, 1))
            out.emplace_back(p, 0);
        break;
    case Law::burde:
    case Law::scholz_mutual:
        // symmetric laws: unordered pairs once
        for (i64 m : admissible_moduli(m_max))
            for (i64 n : admissible_moduli(n_max))
                if (m < n)
                    out.emplace_back(m, n);
        break;
    case Law::scholz:
        for (i64 m : admissible_moduli(m_max))
            for (i64 n : admissible_moduli(n_max))
                if (m != n)
                    out.emplace_back(m, n);
        break;
    case Law::furuta:
        for (i64 m : admissible_moduli(m_max)) {
            if (four_one_factors(m).size() < 2)
                continue;
            for (i64 n : admissible_moduli(n_max))
                if (std::gcd(m, n) == 1)
                    out.emplace_back(m, n);
        }
        break;
    }
    return out;
}

inline LawReport run_instance(Law law, i64 m, i64 n)
{
    switch (law) {
    case Law::ec: return verify_ec(m, n);
    case Law::burde: return verify_burde(m, n);
    case Law::gauss2: return verify_gauss2(m);
    case Law::scholz: return verify_scholz(m, n);
    case Law::scholz_mutual: return verify_scholz_mutual(m, n);
    case Law::furuta: return verify_furuta(m, n);
    }
    throw std::invalid_argument("run_instance: unknown law");
}

} // namespace detail

inline SweepResult sweep(Law law, i64 m_max, i64 n_max, int jobs = 1)
{
    if (jobs < 1)
        jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto instances = detail::enumerate_instances(law, m_max, n_max);
    std::vector<LawReport> reports(instances.size());

    auto worker = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            reports[i] = detail::run_instance(law, instances[i].first, instances[i].second);
    };
    if (jobs == 1 || instances.size() < 2) {
        worker(0, instances.size());
    } else {
        std::size_t chunk = (instances.size() + jobs - 1) / jobs;
        std::vector<std::future<void>> fs;
        for (std::size_t lo = 0; lo < instances.size(); lo += chunk)
            fs.push_back(std::async(std::launch::async, worker, lo,
                                    std::min(lo + chunk, instances.size())));
        for (auto& f : fs)
            f.get();
    }

    SweepResult res;
    res.reports = std::move(reports);
    for (const auto& r : res.reports) {
        if (r.skipped) {
            ++res.skipped;
        } else {
            ++res.checked;
            if (r.match)
                ++res.matched;
            else
                res.counterexamples.push_back(r);
        }
    }
    return res;
}

} // namespace rqr
