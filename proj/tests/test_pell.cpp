#include "rqr/oracles.hpp"
#include "rqr/pell.hpp"
#include "rqr/sweep.hpp"

#include <doctest.h>

using namespace rqr;

TEST_CASE("fundamental_negative_unit fixtures")
{
    auto e5 = fundamental_negative_unit(5);
    REQUIRE(e5);
    CHECK(e5->t == 2);
    CHECK(e5->u == 1);
    auto e13 = fundamental_negative_unit(13);
    REQUIRE(e13);
    CHECK(e13->t == 18);
    CHECK(e13->u == 5);
    auto e65 = fundamental_negative_unit(65);
    REQUIRE(e65);
    CHECK(e65->t == 8);
    CHECK(e65->u == 1);
    CHECK_FALSE(fundamental_negative_unit(205)); // 5 * 41, even period
    CHECK_THROWS_AS(fundamental_negative_unit(21), std::invalid_argument);
}

TEST_CASE("unit validity re-verified against the brute-force oracle")
{
    for (i64 m : admissible_moduli(500)) {
        auto unit = fundamental_negative_unit(m);
        auto brute = pell_bruteforce(m, 1000000);
        if (unit) {
            CHECK(unit->t * unit->t - bigint(m) * unit->u * unit->u == -1);
            if (unit->u <= 1000000) { // within oracle scan range
                REQUIRE(brute);
                CHECK(unit->t == brute->first);
                CHECK(unit->u == brute->second);
            } else {
                CHECK_FALSE(brute);
            }
        } else {
            CHECK_FALSE(brute);
        }
    }
}

TEST_CASE("unit_times_sqrt_as_alpha fixtures")
{
    auto t5 = unit_times_sqrt_as_alpha(PellUnit{5, 2, 1});
    CHECK(t5.A == -5);
    CHECK(t5.B == -2);
    CHECK(t5.C == 1);
    auto t65 = unit_times_sqrt_as_alpha(PellUnit{65, 8, 1});
    CHECK(t65.A == 65);
    CHECK(t65.B == 8);
    CHECK(t65.C == 1);
    auto t13 = unit_times_sqrt_as_alpha(PellUnit{13, 18, 5});
    CHECK(t13.A == -65);
    CHECK(t13.B == -18);
    CHECK(t13.C == 1);
    CHECK(t13.A * t13.A == bigint(13) * (t13.B * t13.B + 1));
}

TEST_CASE("eval_unit_symbol fixtures")
{
    CHECK(eval_unit_symbol(PellUnit{5, 2, 1}, 29) == 1);
    CHECK(eval_unit_symbol(PellUnit{5, 2, 1}, 61) == -1);
    CHECK(eval_unit_symbol(PellUnit{13, 18, 5}, 61) == 1);
    CHECK_THROWS_AS(eval_unit_symbol(PellUnit{5, 2, 1}, 13), std::domain_error);
}

TEST_CASE("eval_unit_symbol_composite fixtures")
{
    CHECK(eval_unit_symbol_composite(PellUnit{5, 2, 1}, 29) == 1);
    CHECK(eval_unit_symbol_composite(PellUnit{5, 2, 1}, 1) == 1);
    CHECK(eval_unit_symbol_composite(PellUnit{5, 2, 1}, 1769) == -1); // 29 * 61
    CHECK_THROWS_AS(eval_unit_symbol_composite(PellUnit{5, 2, 1}, 65), std::invalid_argument);
}

TEST_CASE("root independence of the unit symbol")
{
    for (i64 m : admissible_moduli(500)) {
        auto e = fundamental_negative_unit(m);
        if (!e)
            continue;
        for (i64 p : primes_in(10000)) {
            if (m % p == 0 || jacobi(m % p, p) != 1)
                continue;
            i64 s = sqrt_mod_prime(m % p, p);
            i64 v1 = mod_reduce(e->t + e->u * s, p);
            i64 v2 = mod_reduce(e->t + e->u * (p - s), p);
            REQUIRE(v1 != 0);
            REQUIRE(v2 != 0);
            CHECK(jacobi(v1, p) == jacobi(v2, p));
        }
    }
}

TEST_CASE("unit choice does not matter: eps and eps^3 agree")
{
    for (i64 m : admissible_moduli(200)) {
        auto e = fundamental_negative_unit(m);
        if (!e)
            continue;
        // (t + u sqrt(m))^3, exact integer coordinates
        PellUnit cube{m, e->t * e->t * e->t + 3 * e->t * e->u * e->u * m,
                      3 * e->t * e->t * e->u + e->u * e->u * e->u * m};
        REQUIRE(cube.t * cube.t - bigint(m) * cube.u * cube.u == -1);
        for (i64 p : primes_in(2000)) {
            if (m % p == 0 || jacobi(m % p, p) != 1)
                continue;
            CHECK(eval_unit_symbol(*e, p) == eval_unit_symbol(cube, p));
        }
    }
}

TEST_CASE("pell_bruteforce fixtures")
{
    auto r5 = pell_bruteforce(5, 10);
    REQUIRE(r5);
    CHECK(*r5 == std::pair<i64, i64>{2, 1});
    auto r13 = pell_bruteforce(13, 10);
    REQUIRE(r13);
    CHECK(*r13 == std::pair<i64, i64>{18, 5});
    CHECK_FALSE(pell_bruteforce(205, 10000));
}
