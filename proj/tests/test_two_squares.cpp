#include "rqr/two_squares.hpp"

#include <doctest.h>

using namespace rqr;

TEST_CASE("cornacchia fixtures")
{
    auto r5 = cornacchia_prime(5);
    CHECK(r5.a == 1);
    CHECK(r5.b == 2);
    auto r13 = cornacchia_prime(13);
    CHECK(r13.a == 3);
    CHECK(r13.b == 2);
    auto r29 = cornacchia_prime(29);
    CHECK(r29.a == 5);
    CHECK(r29.b == 2);
    CHECK_THROWS_AS(cornacchia_prime(7), std::invalid_argument);
    CHECK_THROWS_AS(cornacchia_prime(65), std::invalid_argument);
}

TEST_CASE("composite composition fixtures")
{
    auto r5 = two_squares_composite(5);
    CHECK(r5.a == 1);
    CHECK(r5.b == 2);
    auto r65 = two_squares_composite(65);
    CHECK(r65.a == 1);
    CHECK(r65.b == 8);
    auto r145 = two_squares_composite(145);
    CHECK(r145.a == 1);
    CHECK(r145.b == 12);
    CHECK_THROWS_AS(two_squares_composite(21), std::invalid_argument);
    CHECK_THROWS_AS(two_squares_composite(25), std::invalid_argument);
    CHECK_THROWS_AS(two_squares_composite(10), std::invalid_argument);
}

TEST_CASE("all_two_squares fixtures")
{
    auto r25 = all_two_squares(25);
    REQUIRE(r25.size() == 1);
    CHECK(r25[0].a == 3);
    CHECK(r25[0].b == 4);
    auto r65 = all_two_squares(65);
    REQUIRE(r65.size() == 2);
    CHECK(r65[0].a == 1);
    CHECK(r65[0].b == 8);
    CHECK(r65[1].a == 7);
    CHECK(r65[1].b == 4);
    CHECK(all_two_squares(21).empty());
}

TEST_CASE("cornacchia is the unique representation for primes below 10^5")
{
    for (i64 p = 5; p < 100000; p += 4) {
        if (!is_prime(static_cast<u64>(p)))
            continue;
        auto r = cornacchia_prime(p);
        CHECK(r.a % 2 == 1);
        CHECK(r.b % 2 == 0);
        CHECK(r.a > 0);
        CHECK(r.b > 0);
        CHECK(r.a * r.a + r.b * r.b == p);
        if (p < 20000) { // exhaustive uniqueness at oracle scale
            auto all = all_two_squares(p);
            REQUIRE(all.size() == 1);
            CHECK(all[0].a == r.a);
            CHECK(all[0].b == r.b);
        }
    }
}

TEST_CASE("composite representation is primitive and canonical")
{
    for (i64 m = 5; m < 5000; m += 2) {
        if (!is_four_one_modulus(m) || m == 1)
            continue;
        auto r = two_squares_composite(m);
        CHECK(r.a * r.a + r.b * r.b == m);
        CHECK(r.a % 2 == 1);
        CHECK(r.b % 2 == 0);
        CHECK(std::gcd(r.a, r.b) == 1);
        bool found = false;
        for (const auto& s : all_two_squares(m))
            if (s.a == r.a && s.b == r.b)
                found = true;
        CHECK(found);
    }
}
