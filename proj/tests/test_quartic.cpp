#include "rqr/oracles.hpp"
#include "rqr/quartic.hpp"

#include <doctest.h>

#include <random>

using namespace rqr;

TEST_CASE("quartic_symbol_prime fixtures")
{
    CHECK(quartic_symbol_prime(1, 13) == 1);
    CHECK(quartic_symbol_prime(4, 5) == -1);
    CHECK(quartic_symbol_prime(5, 29) == -1);
    CHECK_THROWS_AS(quartic_symbol_prime(2, 7), std::invalid_argument); // 7 = 3 mod 4
    CHECK_THROWS_AS(quartic_symbol_prime(2, 5), std::domain_error);     // (2/5) = -1
}

TEST_CASE("quartic_symbol_two fixtures")
{
    CHECK(quartic_symbol_two(17) == 1);
    CHECK(quartic_symbol_two(41) == -1);
    CHECK(quartic_symbol_two(73) == -1);
    CHECK_THROWS_AS(quartic_symbol_two(13), std::invalid_argument);
}

TEST_CASE("quartic_symbol_composite fixtures")
{
    CHECK(quartic_symbol_composite(7, 1) == 1);
    CHECK(quartic_symbol_composite(61, 65) == 1);
    CHECK(quartic_symbol_composite(29, 5) == -1);
    CHECK_THROWS_AS(quartic_symbol_composite(2, 21), std::invalid_argument); // 3 | 21
    CHECK_THROWS_AS(quartic_symbol_composite(2, 4), std::invalid_argument);  // 2-part not 8
    CHECK_THROWS_AS(quartic_symbol_composite(3, 8), std::invalid_argument);  // 3 != 1 mod 8
}

TEST_CASE("quartic symbol agrees with fourth-power scan for p < 2000")
{
    for (i64 p = 5; p < 2000; p += 4) {
        if (!is_prime(static_cast<u64>(p)))
            continue;
        // mark fourth powers once per prime
        std::vector<char> fourth(p, 0);
        for (i64 x = 1; x < p; ++x) {
            i64 x2 = static_cast<i64>(mul_mod(u64(x), u64(x), u64(p)));
            fourth[mul_mod(u64(x2), u64(x2), u64(p))] = 1;
        }
        for (i64 a = 1; a < p; ++a) {
            if (jacobi(a, p) != 1)
                continue;
            CHECK((quartic_symbol_prime(a, p) == 1) == bool(fourth[a]));
        }
    }
}

TEST_CASE("multiplicativity in the numerator")
{
    std::mt19937_64 rng(777);
    for (i64 p : {13, 17, 29, 97, 1009}) {
        int done = 0;
        while (done < 200) {
            i64 a = 1 + static_cast<i64>(rng() % (p - 1));
            i64 b = 1 + static_cast<i64>(rng() % (p - 1));
            if (jacobi(a, p) != 1 || jacobi(b, p) != 1)
                continue;
            i64 ab = static_cast<i64>(mul_mod(u64(a), u64(b), u64(p)));
            CHECK(quartic_symbol_prime(ab, p) ==
                  quartic_symbol_prime(a, p) * quartic_symbol_prime(b, p));
            ++done;
        }
    }
}

TEST_CASE("multiplicativity in the modulus")
{
    // (61/5)_4 (61/13)_4 = (61/65)_4
    CHECK(quartic_symbol_composite(61, 65) ==
          quartic_symbol_composite(61, 5) * quartic_symbol_composite(61, 13));
    // even part: a = 1 mod 8 and QR mod both factors
    for (i64 a : {1009, 2609, 3121}) {
        if (jacobi(a, 5) == 1 && a % 8 == 1)
            CHECK(quartic_symbol_composite(a, 40) ==
                  quartic_symbol_composite(a, 8) * quartic_symbol_composite(a, 5));
    }
}

TEST_CASE("fourth powers always map to +1")
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        i64 p = 5 + 4 * static_cast<i64>(rng() % 500);
        if (!is_prime(static_cast<u64>(p)))
            continue;
        i64 x = 1 + static_cast<i64>(rng() % (p - 1));
        i64 x2 = static_cast<i64>(mul_mod(u64(x), u64(x), u64(p)));
        i64 x4 = static_cast<i64>(mul_mod(u64(x2), u64(x2), u64(p)));
        CHECK(quartic_symbol_prime(x4, p) == 1);
    }
}

TEST_CASE("quartic_residue_bruteforce fixtures")
{
    CHECK(quartic_residue_bruteforce(16, 5));
    CHECK_FALSE(quartic_residue_bruteforce(4, 5));
    CHECK_FALSE(quartic_residue_bruteforce(29, 5));
}
