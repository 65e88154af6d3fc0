#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "falsetheta/arith.hpp"
#include "oracles.hpp"

using namespace falsetheta;
using namespace falsetheta::arith;

TEST_CASE("gcd basics") {
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(1, 7) == 1);
    CHECK(gcd(1, 1000003) == 1);
    CHECK(gcd(35, 64) == 1);
    CHECK(gcd(0, 0) == 0);
}

TEST_CASE("negative modular inverse") {
    CHECK(neg_mod_inverse(0, 1) == 0);
    CHECK(neg_mod_inverse(1, 5) == 4);
    CHECK(neg_mod_inverse(2, 5) == 2);
    CHECK_THROWS_AS(neg_mod_inverse(2, 4), std::domain_error);

    for (long long k = 1; k <= 200; ++k)
        for (long long h = 0; h < k; ++h) {
            if (gcd(h, k) != 1) continue;
            long long hp = neg_mod_inverse(h, k);
            REQUIRE(hp >= 0);
            REQUIRE(hp < k);
            CHECK((h * hp) % k == (k == 1 ? 0 : k - 1));
        }
}

TEST_CASE("lifted negative modular inverse") {
    CHECK(neg_mod_inverse_lifted(1, 2, 1) == 1);
    CHECK(neg_mod_inverse_lifted(1, 2, 3) == 5);
    CHECK(neg_mod_inverse_lifted(5, 3, 4) == 7);
    CHECK_THROWS_AS(neg_mod_inverse_lifted(2, 3, 2), std::domain_error);

    for (long long k = 1; k <= 30; ++k)
        for (long long x = 1; x <= 6; ++x)
            for (long long h = 0; h < k; ++h) {
                if (gcd(h, x * k) != 1) continue;
                long long lifted = neg_mod_inverse_lifted(h, k, x);
                CHECK((h * lifted) % (x * k) == (x * k == 1 ? 0 : x * k - 1));
                CHECK(lifted % k == neg_mod_inverse(h, k));
            }
}

TEST_CASE("kronecker symbol") {
    CHECK(kronecker(1, 1) == 1);
    CHECK(kronecker(2, 7) == 1);
    CHECK(kronecker(3, 5) == -1);
    CHECK(kronecker(0, 1) == 1);
    CHECK(kronecker(0, 3) == 0);
    CHECK(kronecker(5, 0) == 0);
    CHECK(kronecker(-1, 0) == 1);

    SUBCASE("agrees with gmp") {
        for (long long a = -100; a <= 100; ++a)
            for (long long n = -100; n <= 100; ++n) {
                BigInt za(static_cast<long>(a)), zn(static_cast<long>(n));
                CHECK(kronecker(a, n) == mpz_kronecker(za.get_mpz_t(), zn.get_mpz_t()));
            }
    }
    SUBCASE("completely multiplicative in each argument (nonzero factors)") {
        for (long long a = -20; a <= 20; ++a)
            for (long long b = -20; b <= 20; ++b) {
                if (a == 0 || b == 0) continue;
                for (long long n = -25; n <= 25; ++n) {
                    CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
                    CHECK(kronecker(n, a * b) == kronecker(n, a) * kronecker(n, b));
                }
            }
    }
}

TEST_CASE("dedekind sums") {
    CHECK(dedekind_sum(1, 1) == 0);
    CHECK(dedekind_sum(1, 2) == 0);
    CHECK(dedekind_sum(1, 3) == make_rational(1, 18));
    CHECK_THROWS_AS(dedekind_sum(2, 4), std::domain_error);

    SUBCASE("reciprocity route matches direct summation") {
        for (long long k = 1; k <= 100; ++k)
            for (long long h = 0; h < k; ++h) {
                if (gcd(h, k) != 1) continue;
                CHECK(dedekind_sum(h, k) == test_oracles::dedekind_direct(h, k));
            }
    }
    SUBCASE("periodic and odd in h") {
        CHECK(dedekind_sum(-2, 7) == -dedekind_sum(2, 7));
        CHECK(dedekind_sum(5 + 7, 7) == dedekind_sum(5, 7));
    }
}

TEST_CASE("epsilon_m") {
    CHECK(epsilon_m(1) == Complex(1.0, 0.0));
    CHECK(epsilon_m(3) == Complex(0.0, 1.0));
    CHECK(epsilon_m(5) == Complex(1.0, 0.0));
    CHECK_THROWS_AS(epsilon_m(4), std::domain_error);
}

TEST_CASE("partition numbers") {
    CHECK(partition(0) == 1);
    CHECK(partition(5) == 7);
    CHECK(partition(18) == 385);
    CHECK_THROWS_AS(partition(-1), std::domain_error);

    SUBCASE("pentagonal recurrence matches restricted counting") {
        for (long long n = 0; n <= 40; ++n)
            CHECK(partition(n) == test_oracles::partition_count(n));
    }
    SUBCASE("big values stay exact") {
        CHECK(partition(100) == BigInt("190569292"));
        CHECK(partition(200) == BigInt("3972999029388"));
    }
}
