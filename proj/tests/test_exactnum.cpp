#include "gencert/exactnum.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gencert;

TEST_CASE("primality agrees with a sieve below 200000") {
    const auto p = oracle::sieve(200000);
    for (unsigned long n = 0; n <= 200000; ++n) REQUIRE(is_prime(ExactInt(n)) == p[n]);
}

TEST_CASE("strong pseudoprimes are rejected and large primes accepted") {
    for (const char* c : {"2047", "3215031751", "3825123056546413051", "318665857834031151167461",
                          "3317044064679887385961981"}) {
        CHECK_FALSE(is_prime(ExactInt(c)));
    }
    CHECK(is_prime(ipow(2, 89) - 1));
    CHECK(is_prime(ipow(2, 127) - 1));
    CHECK(primality_grade(ipow(2, 61) - 1) == PrimalityGrade::proven);
    CHECK(primality_grade(ipow(2, 127) - 1) == PrimalityGrade::bpsw);
}

TEST_CASE("factorization recomposes and every factor is prime") {
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 10ul}) {
        for (unsigned long e = 1; e <= 30; ++e) {
            const ExactInt n = ipow(q, e) - 1;
            const auto f = factorize(n);
            REQUIRE(f.recompose() == n);
            for (const auto& [r, k] : f.primes) REQUIRE(is_prime(r));
        }
    }
    CHECK(factorize(1).primes.empty());
    const auto f = factorize(ExactInt("1000000016000000063"));  // 1000000007 * 1000000009
    CHECK(f.primes.size() == 2);
}

TEST_CASE("multiplicative order matches repeated multiplication") {
    const auto p = oracle::sieve(400);
    for (unsigned long r = 3; r <= 400; ++r) {
        if (!p[r]) continue;
        for (unsigned long q = 2; q < 60; ++q) {
            if (q % r == 0) continue;
            REQUIRE(mult_order(q, r) == oracle::order_naive(q, r));
        }
    }
}

TEST_CASE("primitive prime divisors against the primitive-part oracle") {
    for (unsigned long q = 2; q <= 50; ++q) {
        if (!oracle::is_prime_power_naive(q)) continue;
        for (unsigned long e = 2; e <= 30; ++e) {
            const auto ppd = primitive_prime_divisors(q, e);
            ExactInt rest = oracle::primitive_part(q, e);
            for (const auto& r : ppd) {
                REQUIRE(rest % r == 0);
                REQUIRE(r % e == 1);
                while (rest % r == 0) rest /= r;
            }
            REQUIRE(rest == 1);
            REQUIRE(ppd.empty() == is_zsigmondy_exception(q, e));
        }
    }
}

TEST_CASE("Zsigmondy exceptions") {
    CHECK(is_zsigmondy_exception(2, 6));
    CHECK(is_zsigmondy_exception(3, 2));
    CHECK(is_zsigmondy_exception(7, 2));
    CHECK_FALSE(is_zsigmondy_exception(5, 2));
    CHECK_FALSE(is_zsigmondy_exception(2, 7));
    CHECK(*smallest_primitive_prime(2, 14) == 43);
    CHECK(*smallest_primitive_prime(2, 12) == 13);
    CHECK_FALSE(smallest_primitive_prime(2, 6).has_value());
}

TEST_CASE("cyclotomic values divide q^e - 1") {
    for (unsigned long e = 1; e <= 30; ++e) {
        for (unsigned long q : {2ul, 3ul, 4ul, 9ul}) {
            REQUIRE((ipow(q, e) - 1) % cyclotomic_value(e, q) == 0);
        }
    }
    CHECK(cyclotomic_value(6, 2) == 3);
    CHECK(cyclotomic_value(12, 2) == 13);
}

TEST_CASE("prime powers") {
    for (unsigned long q = 0; q <= 2000; ++q) {
        REQUIRE(as_prime_power(ExactInt(q)).has_value() == oracle::is_prime_power_naive(q));
    }
    const auto pp = as_prime_power(ExactInt(1024));
    CHECK(pp->p == 2);
    CHECK(pp->a == 10);
    CHECK(exact_log2(ExactInt(1024)) == 10ul);
    CHECK_FALSE(exact_log2(ExactInt(12)).has_value());
}

TEST_CASE("rational helpers") {
    CHECK(floor_rat(make_rat(-7, 2)) == -4);
    CHECK(ceil_rat(make_rat(-7, 2)) == -3);
    CHECK(ceil_rat(make_rat(8, 2)) == 4);
    CHECK(to_fraction_string(ExactRat(3)) == "3/1");
    CHECK(to_fraction_string(make_rat(6, 4)) == "3/2");
    CHECK(to_string(ExactRat(3)) == "3");
    CHECK_THROWS_AS(make_rat(1, 0), DomainError);
}
