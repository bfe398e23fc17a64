#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apery/numkit.hpp"

using namespace apery;

TEST_CASE("integer and rational powers") {
    CHECK(int_pow(Int(2), 10) == 1024);
    CHECK(int_pow(Int(-3), 3) == -27);
    CHECK(int_pow(Int(7), 0) == 1);
    CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
    CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(rat_pow(Rat(5), 0) == 1);
    CHECK_THROWS_AS(rat_pow(Rat(0), -1), std::domain_error);
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int("2432902008176640000"));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    // Upper index may be negative: C(-1, k) = (-1)^k.
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(-1, 1) == -1);
    CHECK(binomial(-1, 2) == 1);
    CHECK(binomial(-4, 2) == 10);
}

TEST_CASE("Pascal rule on a grid including negative upper index") {
    for (long n = -6; n <= 12; ++n)
        for (long k = 0; k <= 12; ++k)
            CHECK(binomial(n + 1, k + 1) == binomial(n, k) + binomial(n, k + 1));
}

TEST_CASE("multinomial") {
    CHECK(multinomial({2, 1}) == 3);
    CHECK(multinomial({3, 2, 1}) == 60);
    CHECK(multinomial({0, 0}) == 1);
    CHECK(multinomial({1, 1, 1, 1}) == 24);
}

TEST_CASE("primes and valuations") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(primes_upto(20) == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(p_adic_val(2, Int(48)) == 4);
    CHECK(p_adic_val(3, Int(48)) == 1);
    CHECK(p_adic_val(5, Int(48)) == 0);
}

TEST_CASE("truncated logarithm") {
    CHECK(trunc_log(2, Int(1)) == 0);
    CHECK(trunc_log(2, Int(8)) == 3);
    CHECK(trunc_log(2, Int(9)) == 3);
    CHECK(trunc_log(10, Int(999)) == 2);
    CHECK(trunc_log(10, Int(1000)) == 3);
    CHECK_THROWS_AS(trunc_log(1, Int(5)), std::domain_error);
    CHECK_THROWS_AS(trunc_log(2, Int(0)), std::domain_error);
}

TEST_CASE("truncated Legendre valuation of n!") {
    // val_factorial(p, n, j) = sum_{i=1}^{j} floor(n / p^i), valid for
    // n < p^{j+1}; matches the direct valuation of n!.
    CHECK(val_factorial(2, 10, 3) == 8);
    CHECK(val_factorial(3, 10, 2) == 4);
    CHECK(val_factorial(5, 10, 1) == 2);
    for (long n = 1; n <= 60; ++n)
        for (long p : {2L, 3L, 5L, 7L}) {
            long j = trunc_log(p, Int(n));
            CHECK(val_factorial(p, n, j) == p_adic_val(p, factorial(n)));
        }
    // The truncation precondition n < p^{j+1} is enforced.
    CHECK_THROWS_AS(val_factorial(2, 8, 2), std::domain_error);
}

TEST_CASE("lcm of initial segments") {
    CHECK(lcm_upto(1) == 1);
    CHECK(lcm_upto(2) == 2);
    CHECK(lcm_upto(3) == 6);
    CHECK(lcm_upto(4) == 12);
    CHECK(lcm_upto(5) == 60);
    CHECK(lcm_upto(6) == 60);
    CHECK(lcm_upto(7) == 420);
    CHECK(lcm_upto(8) == 840);
    CHECK(lcm_upto(9) == 2520);
    CHECK(lcm_upto(10) == 2520);
    // lcm(1..n) = prod_{p <= n} p^{floor(log_p n)}.
    for (long n = 1; n <= 100; ++n) {
        Int prod = 1;
        for (long p : primes_upto(n)) prod *= int_pow(Int(p), static_cast<unsigned long>(trunc_log(p, Int(n))));
        CHECK(lcm_upto(n) == prod);
    }
}

TEST_CASE("integer square root and rational floor/ceil") {
    CHECK(int_sqrt_floor(Int(0)) == 0);
    CHECK(int_sqrt_floor(Int(15)) == 3);
    CHECK(int_sqrt_floor(Int(16)) == 4);
    CHECK(int_sqrt_floor(Int("1000000000000000000000000")) == Int("1000000000000"));
    CHECK(rat_floor(Rat(7, 2)) == 3);
    CHECK(rat_floor(Rat(-7, 2)) == -4);
    CHECK(rat_ceil(Rat(7, 2)) == 4);
    CHECK(rat_ceil(Rat(-7, 2)) == -3);
    CHECK(rat_floor(Rat(6)) == 6);
    CHECK(rat_ceil(Rat(6)) == 6);
}
