#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apery/hanson.hpp"

using namespace apery;
using namespace apery::hanson;

TEST_CASE("alpha sequence") {
    CHECK(alpha(1) == 2);
    CHECK(alpha(2) == 3);
    CHECK(alpha(3) == 7);
    CHECK(alpha(4) == 43);
    CHECK(alpha(5) == 1807);
    CHECK(alpha(6) == Int("3263443"));
    CHECK_THROWS_AS(alpha(0), std::domain_error);
    // Quadratic recurrence agrees with alpha_{k+1} = alpha_1...alpha_k + 1.
    for (long k = 1; k <= 8; ++k) CHECK(alpha_product_identity_check(k));
}

TEST_CASE("generalized multinomial C(n,k)") {
    CHECK(hanson_C(3, 2) == 6);
    CHECK(hanson_C(3) == 6);
    CHECK(hanson_C(4) == 12);
    CHECK(hanson_C(6) == 60);
    // Stabilization: C(n,k) is constant once alpha_k >= n.
    for (long n = 1; n <= 40; ++n) {
        long k = stable_k(n);
        CHECK(alpha(k) >= n);
        CHECK(hanson_C(n, k) == hanson_C(n, k + 1));
        CHECK(hanson_C(n, k) == hanson_C(n, k + 2));
    }
    // C(n,k) is always a positive integer (the defining multinomial).
    for (long n = 1; n <= 40; ++n) CHECK(hanson_C(n) > 0);
}

TEST_CASE("sum of reciprocals of alpha") {
    for (long k = 1; k <= 6; ++k) CHECK(suminv_identity_check(k));
    // Spot values: 1/2 + 1/3 = 5/6, plus 1/7 gives 41/42.
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(alpha(3) - 2, alpha(3) - 1));
    CHECK(Rat(1, 2) + Rat(1, 3) + Rat(1, 7) == Rat(alpha(4) - 2, alpha(4) - 1));
}

TEST_CASE("floor division identity") {
    CHECK(floor_div_identity_check(Rat(7, 2), 3));
    CHECK(floor_div_identity_check(Rat(22, 7), 2));
    for (Int j = 0; j <= 120; ++j)
        for (long m = 1; m <= 6; ++m) CHECK(floor_div_identity_check(Rat(j, 7), m));
}

TEST_CASE("valuation bound shows lcm(1..n) divides into C(n,k)") {
    CHECK(beta_valuation_check(4, 3, 2));
    CHECK(beta_valuation_check(6, 3, 5));
    CHECK(beta_valuation_check(1, 1, 2));
    for (long n = 1; n <= 120; ++n) {
        long k = stable_k(n);
        for (long p : primes_upto(n)) CHECK(beta_valuation_check(n, k, p));
        CHECK(lcm_upto(n) <= hanson_C(n));
        CHECK(hanson_C(n) % lcm_upto(n) == 0);
    }
}

TEST_CASE("analytic inequality with integer exponents") {
    CHECK(analysis_ineq_check(5, 1));
    CHECK(analysis_ineq_check(7, 2));
    CHECK(analysis_ineq_check(2, 1));  // n = alpha_i boundary
    for (long n = 2; n <= 80; ++n)
        for (long i = 1; alpha(i) <= n; ++i) CHECK(analysis_ineq_check(n, i));
    CHECK_THROWS_AS(analysis_ineq_check(2, 2), std::domain_error);
}

TEST_CASE("(1 + 1/x)^x < 10 for positive rational x") {
    CHECK(bounded_power_check(Rat(1)));
    CHECK(bounded_power_check(Rat(5, 2)));
    CHECK(bounded_power_check(Rat(100)));
    for (Int j = 1; j <= 100; ++j) CHECK(bounded_power_check(Rat(j, 4)));
    CHECK_THROWS_AS(bounded_power_check(Rat(0)), std::domain_error);
}

TEST_CASE("C(n,k) bounded by the power quotient") {
    CHECK(cnk_bound_check(4, 2));
    CHECK(cnk_bound_check(6, 3));
    CHECK(cnk_bound_check(2, 1));
    for (long n = 2; n <= 80; ++n) CHECK(cnk_bound_check(n, stable_k(n)));
}

TEST_CASE("k grows like log log n") {
    CHECK(k_loglog_check(7, 3));
    CHECK(k_loglog_check(43, 4));
    CHECK(k_loglog_check(100, 3));
    for (long k = 3; k <= 8; ++k) CHECK(alpha_gap_check(k));
    CHECK_THROWS_AS(k_loglog_check(5, 3), std::domain_error);
}

TEST_CASE("the w chain pins the constant below 149/50") {
    CHECK(w_upper_bound() == Rat(149, 50));
    CHECK(w_bound_check());
    // The aggregate pivot is exactly the published rational.
    Rat pivot(Int("5949909309448377"), Int(2) * int_pow(Int(10), 15));
    CHECK(pivot < Rat(149, 50));
    CHECK(pivot < Rat(298, 100));
}

TEST_CASE("sum (alpha_i - 1)/alpha_i telescopes") {
    for (long k = 1; k <= 6; ++k) CHECK(obs1_check(k));
    CHECK(Rat(1, 2) + Rat(2, 3) + Rat(6, 7) + Rat(42, 43) == Rat(3) + Rat(1, 1806));
}

TEST_CASE("main bound and the lcm growth report") {
    CHECK(main_bound_check(4));
    CHECK(main_bound_check(7));
    CHECK(main_bound_check(100));
    LcmGrowthReport rep = lcm_bigO_3n_report(100);
    CHECK(rep.lcm_le_C);
    CHECK(rep.main_bound_ok);
    CHECK(rep.max_ratio == Rat(20, 81));  // lcm(1..5)/3^5 = 60/243
    CHECK(rep.max_ratio_n == 5);
    CHECK(rep.max_ratio < 1);
}

TEST_CASE("suite runner aggregates every check") {
    SuiteReport rep = run_suite(60, 120);
    CHECK(rep.all_ok());
    CHECK(rep.checks.size() == 12);
    bool seen_main = false;
    for (const auto& c : rep.checks)
        if (c.name == "main_bound") seen_main = true;
    CHECK(seen_main);
}
