#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apery/sequences.hpp"

#include <thread>
#include <vector>

using namespace apery;

TEST_CASE("partial sums of 1/m^3") {
    CHECK(seq::z(0) == 0);
    CHECK(seq::z(1) == 1);
    CHECK(seq::z(2) == Rat(9, 8));
    CHECK(seq::z(3) == Rat(251, 216));
    CHECK(seq::z(4) == Rat(2035, 1728));
}

TEST_CASE("lambda summand") {
    CHECK(seq::lambda(0, 0) == 1);
    CHECK(seq::lambda(2, 1) == 36);
    CHECK(seq::lambda(3, 3) == 400);
    CHECK(seq::lambda(3, 4) == 0);   // outside the support
    CHECK(seq::lambda(3, -1) == 0);
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k) {
            Int c = binomial(n, k) * binomial(n + k, k);
            CHECK(seq::lambda(n, k) == c * c);
        }
}

TEST_CASE("a-sequence closed form") {
    CHECK(seq::a(0) == 1);
    CHECK(seq::a(1) == 5);
    CHECK(seq::a(2) == 73);
    CHECK(seq::a(3) == 1445);
    CHECK(seq::a(4) == 33001);
    for (long n = 0; n <= 25; ++n) {
        Int total = 0;
        for (long k = 0; k <= n; ++k) total += seq::lambda(n, k);
        CHECK(seq::a(n) == total);
    }
}

TEST_CASE("b-sequence closed form") {
    CHECK(seq::b(0) == 0);
    CHECK(seq::b(1) == 6);
    CHECK(seq::b(2) == Rat(351, 4));
    CHECK(seq::b(3) == Rat(62531, 36));
    // b_n = sum_k lambda(n,k) (z_n + s(n,k)).
    for (long n = 0; n <= 20; ++n) {
        Rat total = 0;
        for (long k = 0; k <= n; ++k) total += seq::v(n, k);
        CHECK(seq::b(n) == total);
    }
}

TEST_CASE("correction terms d and their prefix sums") {
    CHECK(seq::d(1, 1) == Rat(1, 4));
    CHECK(seq::s(3, 0) == 0);
    for (long n = 1; n <= 12; ++n)
        for (long k = 1; k <= n; ++k) {
            Rat acc = 0;
            for (long m = 1; m <= k; ++m) acc += seq::d(n, m);
            CHECK(seq::s(n, k) == acc);
        }
}

TEST_CASE("telescoping kernels U and V") {
    CHECK(seq::U(1, 0) == -108);
    CHECK(seq::U(1, 1) == -288);
    CHECK(seq::V(1, 0) == -108);
    // U(n,k) = 4(2n+1)(k(2k+1) - (2n+1)^2) lambda(n,k).
    for (long n = 1; n <= 10; ++n)
        for (long k = 0; k <= n; ++k) {
            Int t = 2 * n + 1;
            CHECK(seq::U(n, k) ==
                  4 * t * (Int(k) * (2 * k + 1) - t * t) * seq::lambda(n, k));
        }
}

TEST_CASE("Casoratian has the closed form 6/(n+1)^3") {
    CHECK(seq::casoratian_w(0) == 6);
    CHECK(seq::casoratian_w(1) == Rat(3, 4));
    CHECK(seq::casoratian_w(2) == Rat(2, 9));
    CHECK(seq::casoratian_w(3) == Rat(3, 32));
    for (long n = 0; n <= 60; ++n)
        CHECK(seq::casoratian_w(n) == Rat(6, int_pow(Int(n) + 1, 3)));
}

TEST_CASE("growth ratio rho") {
    CHECK(seq::rho(0) == 5);
    CHECK(seq::rho(1) == Rat(73, 5));
    for (long n = 2; n <= 60; ++n) CHECK(seq::rho(n) > seq::rho(n - 1));
}

TEST_CASE("memoization is safe under concurrent access") {
    std::vector<std::thread> threads;
    std::vector<Rat> results(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([t, &results] {
            Rat acc = 0;
            for (long n = 0; n <= 40; ++n) acc += seq::b(n) + Rat(seq::a(n)) + seq::z(n);
            results[static_cast<std::size_t>(t)] = acc;
        });
    for (auto& th : threads) th.join();
    for (int t = 1; t < 8; ++t) CHECK(results[static_cast<std::size_t>(t)] == results[0]);
}
