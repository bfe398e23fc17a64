#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apery/cauchy.hpp"

using namespace apery;

TEST_CASE("constant reals and enclosure predicates") {
    CauchyReal c = cauchy_const(Rat(3, 7));
    CHECK(c.term(5) == Rat(3, 7));
    CHECK(c.modulus(Rat(1, 1000)) == 0);
    Enclosure e{Rat(1), Rat(2)};
    CHECK(e.width() == 1);
    CHECK(e.contains(Rat(3, 2)));
    CHECK_FALSE(e.contains(Rat(5, 2)));
    CHECK(e.contains(Enclosure{Rat(5, 4), Rat(7, 4)}));
    CHECK(e.overlaps(Enclosure{Rat(2), Rat(3)}));
    CHECK_FALSE(e.overlaps(Enclosure{Rat(5, 2), Rat(3)}));
}

TEST_CASE("tail bound justifying the modulus of the 1/m^3 series") {
    // 1/m^3 <= (1/(m-1)^2 - 1/m^2)/2, so the tail beyond N is at most
    // 1/(2N^2).
    for (long m = 2; m <= 200; ++m) CHECK(tail_bound_step_check(m));
}

TEST_CASE("Cauchy representation of the series sum") {
    CauchyReal z3 = z3_cauchy();
    // modulus(1/8) is the least N with 1/(2N^2) <= 1/8, namely 2.
    CHECK(z3.modulus(Rat(1, 8)) == 2);
    CHECK(z3.term(2) == Rat(9, 8));
    // Beyond the modulus, any two terms stay within the tolerance.
    long N = z3.modulus(Rat(1, 100));
    for (long i = N; i <= N + 30; ++i) {
        Rat diff = z3.term(i + 25) - z3.term(i);
        if (diff < 0) diff = -diff;
        CHECK(diff <= Rat(1, 100));
    }
}

TEST_CASE("series tail enclosures are nested and shrink") {
    Enclosure prev = z_tail_enclosure(10);
    for (long N = 11; N <= 60; ++N) {
        Enclosure e = z_tail_enclosure(N);
        CHECK(prev.contains(e));
        CHECK(e.width() < prev.width());
        prev = e;
    }
}

TEST_CASE("error constant for the b/a approximation") {
    CHECK(error_constant_K() == 8);
    CHECK(error_constant_certificate());
}

TEST_CASE("b/a enclosures certify zeta(3)") {
    // b_2/a_2 = 351/4 / 73 = 351/292.
    CauchyReal x = b_over_a_cauchy();
    CHECK(x.term(2) == Rat(351, 292));
    Enclosure e2 = zeta3_enclosure(2);
    CHECK(e2.lo == Rat(351, 292));
    CHECK(e2.width() == Rat(8, Int(73) * 73));
    // Nested chain.
    Enclosure prev = e2;
    for (long n = 3; n <= 25; ++n) {
        Enclosure e = zeta3_enclosure(n);
        CHECK(prev.contains(e));
        prev = e;
    }
    // Consistency with the partial-sum route.
    Enclosure tail = z_tail_enclosure(100);
    for (long n = 2; n <= 25; ++n) CHECK(tail.overlaps(zeta3_enclosure(n)));
}

TEST_CASE("ordering of constructive reals") {
    LtVerdict lt = cauchy_lt(cauchy_const(Rat(1)), cauchy_const(Rat(2)));
    CHECK(lt.certified);
    LtVerdict z_lt = cauchy_lt(z3_cauchy(), cauchy_const(Rat(13, 10)));
    CHECK(z_lt.certified);
    LtVerdict lt2 = cauchy_lt(cauchy_const(Rat(6, 5)), z3_cauchy());
    CHECK(lt2.certified);
    // x < x can never be certified; the budget runs out instead.
    LtVerdict refl = cauchy_lt(z3_cauchy(), z3_cauchy(), 8);
    CHECK_FALSE(refl.certified);
}

TEST_CASE("digit extraction from enclosures") {
    CHECK(digits_from_enclosure(Enclosure{Rat(12020, 10000), Rat(12021, 10000)}, 3) ==
          std::string("1.20"));
    // Too wide to pin the digits.
    CHECK_FALSE(digits_from_enclosure(Enclosure{Rat(1), Rat(2)}, 3).has_value());
    CHECK(zeta3_digits(10) == "1.202056903");
    CHECK(zeta3_digits(20) == "1.2020569031595942853");
    // The same digits are pinned at any later index.
    long w = zeta3_digits_witness(20);
    CHECK(digits_from_enclosure(zeta3_enclosure(w + 8), 20) ==
          std::string("1.2020569031595942853"));
}
