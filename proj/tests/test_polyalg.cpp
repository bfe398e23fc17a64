#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apery/polyalg.hpp"

using namespace apery;

namespace {
MultiPoly var(const std::string& v) { return MultiPoly::variable(v); }
MultiPoly cst(long c) { return MultiPoly::constant(Rat(c)); }
}  // namespace

TEST_CASE("polynomial ring basics") {
    MultiPoly n = var("n"), k = var("k");
    MultiPoly p = (n + k) * (n - k);
    CHECK(p == n * n - k * k);
    CHECK(p.total_degree() == 2);
    CHECK(p.degree_in("n") == 2);
    CHECK(p.degree_in("k") == 2);
    CHECK(p.degree_in("m") == 0);
    CHECK((p - p).is_zero());
    CHECK((n * n + cst(1)).eval({{"n", Rat(3)}}) == 10);
    CHECK(cst(7).is_constant());
    CHECK(cst(7).constant_value() == 7);
}

TEST_CASE("substitution and shifting") {
    MultiPoly n = var("n");
    MultiPoly p = n * n + cst(1);
    CHECK(p.shifted("n", 1) == n * n + cst(2) * n + cst(2));
    CHECK(p.shifted("n", -1) == n * n - cst(2) * n + cst(2));
    CHECK(p.subst("n", var("k") + cst(3)).eval({{"k", Rat(0)}}) == 10);
    // Shifting is an action: shift by a then b equals shift by a+b.
    MultiPoly q = (n + var("k")).pow(3) - n * var("k");
    CHECK(q.shifted("n", 2).shifted("n", -5) == q.shifted("n", -3));
}

TEST_CASE("exact division") {
    MultiPoly n = var("n"), k = var("k");
    CHECK(*divide_exact((n + cst(1)) * (n + cst(1)), n + cst(1)) == n + cst(1));
    CHECK(*divide_exact((n - k) * (n + k), n - k) == n + k);
    CHECK_FALSE(divide_exact(n + cst(1), n).has_value());
    CHECK_FALSE(divide_exact(n * n + cst(1), n + cst(1)).has_value());
    // Dividing by a constant always succeeds.
    CHECK(*divide_exact(n.pow(4) + cst(2) * n.pow(3) + n * n - cst(1), cst(1)) ==
          n.pow(4) + cst(2) * n.pow(3) + n * n - cst(1));
    CHECK(*divide_exact(cst(6) * n, cst(2)) == cst(3) * n);
    CHECK_THROWS_AS(divide_exact(n, cst(0)), std::domain_error);
}

TEST_CASE("multivariate gcd") {
    MultiPoly n = var("n"), k = var("k");
    CHECK(poly_gcd((n - k).pow(2) * (n + k + cst(1)).pow(2), (k + cst(1)).pow(4)) ==
          cst(1));
    CHECK(poly_gcd((n - k) * (k + cst(1)).pow(2), (k + cst(1)) * (n + k)) ==
          k + cst(1));
    CHECK(poly_gcd(cst(12) * n, cst(18) * n * n) == n);
    CHECK(poly_gcd(MultiPoly(), n + cst(1)) == n + cst(1));
    // Result is normalized: positive leading coefficient, primitive.
    CHECK(poly_gcd(cst(-2) * (n + cst(1)), cst(-4) * (n + cst(1)).pow(2)) ==
          n + cst(1));
}

TEST_CASE("rational function normalization") {
    RatFun n = RatFun::variable("n"), k = RatFun::variable("k");
    RatFun r = (n * n - k * k) / (n - k);
    CHECK(r == n + k);
    CHECK(r.is_polynomial());
    RatFun half = RatFun(Rat(1, 2)) * (n + RatFun(Rat(1)));
    CHECK(half.den().is_constant());  // scalar lives in the numerator
    CHECK((r - r).is_zero());
    CHECK(ratfun_equal_zero((n / k) * (k / n) - RatFun(Rat(1))));
    CHECK_THROWS_AS(n / RatFun(Rat(0)), std::domain_error);
}

TEST_CASE("rational function evaluation and singular points") {
    RatFun n = RatFun::variable("n");
    RatFun r = RatFun(Rat(1)) / (n - RatFun(Rat(3)));
    CHECK(r.eval({{"n", Rat(4)}}) == 1);
    CHECK_THROWS_AS(r.eval({{"n", Rat(3)}}), SingularPoint);
    CHECK(r.shifted("n", 1).eval({{"n", Rat(3)}}) == 1);
    CHECK(r.pow(-2) == (n - RatFun(Rat(3))).pow(2));
}

TEST_CASE("Newton expansion matches multinomial coefficients") {
    for (long l = 1; l <= 3; ++l) {
        std::vector<std::string> vars;
        for (long i = 0; i < l; ++i) vars.push_back("x" + std::to_string(i));
        for (long n = 0; n <= 6; ++n) {
            MultiPoly e = newton_expand(vars, n);
            // Each coefficient equals multinomial(exponents), and the
            // coefficients sum to l^n.
            Rat total = 0;
            for (const auto& [exps, c] : e.terms()) {
                std::vector<long> parts(exps.begin(), exps.end());
                while (parts.size() < static_cast<std::size_t>(l)) parts.push_back(0);
                CHECK(c == Rat(multinomial(parts)));
                total += c;
            }
            if (n == 0) CHECK(e == cst(1));
            CHECK(total == Rat(int_pow(Int(l), static_cast<unsigned long>(n))));
        }
    }
}

TEST_CASE("string rendering round-trips basic shapes") {
    MultiPoly n = var("n");
    CHECK(cst(0).str() == "0");
    CHECK((n + cst(1)).str().find("n") != std::string::npos);
    RatFun r = RatFun::variable("n") / (RatFun::variable("n") + RatFun(Rat(1)));
    CHECK(r.str() == "n/(n + 1)");
}
