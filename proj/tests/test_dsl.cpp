#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apery/certlib.hpp"
#include "apery/dsl.hpp"

using namespace apery;
using namespace apery::certlib;

TEST_CASE("operator expressions parse to the expected algebra") {
    AnnRec rec = parse_operator("Sn^2 - 2*Sn + 1");
    CHECK(rec.op.univariate_in_n());
    CHECK(rec.op.order_in_n() == 2);
    CHECK(rec.op.coeff_at(2, 0) == RatFun(Rat(1)));
    CHECK(rec.op.coeff_at(1, 0) == RatFun(Rat(-2)));
    CHECK(rec.op.coeff_at(0, 0) == RatFun(Rat(1)));
    CHECK(rec.op == (ShiftOp::monomial(1, 0) - ShiftOp::identity()).pow(2));
}

TEST_CASE("coefficients multiply shifts non-commutatively as written") {
    // In the source text, Sn*n means the composition Sn . n = (n+1) Sn.
    AnnRec rec = parse_operator("Sn*n - (n+1)*Sn");
    CHECK(rec.op.is_zero());
    AnnRec rec2 = parse_operator("(n^2+1)/(n-3) * Sk");
    CHECK(rec2.op.coeff_at(0, 1) == rf("(n^2+1)/(n-3)"));
}

TEST_CASE("full certificate file with guards") {
    std::string text =
        "# comment line\n"
        "pascal: Sn*Sk - Sk - 1 where k+1 <> 0, n-k <> 0\n"
        "\n"
        "growth: Sn - 2 where 0 <= n <= 100, k in 0..5\n";
    auto recs = parse_certificates(text);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].name == "pascal");
    CHECK(recs[0].guard.nonvanishing.size() == 2);
    CHECK(recs[0].guard.excludes(4, 4));
    CHECK(recs[0].guard.satisfied_at(4, 2));
    CHECK(recs[1].name == "growth");
    CHECK(recs[1].guard.satisfied_at(50, 3));
    CHECK(recs[1].guard.excludes(101, 3));
    CHECK(recs[1].guard.excludes(50, 6));
}

TEST_CASE("shipped operator text equals the built-in operator") {
    AnnRec rec = parse_operator(
        "(n+2)^3*Sn^2 - (2*n+3)*(17*n^2+51*n+39)*Sn + (n+1)^3");
    CHECK(rec.op == apery_operator());
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_certificates("ok: Sn - 1\nbad: Sn +");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col > 0);
    }
    CHECK_THROWS_AS(parse_operator("Sn^(n)"), ParseError);
    CHECK_THROWS_AS(parse_operator("Sn^-1"), ParseError);
    CHECK_THROWS_AS(parse_operator("1/(Sn+1)"), ParseError);
    CHECK_THROWS_AS(parse_operator("n +* 2"), ParseError);
}

TEST_CASE("rendering round-trips through the parser") {
    auto recs = parse_certificates(
        "pascal: Sn*Sk - Sk - 1 where k+1 <> 0, n-k <> 0\n");
    std::string text = render_stanza(recs[0]);
    auto again = parse_certificates(text);
    REQUIRE(again.size() == 1);
    CHECK(again[0].name == recs[0].name);
    CHECK(again[0].op == recs[0].op);
    CHECK(again[0].guard.nonvanishing.size() == recs[0].guard.nonvanishing.size());
}
