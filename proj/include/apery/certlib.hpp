#pragma once

// Built-in terms, operators and identities: the Apery recurrence
// operator, the binomial and lambda hypergeometric terms, Pascal's
// guarded rule, the telescoping certificate for sum_k lambda and its
// V analogue. Tests and the CLI share these definitions.

#include "apery/dsl.hpp"
#include "apery/sequences.hpp"
#include "apery/telescope.hpp"

#include <map>
#include <string>

namespace apery {
namespace certlib {

// Rational-function literal, parsed with the certificate grammar.
inline RatFun rf(const std::string& text) {
    return dsl::Parser(text).parse_expression().constant_coeff();
}

inline MultiPoly poly(const std::string& text) {
    RatFun f = rf(text);
    return f.num() * (Rat(1) / f.den().constant_value());
}

// (n+2)^3 Sn^2 - (2n+3)(17n^2+51n+39) Sn + (n+1)^3.
inline const ShiftOp& apery_operator() {
    static const ShiftOp op =
        dsl::Parser("(n+2)^3*Sn^2 - (2*n+3)*(17*n^2+51*n+39)*Sn + (n+1)^3")
            .parse_expression();
    return op;
}

inline HyperTerm binomial_term() {
    HyperTerm t;
    t.name = "C";
    t.support = [](long n, long k) { return 0 <= k && k <= n; };
    t.base = 1;
    t.ratio_n = rf("(n+1)/(n+1-k)");
    t.ratio_k = rf("(n-k)/(k+1)");
    t.guard.nonvanishing = {poly("n+1-k"), poly("k+1")};
    return t;
}

inline HyperTerm lambda_term() {
    HyperTerm t;
    t.name = "lambda";
    t.support = [](long n, long k) { return 0 <= k && k <= n; };
    t.base = 1;
    t.ratio_n = rf("(n+k+1)^2/(n+1-k)^2");
    t.ratio_k = rf("(n-k)^2*(n+k+1)^2/(k+1)^4");
    t.guard.nonvanishing = {poly("n+1-k"), poly("k+1")};
    return t;
}

// U_{n,k} = 4(2n+1)(k(2k+1) - (2n+1)^2) lambda_{n,k}.
inline HyperTerm u_cert_term() {
    HyperTerm t;
    t.name = "U";
    t.multiple_of = "lambda";
    t.factor = rf("4*(2*n+1)*(k*(2*k+1)-(2*n+1)^2)");
    return t;
}

inline std::map<std::string, HyperTerm> standard_terms() {
    return {{"C", binomial_term()}, {"lambda", lambda_term()}, {"U", u_cert_term()}};
}

// Pascal's rule C(n+1,k+1) - C(n,k+1) - C(n,k) = 0 away from k = -1
// and k = n.
inline GuardedIdentity pascal_identity(bool with_delta = true) {
    GuardedIdentity id;
    id.name = "pascal";
    id.terms = {{"C", 1, 1, rf("1")}, {"C", 0, 1, rf("-1")}, {"C", 0, 0, rf("-1")}};
    if (with_delta) id.delta.nonvanishing = {poly("k+1"), poly("n-k")};
    return id;
}

// The telescoping step behind sum_k lambda: U_{n,k} - U_{n,k-1}
// = (n+1)^3 lambda_{n+1,k} - (34n^3+51n^2+27n+5) lambda_{n,k}
//   + n^3 lambda_{n-1,k}.
inline GuardedIdentity u_telescoping_identity() {
    GuardedIdentity id;
    id.name = "u_telescoping";
    id.terms = {{"U", 0, 0, rf("1")},
                {"U", 0, -1, rf("-1")},
                {"lambda", 1, 0, rf("-(n+1)^3")},
                {"lambda", 0, 0, rf("34*n^3+51*n^2+27*n+5")},
                {"lambda", -1, 0, rf("-n^3")}};
    id.delta.nonvanishing = {poly("n-k+1"), poly("n+k")};
    return id;
}

// Same step for the inhomogeneous pair (V, v): checked pointwise
// because v carries inner sums and is not hypergeometric.
inline GuardedIdentity v_telescoping_identity() {
    GuardedIdentity id;
    id.name = "v_telescoping";
    id.terms = {{"V", 0, 0, rf("1")},
                {"V", 0, -1, rf("-1")},
                {"v", 1, 0, rf("-(n+1)^3")},
                {"v", 0, 0, rf("34*n^3+51*n^2+27*n+5")},
                {"v", -1, 0, rf("-n^3")}};
    return id;
}

inline std::map<std::string, Evaluator> u_telescoping_evaluators() {
    return {{"U", [](long n, long k) { return Rat(seq::U(n, k)); }},
            {"lambda", seq::lambda_evaluator()}};
}

inline std::map<std::string, Evaluator> v_telescoping_evaluators() {
    return {{"V", [](long n, long k) { return seq::V(n, k); }},
            {"v", seq::v_evaluator()}};
}

// g evaluators for the per-n summation formula: summing the
// telescoping steps over k presents U (resp. V) one column behind and
// one row ahead of the lambda (resp. v) strip.
inline Evaluator u_sum_g() {
    return [](long n, long k) { return Rat(seq::U(n + 1, k - 1)); };
}
inline Evaluator v_sum_g() {
    return [](long n, long k) { return seq::V(n + 1, k - 1); };
}

}  // namespace certlib
}  // namespace apery
