#pragma once

// Assembly of the three-property irrationality criterion at desk
// scale: integrality of a_n and 2 lcm(1..n)^3 b_n, growth of a_n via
// the ratio sequence rho, positivity via strict monotonicity of
// b_n/a_n, the decay table for lcm(1..n)^3 (zeta(3) - b_n/a_n), and
// the refutation mechanism for candidate rational values of zeta(3).

#include "apery/cauchy.hpp"
#include "apery/hanson.hpp"
#include "apery/sequences.hpp"

#include <optional>
#include <string>
#include <vector>

namespace apery {
namespace criterion {

struct Verdict {
    bool ok = false;
    std::string detail;
};

// Property (1): a_n integral (by construction), 2 lcm(1..n)^3 b_n
// integral, and j C(i,j) | lcm(1..n) for 1 <= j <= i <= n.
inline Verdict integrality_check(long N) {
    Verdict v;
    if (N < 1) {
        v.detail = "N must be >= 1";
        return v;
    }
    for (long n = 0; n <= N; ++n) {
        Rat scaled = 2 * rat_pow(Rat(lcm_upto(n)), 3) * seq::b(n);
        if (den(scaled) != 1) {
            v.detail = "2 lcm^3 b not integral at n=" + std::to_string(n);
            return v;
        }
    }
    // j C(i,j) | lcm(1..n) for all 1 <= j <= i <= n <= N; since
    // lcm(1..i) divides lcm(1..n) for n >= i, checking at n = i
    // settles every larger n.
    for (long i = 1; i <= N; ++i)
        for (long j = 1; j <= i; ++j)
            if (lcm_upto(i) % (Int(j) * binomial(i, j)) != 0) {
                v.detail = "j C(i,j) does not divide lcm at (i,j)=(" + std::to_string(i) +
                           "," + std::to_string(j) + ")";
                return v;
            }
    v.ok = true;
    return v;
}

// Property (2) surrogate: rho strictly increasing on [2, N), rho_51 >
// 33, and the induction replay a_n >= a_52 33^{n-52} for 52 <= n <= N.
inline Verdict growth_check(long N) {
    Verdict v;
    if (N < 52) {
        v.detail = "N must be >= 52";
        return v;
    }
    for (long n = 2; n < N; ++n)
        if (!(seq::rho(n) < seq::rho(n + 1))) {
            v.detail = "rho not strictly increasing at n=" + std::to_string(n);
            return v;
        }
    if (!(seq::rho(51) > 33)) {
        v.detail = "rho_51 <= 33";
        return v;
    }
    Int floor33 = seq::a(52);
    for (long n = 52; n <= N; ++n) {
        if (seq::a(n) < floor33) {
            v.detail = "a_n < a_52 33^(n-52) at n=" + std::to_string(n);
            return v;
        }
        floor33 *= 33;
    }
    v.ok = true;
    return v;
}

// Property (3) surrogate: b_n/a_n strictly increasing on [2, N], so
// zeta(3) - b_n/a_n stays strictly positive on the range.
inline Verdict positivity_check(long N) {
    Verdict v;
    if (N < 2) {
        v.detail = "N must be >= 2";
        return v;
    }
    for (long n = 2; n < N; ++n) {
        if (!(seq::b(n) * Rat(seq::a(n + 1)) < seq::b(n + 1) * Rat(seq::a(n)))) {
            v.detail = "b/a not strictly increasing at n=" + std::to_string(n);
            return v;
        }
    }
    for (long n = 2; n <= N; ++n) {
        Enclosure e = zeta3_enclosure(n);
        if (!(e.lo < e.hi)) {
            v.detail = "degenerate enclosure at n=" + std::to_string(n);
            return v;
        }
    }
    v.ok = true;
    return v;
}

struct DecayRow {
    long n;
    Rat bound;  // lcm(1..n)^3 8/a_n, certified >= lcm^3 (zeta(3) - b_n/a_n)
};

struct DecayTable {
    std::vector<DecayRow> rows;
    long n0 = 0;           // bound strictly decreasing from n0 on
    bool small_at_end = false;  // bound(N) < 10^-6 when N >= 120
};

inline DecayTable decay_table(long N) {
    if (N < 2) throw std::domain_error("decay_table: N < 2");
    DecayTable t;
    t.n0 = 2;
    for (long n = 2; n <= N; ++n) {
        Rat bound = rat_pow(Rat(lcm_upto(n)), 3) * error_constant_K() / Rat(seq::a(n));
        if (!t.rows.empty() && !(bound < t.rows.back().bound)) t.n0 = n;
        t.rows.push_back({n, bound});
    }
    if (N >= 120)
        t.small_at_end = t.rows.back().bound < Rat(1, int_pow(Int(10), 6));
    return t;
}

struct RefutationReport {
    bool refuted = false;
    long witness_n = 0;
    // How the witness refutes p/q: outside the certified enclosure, or
    // the integer 2 q lcm^3 (a p/q - b) strictly between 0 and 1.
    enum class Mode { None, Enclosure, IntegerGap } mode = Mode::None;
    std::string detail;
};

// Refutes zeta(3) = p/q by scanning n = 2..N: either p/q falls
// outside [b_n/a_n, b_n/a_n + 8/a_n^2] (which contains zeta(3)), or
// 0 < 2 q lcm(1..n)^3 (a_n p/q - b_n) < 1 while that quantity must be
// an integer under the hypothesis.
inline RefutationReport contradiction_demo(const Int& p, const Int& q, long N) {
    if (q <= 0) throw std::domain_error("contradiction_demo: q must be positive");
    RefutationReport r;
    Rat target(p, q);
    for (long n = 2; n <= N; ++n) {
        Enclosure e = zeta3_enclosure(n);
        if (!e.contains(target)) {
            r.refuted = true;
            r.witness_n = n;
            r.mode = RefutationReport::Mode::Enclosure;
            r.detail = (target < e.lo ? "below" : "above") +
                       std::string(" the certified enclosure at n=") + std::to_string(n);
            return r;
        }
        Rat gap = Rat(2 * q) * rat_pow(Rat(lcm_upto(n)), 3) *
                  (Rat(seq::a(n)) * target - seq::b(n));
        if (gap > 0 && gap < 1) {
            r.refuted = true;
            r.witness_n = n;
            r.mode = RefutationReport::Mode::IntegerGap;
            r.detail = "2 q lcm^3 (a p/q - b) = " + std::string(num(gap).str()) + "/" +
                       std::string(den(gap).str()) + " lies strictly between 0 and 1 at n=" +
                       std::to_string(n);
            return r;
        }
    }
    r.detail = "not refuted up to n=" + std::to_string(N);
    return r;
}

}  // namespace criterion
}  // namespace apery
