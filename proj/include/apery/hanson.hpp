#pragma once

// Hanson's bound machinery: the alpha sequence, the generalized
// multinomial C(n,k) = n!/prod floor(n/alpha_i)!, and exact-arithmetic
// checks of every lemma feeding the estimate lcm(1..n) = O(3^n). All
// fractional exponents are eliminated by raising both sides to integer
// powers before comparing.

#include "apery/numkit.hpp"

#include <stdexcept>
#include <vector>

namespace apery {
namespace hanson {

// alpha_1 = 2, alpha_{k+1} = alpha_k^2 - alpha_k + 1 (2, 3, 7, 43, 1807, ...).
inline const Int& alpha(long i) {
    if (i < 1) throw std::domain_error("alpha: index starts at 1");
    static std::vector<Int> table{0, 2};  // 1-based
    std::lock_guard<std::mutex> lock(detail::numkit_mutex());
    while (static_cast<long>(table.size()) <= i) {
        const Int& p = table.back();
        table.push_back(p * p - p + 1);
    }
    return table[static_cast<std::size_t>(i)];
}

// Equivalent closed form: alpha_{k+1} = alpha_1 ... alpha_k + 1.
inline bool alpha_product_identity_check(long k) {
    Int prod = 1;
    for (long i = 1; i <= k; ++i) prod *= alpha(i);
    return alpha(k + 1) == prod + 1;
}

inline Int hanson_C(long n, long k) {
    if (n < 1 || k < 0) throw std::domain_error("hanson_C: requires n >= 1, k >= 0");
    Int denom = 1;
    for (long i = 1; i <= k; ++i) denom *= factorial(static_cast<long>(Int(n) / alpha(i)));
    return factorial(n) / denom;
}

// Least k with alpha_k >= n; C(n,k) stabilizes from there on.
inline long stable_k(long n) {
    long k = 1;
    while (alpha(k) < n) ++k;
    return k;
}

inline Int hanson_C(long n) { return hanson_C(n, stable_k(n)); }

// Lemma: sum_{i=1}^k 1/alpha_i = (alpha_{k+1} - 2)/(alpha_{k+1} - 1) < 1,
// together with its floor corollary floor(x) > sum_i floor(x/alpha_i)
// on a rational grid x >= 1.
inline bool suminv_identity_check(long k) {
    if (k < 1) throw std::domain_error("suminv_identity_check: k < 1");
    Rat sum = 0;
    for (long i = 1; i <= k; ++i) sum += Rat(1, alpha(i));
    Rat rhs(alpha(k + 1) - 2, alpha(k + 1) - 1);
    if (sum != rhs || !(sum < 1)) return false;
    for (Int j = 4; j <= 400; ++j) {  // x = j/4 spans 1..100
        Rat x(j, 4);
        Int lhs = rat_floor(x);
        Int total = 0;
        for (long i = 1; i <= k; ++i) total += rat_floor(x / Rat(alpha(i)));
        if (!(lhs > total)) return false;
    }
    return true;
}

// Floor identity used in its proof: floor(a/m) = floor(floor(a)/m).
inline bool floor_div_identity_check(const Rat& a, long m) {
    if (a < 0 || m < 1) throw std::domain_error("floor_div_identity_check: bad arguments");
    return rat_floor(a / m) == rat_floor(Rat(rat_floor(a)) / m);
}

// v_p(C(n,k)) >= floor(log_p n), by Legendre sums.
inline bool beta_valuation_check(long n, long k, long p) {
    if (n < 1) throw std::domain_error("beta_valuation_check: n < 1");
    long j = trunc_log(p, n);
    long v = val_factorial(p, n, j);
    for (long i = 1; i <= k; ++i) {
        long m = static_cast<long>(Int(n) / alpha(i));
        if (m >= 1) v -= val_factorial(p, m, trunc_log(p, m));
    }
    return v >= j;
}

// (n/a)^{n/a} / floor(n/a)^{floor(n/a)} < (10 n/a)^{(a-1)/a} with
// a = alpha_i, checked after raising both sides to the power a:
// n^n / (a^n m^{a m}) < (10 n/a)^{a-1} where m = floor(n/a).
inline bool analysis_ineq_check(long n, long i) {
    Int a = alpha(i);
    if (Int(n) < a) throw std::domain_error("analysis_ineq_check: requires n >= alpha_i");
    unsigned long au = static_cast<unsigned long>(a);
    Int m = Int(n) / a;
    Rat lhs = Rat(int_pow(Int(n), static_cast<unsigned long>(n))) /
              Rat(int_pow(a, static_cast<unsigned long>(n)) *
                  int_pow(m, static_cast<unsigned long>(a * m)));
    Rat rhs = rat_pow(Rat(Int(10) * n, a), static_cast<long>(au) - 1);
    return lhs < rhs;
}

// (1 + 1/x)^x < 10 for rational x = p/q > 0, i.e. (p+q)^p < 10^q p^p.
inline bool bounded_power_check(const Rat& x) {
    if (x <= 0) throw std::domain_error("bounded_power_check: x <= 0");
    Int p = num(x), q = den(x);
    unsigned long pu = static_cast<unsigned long>(p), qu = static_cast<unsigned long>(q);
    return int_pow(p + q, pu) < int_pow(Int(10), qu) * int_pow(p, pu);
}

// C(n,k) < n^n / prod_i floor(n/alpha_i)^{floor(n/alpha_i)}.
inline bool cnk_bound_check(long n, long k) {
    if (n < 2 || k < 1) throw std::domain_error("cnk_bound_check: requires n >= 2, k >= 1");
    Int denom = 1;
    for (long i = 1; i <= k; ++i) {
        Int m = Int(n) / alpha(i);
        denom *= int_pow(m, static_cast<unsigned long>(m));  // 0^0 = 1
    }
    return hanson_C(n, k) * denom < int_pow(Int(n), static_cast<unsigned long>(n));
}

// k <= floor(log2 floor(log2 n)) + 2 for the stable k (non-strict form;
// the strict variant fails at the boundary points n=7,k=3 and n=43,k=4).
inline bool k_loglog_check(long n, long k) {
    if (k < 3 || alpha(k) > n) throw std::domain_error("k_loglog_check: requires k >= 3, alpha_k <= n");
    return k <= trunc_log(2, Int(trunc_log(2, Int(n)))) + 2;
}

// Proof step behind it: alpha_k > 2^(2^(k-2)) + 1 for k >= 3.
inline bool alpha_gap_check(long k) {
    if (k < 3) throw std::domain_error("alpha_gap_check: k < 3");
    return alpha(k) > int_pow(Int(2), 1UL << static_cast<unsigned long>(k - 2)) + 1;
}

// Certified global bound W = 149/50 on every w_k = prod alpha_i^{1/alpha_i}.
inline const Rat& w_upper_bound() {
    static const Rat W(149, 50);
    return W;
}

// The five per-factor bounds alpha_i^{1/alpha_i} < c_i, checked as
// alpha_i < c_i^{alpha_i}, then the aggregated product bound
// c_1 c_2 c_3 c_4 (201/200)^2 <= 5949909309448377/(2 10^15) < 149/50.
inline bool w_bound_check() {
    static const Rat bounds[5] = {Rat(283, 200), Rat(1443, 1000), Rat(1321, 1000),
                                  Rat(273, 250), Rat(201, 200)};
    for (long i = 1; i <= 5; ++i) {
        if (!(Rat(alpha(i)) < rat_pow(bounds[i - 1], static_cast<long>(alpha(i)))))
            return false;
    }
    Rat w4 = bounds[0] * bounds[1] * bounds[2] * bounds[3];
    Rat aggregate = w4 * bounds[4] * bounds[4];
    Rat pivot(Int("5949909309448377"), Int(2) * int_pow(Int(10), 15));
    return aggregate <= pivot && pivot < w_upper_bound();
}

// sum_{i=1}^k (alpha_i - 1)/alpha_i = k - 1 + 1/(alpha_{k+1} - 1).
inline bool obs1_check(long k) {
    if (k < 1) throw std::domain_error("obs1_check: k < 1");
    Rat sum = 0;
    for (long i = 1; i <= k; ++i) sum += Rat(alpha(i) - 1, alpha(i));
    return sum == Rat(k - 1) + Rat(1, alpha(k + 1) - 1);
}

// Theorem bound C(n) < (10 n)^{k - 1/2} W^{n+1}, with alpha_k <= n <
// alpha_{k+1}; squared to keep the exponents integral.
inline bool main_bound_check(long n) {
    if (n < 2) throw std::domain_error("main_bound_check: n < 2");
    long k = 1;
    while (alpha(k + 1) <= n) ++k;  // alpha_k <= n < alpha_{k+1}
    Int C = hanson_C(n, stable_k(n));
    Rat lhs = Rat(C * C);
    Rat rhs = rat_pow(Rat(Int(10) * n), 2 * k - 1) * rat_pow(w_upper_bound(), 2 * n + 2);
    return lhs < rhs;
}

struct LcmGrowthReport {
    long max_n = 0;
    bool lcm_le_C = false;        // lcm(1..n) <= C(n) throughout
    bool main_bound_ok = false;   // theorem bound throughout
    Rat max_ratio;                // max of lcm(1..n)/3^n
    long max_ratio_n = 0;
    long decreasing_from = 0;     // certified bound strictly decreasing from here
};

// Desk-scale form of lcm(1..n) = O(3^n): instance checks of the chain
// lcm(1..n) <= C(n) and C(n)^2 < (10n)^{2k-1} W^{2n+2}, the extremal
// exact ratio lcm(1..n)/3^n, and the onset of strict decrease of the
// certified squared bound (10n)^{2k-1} (W/3)^{2n+2}.
inline LcmGrowthReport lcm_bigO_3n_report(long N) {
    if (N < 2) throw std::domain_error("lcm_bigO_3n_report: N < 2");
    LcmGrowthReport rep;
    rep.max_n = N;
    rep.lcm_le_C = true;
    rep.main_bound_ok = true;
    rep.max_ratio = 0;
    Rat prev_bound;
    rep.decreasing_from = 2;
    for (long n = 2; n <= N; ++n) {
        if (lcm_upto(n) > hanson_C(n)) rep.lcm_le_C = false;
        if (!main_bound_check(n)) rep.main_bound_ok = false;
        Rat ratio = Rat(lcm_upto(n)) / Rat(int_pow(Int(3), static_cast<unsigned long>(n)));
        if (ratio > rep.max_ratio) {
            rep.max_ratio = ratio;
            rep.max_ratio_n = n;
        }
        long k = 1;
        while (alpha(k + 1) <= n) ++k;
        Rat bound = rat_pow(Rat(Int(10) * n), 2 * k - 1) *
                    rat_pow(w_upper_bound() / 3, 2 * n + 2);
        if (n > 2 && !(bound < prev_bound)) rep.decreasing_from = n;
        prev_bound = bound;
    }
    return rep;
}

struct SuiteCheck {
    std::string name;
    std::string scope;
    bool ok = false;
};

struct SuiteReport {
    long max_n = 0;
    long lcm_max_n = 0;
    std::vector<SuiteCheck> checks;
    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

// Runs every check in this header over its applicable range: the alpha
// identities, the valuation and divisibility facts v_p(C(n)) >=
// v_p(lcm(1..n)) and lcm(1..n) <= C(n) up to lcm_N, and the analytic
// inequality chain up to N.
inline SuiteReport run_suite(long N, long lcm_N) {
    if (N < 2 || lcm_N < 2) throw std::domain_error("run_suite: bounds must be >= 2");
    SuiteReport rep;
    rep.max_n = N;
    rep.lcm_max_n = lcm_N;
    auto add = [&rep](std::string name, std::string scope, bool ok) {
        rep.checks.push_back({std::move(name), std::move(scope), ok});
    };
    bool ok = true;
    for (long k = 1; k <= 8; ++k) ok = ok && alpha_product_identity_check(k);
    add("alpha_product_identity", "k <= 8", ok);

    ok = true;
    for (long k = 1; k <= 6; ++k) ok = ok && suminv_identity_check(k);
    add("suminv", "k <= 6", ok);

    ok = true;
    {
        auto ps = primes_upto(lcm_N);
        for (long n = 1; n <= lcm_N && ok; ++n) {
            long k = stable_k(n);
            for (long p : ps) {
                if (p > n) break;
                ok = ok && beta_valuation_check(n, k, p);
            }
        }
    }
    add("beta_valuation", "n <= " + std::to_string(lcm_N) + ", p <= n", ok);

    ok = true;
    for (long n = 1; n <= lcm_N && ok; ++n) ok = lcm_upto(n) <= hanson_C(n);
    add("lcm_le_C", "n <= " + std::to_string(lcm_N), ok);

    ok = true;
    for (long n = 2; n <= N && ok; ++n)
        for (long i = 1; alpha(i) <= n && ok; ++i) ok = analysis_ineq_check(n, i);
    add("analysis_ineq", "2 <= n <= " + std::to_string(N) + ", alpha_i <= n", ok);

    ok = bounded_power_check(Rat(100));
    for (Int j = 1; j <= 200 && ok; ++j) ok = bounded_power_check(Rat(j, 4));
    add("bounded_power", "x = j/4 (j <= 200) and x = 100", ok);

    ok = true;
    for (long n = 2; n <= N && ok; ++n) ok = cnk_bound_check(n, stable_k(n));
    add("cnk_bound", "2 <= n <= " + std::to_string(N), ok);

    ok = true;
    for (long n = 7; n <= N && ok; ++n)
        for (long k = 3; k <= 8 && alpha(k) <= n && ok; ++k) ok = k_loglog_check(n, k);
    add("k_loglog", "alpha_k <= n <= " + std::to_string(N) + ", k >= 3", ok);

    ok = true;
    for (long k = 3; k <= 8; ++k) ok = ok && alpha_gap_check(k);
    add("alpha_gap", "3 <= k <= 8", ok);

    add("w_bound", "alpha_1..alpha_5 chain", w_bound_check());

    ok = true;
    for (long k = 1; k <= 6; ++k) ok = ok && obs1_check(k);
    add("obs1", "k <= 6", ok);

    ok = true;
    for (long n = 2; n <= N && ok; ++n) ok = main_bound_check(n);
    add("main_bound", "2 <= n <= " + std::to_string(N), ok);
    return rep;
}

}  // namespace hanson
}  // namespace apery
