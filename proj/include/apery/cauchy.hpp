#pragma once

// Constructive reals as rational Cauchy sequences with explicit
// moduli, finite-precision comparison, and certified enclosures of
// zeta(3) from the z_n tail bound and from b_n/a_n with the Casoratian
// error bound.

#include "apery/sequences.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace apery {

// x is represented by term together with a modulus: for every
// rational eps > 0 and all i, j >= modulus(eps), |term(i) - term(j)|
// <= eps.
struct CauchyReal {
    std::function<Rat(long)> term;
    std::function<long(const Rat&)> modulus;
};

struct Enclosure {
    Rat lo, hi;
    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const Enclosure& e) const { return lo <= e.lo && e.hi <= hi; }
    bool overlaps(const Enclosure& e) const { return lo <= e.hi && e.lo <= hi; }
};

inline CauchyReal cauchy_const(const Rat& c) {
    return {[c](long) { return c; }, [](const Rat&) { return 0L; }};
}

// One step of the telescoping tail bound behind the z modulus:
// 1/m^3 < (1/(m-1)^2 - 1/m^2)/2 for m >= 2.
inline bool tail_bound_step_check(long m) {
    if (m < 2) throw std::domain_error("tail_bound_step_check: m < 2");
    Rat lhs(1, Int(m) * m * m);
    Rat rhs = (Rat(1, Int(m - 1) * (m - 1)) - Rat(1, Int(m) * m)) / 2;
    return lhs < rhs;
}

// zeta(3) as the Cauchy sequence of partial sums z_n; summing the
// telescoping step over m > N bounds the tail by 1/(2N^2), so the
// modulus is the least N >= 1 with 1/(2N^2) <= eps.
inline CauchyReal z3_cauchy() {
    CauchyReal x;
    x.term = [](long n) { return seq::z(n); };
    x.modulus = [](const Rat& eps) {
        if (eps <= 0) throw std::domain_error("modulus: eps must be positive");
        Rat q = Rat(1) / (2 * eps);  // need N^2 >= q
        Int N = int_sqrt_floor(rat_ceil(q));
        if (Rat(N * N) < q) ++N;
        if (N < 1) N = 1;
        return static_cast<long>(N);
    };
    return x;
}

// Interval [z_N, z_N + 1/(2N^2)] containing zeta(3).
inline Enclosure z_tail_enclosure(long N) {
    if (N < 1) throw std::domain_error("z_tail_enclosure: N < 1");
    Rat lo = seq::z(N);
    return {lo, lo + Rat(1, Int(2) * N * N)};
}

// The error constant: zeta(3) - b_n/a_n <= K/a_n^2 needs K > 6 zeta(3);
// K = 8 works because 6 (z_10 + 1/200) < 8 and zeta(3) < z_10 + 1/200.
inline const Rat& error_constant_K() {
    static const Rat K = 8;
    return K;
}

inline bool error_constant_certificate() {
    return Rat(6) * (seq::z(10) + Rat(1, 200)) < error_constant_K();
}

// [b_n/a_n, b_n/a_n + 8/a_n^2], containing zeta(3) with the lower end
// strict; defined for n >= 2.
inline Enclosure zeta3_enclosure(long n) {
    if (n < 2) throw std::domain_error("zeta3_enclosure: requires n >= 2");
    Rat lo = Rat(seq::b(n)) / Rat(seq::a(n));
    Rat w = error_constant_K() / Rat(seq::a(n) * seq::a(n));
    return {lo, lo + w};
}

// zeta(3) as the sequence b_n/a_n; since the enclosure width 8/a_n^2
// bounds |b_i/a_i - b_j/a_j| for i, j >= n, the modulus is the least
// n >= 2 with 8/a_n^2 <= eps.
inline CauchyReal b_over_a_cauchy() {
    CauchyReal x;
    x.term = [](long n) { return seq::b(n) / Rat(seq::a(n)); };
    x.modulus = [](const Rat& eps) {
        if (eps <= 0) throw std::domain_error("modulus: eps must be positive");
        long n = 2;
        while (error_constant_K() / Rat(seq::a(n) * seq::a(n)) > eps) ++n;
        return n;
    };
    return x;
}

// Semi-decidable strict comparison: x < y is certified by a rational
// eps > 0 and an index N such that x_n + eps <= y_n for all n >= N.
// With N = max of both moduli at eps, the stable test x_N + 3 eps <=
// y_N implies that. eps is halved from 1 down to 1/2^budget; failure
// to certify within the budget is not a refutation.
struct LtVerdict {
    bool certified = false;
    Rat eps;
    long index = 0;
};

inline LtVerdict cauchy_lt(const CauchyReal& x, const CauchyReal& y, int budget = 32) {
    Rat eps(1);
    for (int t = 0; t < budget; ++t) {
        eps /= 2;
        long N = std::max(x.modulus(eps), y.modulus(eps));
        if (x.term(N) + 3 * eps <= y.term(N)) return {true, eps, N};
    }
    return {};
}

// First `digits` significant decimal digits certified by an
// enclosure, or nothing when the enclosure is too wide to pin them.
inline std::optional<std::string> digits_from_enclosure(const Enclosure& e, int digits) {
    if (digits < 1) throw std::domain_error("digits_from_enclosure: digits < 1");
    if (e.lo <= 0) throw std::domain_error("digits_from_enclosure: needs positive interval");
    Rat scale = Rat(int_pow(Int(10), static_cast<unsigned long>(digits - 1)));
    Int dl = rat_floor(e.lo * scale), dh = rat_floor(e.hi * scale);
    if (dl != dh) return std::nullopt;
    std::string raw = dl.str();
    if (static_cast<int>(raw.size()) != digits) return std::nullopt;  // integer part not 1 digit
    return raw.substr(0, 1) + "." + raw.substr(1);
}

// Decimal expansion of zeta(3) to `digits` significant digits, found
// by tightening the b/a enclosure until the digits are pinned.
inline std::string zeta3_digits(int digits, long n_limit = 4000) {
    for (long n = 2; n <= n_limit; ++n) {
        if (auto s = digits_from_enclosure(zeta3_enclosure(n), digits)) return *s;
    }
    throw std::runtime_error("zeta3_digits: digit budget not reached");
}

// Least n whose enclosure pins the requested digits (for reports).
inline long zeta3_digits_witness(int digits, long n_limit = 4000) {
    for (long n = 2; n <= n_limit; ++n) {
        if (digits_from_enclosure(zeta3_enclosure(n), digits)) return n;
    }
    throw std::runtime_error("zeta3_digits_witness: digit budget not reached");
}

}  // namespace apery
