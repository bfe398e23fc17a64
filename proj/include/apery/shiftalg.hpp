#pragma once

// Non-commutative algebra of shift operators in Sn, Sk with rational
// function coefficients, proviso bookkeeping, and Ore right division
// for order reduction of annihilators.

#include "apery/polyalg.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace apery {

// Evaluator of a bivariate sequence; throws SupportViolation where the
// sequence is undefined.
using Evaluator = std::function<Rat(long n, long k)>;
using SeqEvaluator = std::function<Rat(long n)>;

// Guard for an operator identity: every listed polynomial must be
// nonzero at the point, every listed linear polynomial must be >= 0.
// The excluded set is the complement of the admissible points.
struct Proviso {
    std::vector<MultiPoly> nonvanishing;
    std::vector<MultiPoly> nonnegative;

    bool satisfied_at(long n, long k) const {
        std::map<std::string, Rat> pt{{"n", Rat(n)}, {"k", Rat(k)}};
        for (const auto& p : nonvanishing)
            if (p.eval(pt) == 0) return false;
        for (const auto& p : nonnegative)
            if (p.eval(pt) < 0) return false;
        return true;
    }
    bool excludes(long n, long k) const { return !satisfied_at(n, k); }
    bool empty() const { return nonvanishing.empty() && nonnegative.empty(); }

    // True when the integer zero set of g is contained in the excluded
    // set, certified by factoring g into the listed nonvanishing
    // polynomials (up to a rational constant).
    bool covers_zeros_of(const MultiPoly& g) const {
        MultiPoly r = g.primitive_part();
        if (r.is_constant()) return true;
        bool progress = true;
        while (!r.is_constant() && progress) {
            progress = false;
            for (const auto& p : nonvanishing) {
                if (p.is_constant()) continue;
                if (auto q = divide_exact(r, p)) {
                    r = *q;
                    progress = true;
                    break;
                }
            }
        }
        return r.is_constant();
    }
};

// Finite sum of shift monomials Sn^i Sk^j with RatFun coefficients
// written to the left; i, j range over the integers.
class ShiftOp {
  public:
    using Key = std::pair<long, long>;  // (shift in n, shift in k)

    ShiftOp() = default;
    static ShiftOp coeff(const RatFun& c) {
        ShiftOp p;
        if (!c.is_zero()) p.terms_[{0, 0}] = c;
        return p;
    }
    static ShiftOp monomial(long i, long j, const RatFun& c = RatFun(Rat(1))) {
        ShiftOp p;
        if (!c.is_zero()) p.terms_[{i, j}] = c;
        return p;
    }
    static ShiftOp identity() { return coeff(RatFun(Rat(1))); }

    const std::map<Key, RatFun>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_shift_free() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
    }
    RatFun constant_coeff() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? RatFun() : it->second;
    }

    bool univariate_in_n() const {
        for (const auto& [key, c] : terms_)
            if (key.second != 0) return false;
        return true;
    }
    long order_in_n() const {
        long d = 0;
        for (const auto& [key, c] : terms_) d = std::max(d, key.first);
        return d;
    }
    RatFun coeff_at(long i, long j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? RatFun() : it->second;
    }

    ShiftOp operator-() const {
        ShiftOp r = *this;
        for (auto& [key, c] : r.terms_) c = -c;
        return r;
    }
    friend ShiftOp operator+(const ShiftOp& a, const ShiftOp& b) {
        ShiftOp r = a;
        for (const auto& [key, c] : b.terms_) {
            auto [it, fresh] = r.terms_.emplace(key, c);
            if (!fresh) it->second = it->second + c;
        }
        r.prune();
        return r;
    }
    friend ShiftOp operator-(const ShiftOp& a, const ShiftOp& b) { return a + (-b); }

    // Non-commutative product under Sn * r(n,k) = r(n+1,k) * Sn and
    // Sk * r(n,k) = r(n,k+1) * Sk.
    friend ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) {
        ShiftOp r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                RatFun c = ca * cb.shifted("n", ka.first).shifted("k", ka.second);
                Key key{ka.first + kb.first, ka.second + kb.second};
                auto [it, fresh] = r.terms_.emplace(key, c);
                if (!fresh) it->second = it->second + c;
            }
        r.prune();
        return r;
    }
    friend bool operator==(const ShiftOp& a, const ShiftOp& b) {
        return (a - b).is_zero();
    }

    ShiftOp pow(long e) const {
        if (e < 0) throw std::domain_error("ShiftOp::pow: negative exponent");
        ShiftOp r = identity(), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // (P.f)_{n,k} = sum p_{i,j}(n,k) f_{n+i,k+j}.
    Rat apply(const Evaluator& f, long n, long k) const {
        std::map<std::string, Rat> pt{{"n", Rat(n)}, {"k", Rat(k)}};
        Rat total = 0;
        for (const auto& [key, c] : terms_)
            total += c.eval(pt) * f(n + key.first, k + key.second);
        return total;
    }

    // Action on a univariate sequence (k-shifts must be absent).
    Rat apply_seq(const SeqEvaluator& y, long n) const {
        if (!univariate_in_n())
            throw std::domain_error("apply_seq: operator has k-shifts");
        std::map<std::string, Rat> pt{{"n", Rat(n)}};
        Rat total = 0;
        for (const auto& [key, c] : terms_)
            total += c.eval(pt) * y(n + key.first);
        return total;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Key, RatFun>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            return a.first > b.first;  // highest shifts first
        });
        std::string out;
        bool first = true;
        for (const auto& [key, c] : ts) {
            std::string cs = c.str();
            bool negated = !cs.empty() && cs[0] == '-';
            if (negated) cs = (-c).str();
            if (first) {
                first = false;
                if (negated) out += "-";
            } else {
                out += negated ? " - " : " + ";
            }
            std::string mono;
            if (key.first != 0) {
                mono += "Sn";
                if (key.first != 1) mono += "^" + std::to_string(key.first);
            }
            if (key.second != 0) {
                if (!mono.empty()) mono += "*";
                mono += "Sk";
                if (key.second != 1) mono += "^" + std::to_string(key.second);
            }
            bool needs_parens = cs.find(" + ") != std::string::npos ||
                                cs.find(" - ") != std::string::npos;
            if (mono.empty()) {
                out += needs_parens ? "(" + cs + ")" : cs;
            } else if (cs == "1") {
                out += mono;
            } else {
                out += (needs_parens ? "(" + cs + ")" : cs) + "*" + mono;
            }
        }
        return out;
    }

  private:
    std::map<Key, RatFun> terms_;

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
};

// Operator together with the proviso guarding its validity.
struct AnnRec {
    std::string name;
    ShiftOp op;
    Proviso guard;
};

// Right division A = Q*B + R in the Ore algebra Q(n)[Sn]; always
// defined for nonzero B, with order(R) < order(B).
inline std::pair<ShiftOp, ShiftOp> ore_right_divide(const ShiftOp& A, const ShiftOp& B) {
    if (B.is_zero()) throw std::domain_error("ore_right_divide: zero divisor");
    if (!A.univariate_in_n() || !B.univariate_in_n())
        throw std::domain_error("ore_right_divide: operands must be univariate in Sn");
    long db = B.order_in_n();
    RatFun lcB = B.coeff_at(db, 0);
    ShiftOp Q, R = A;
    while (!R.is_zero() && R.order_in_n() >= db && !R.coeff_at(R.order_in_n(), 0).is_zero()) {
        long dr = R.order_in_n();
        if (dr < db) break;
        RatFun lcR = R.coeff_at(dr, 0);
        // q = (lcR / lcB(n + dr - db)) * Sn^(dr-db)
        RatFun q = lcR / lcB.shifted("n", dr - db);
        ShiftOp mono = ShiftOp::monomial(dr - db, 0, q);
        Q = Q + mono;
        R = R - mono * B;
    }
    return {Q, R};
}

struct ReductionVerdict {
    bool ok = false;
    bool premise_ok = false;    // y satisfies A on the range
    bool division_exact = false;  // A = Q*B with zero remainder
    bool initials_ok = false;     // (B.y)_n = 0 on the initial window
    bool leading_ok = false;      // Q's leading coefficient nonzero on the range
    std::string detail;
};

// Order reduction: accepts iff A = Q*B exactly, B annihilates y on the
// first order(A)-order(B) indices, and Q's leading coefficient does not
// vanish on the induction range. Then B.y = 0 on [n_lo, n_hi].
inline ReductionVerdict order_reduction_check(const AnnRec& A, const AnnRec& B,
                                              const SeqEvaluator& y, long n_lo, long n_hi) {
    ReductionVerdict v;
    long r = A.op.order_in_n(), s = B.op.order_in_n();
    if (s >= r) {
        v.detail = "B must have strictly smaller order than A";
        return v;
    }
    v.premise_ok = true;
    for (long n = n_lo; n <= n_hi; ++n) {
        if (A.op.apply_seq(y, n) != 0) {
            v.premise_ok = false;
            v.detail = "A does not annihilate y at n=" + std::to_string(n);
            return v;
        }
    }
    auto [Q, R] = ore_right_divide(A.op, B.op);
    v.division_exact = R.is_zero();
    if (!v.division_exact) {
        v.detail = "nonzero Ore remainder: " + R.str();
        return v;
    }
    // Exactness cross-check by re-multiplication.
    if (!(Q * B.op == A.op)) {
        v.division_exact = false;
        v.detail = "re-multiplication mismatch";
        return v;
    }
    v.initials_ok = true;
    for (long n = n_lo; n < n_lo + (r - s); ++n) {
        if (B.op.apply_seq(y, n) != 0) {
            v.initials_ok = false;
            v.detail = "B.y nonzero at initial index n=" + std::to_string(n);
            return v;
        }
    }
    v.leading_ok = true;
    long dq = Q.order_in_n();
    RatFun lq = Q.coeff_at(dq, 0);
    for (long n = n_lo; n <= n_hi; ++n) {
        std::map<std::string, Rat> pt{{"n", Rat(n)}};
        if (lq.num().eval(pt) == 0) {
            v.leading_ok = false;
            v.detail = "leading coefficient of Q vanishes at n=" + std::to_string(n);
            return v;
        }
    }
    v.ok = true;
    return v;
}

}  // namespace apery
