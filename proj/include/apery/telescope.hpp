#pragma once

// Proviso-aware verification of creative-telescoping certificates:
// symbolic verification of guarded identities between hypergeometric
// terms (by rewriting shifted instances into ratio products over a
// common reference term), pointwise exact verification on grids, and
// the full per-n summation formula
//
//   (P.F)_n = (g_{n,n+beta+1} - g_{n,alpha})
//           + sum_{i=1}^r sum_{j=1}^i p_i(n) f_{n+i,n+beta+j}
//           + sum_{alpha<=k<=n+beta, (n,k) excluded}
//               [(P.f_{_,k})_n - g_{n,k+1} + g_{n,k}]
//
// with F_n = sum_{k=alpha}^{n+beta} f_{n,k} and g = Q.f.

#include "apery/shiftalg.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace apery {

// Hypergeometric term defined by its shift quotients. A term may
// instead be declared a rational-function multiple of another term
// (multiple_of/factor), in which case its instances are rewritten
// through that term's ratios.
struct HyperTerm {
    std::string name;
    std::function<bool(long, long)> support;  // empty = everywhere
    long anchor_n = 0, anchor_k = 0;
    Rat base = 1;
    RatFun ratio_n;  // f(n+1,k)/f(n,k)
    RatFun ratio_k;  // f(n,k+1)/f(n,k)
    Proviso guard;   // where the ratios are valid
    std::string multiple_of;  // empty: base term
    RatFun factor;            // this(n,k) = factor(n,k) * base-term(n,k)
};

// One summand coeff(n,k) * term(n+dn, k+dk) of a guarded identity.
struct TermRef {
    std::string term;
    long dn = 0, dk = 0;
    RatFun coeff;
};

// Formal statement  sum_i coeff_i(n,k) term_i(n+dn_i, k+dk_i) = 0
// for (n,k) outside the excluded set described by delta.
struct GuardedIdentity {
    std::string name;
    std::vector<TermRef> terms;
    Proviso delta;
};

struct Verdict {
    bool ok = false;
    std::string detail;
    bool has_failure_point = false;
    long fail_n = 0, fail_k = 0;
    std::vector<std::string> guard_trace;

    std::string status() const { return ok ? "accepted" : "rejected"; }
};

// Build an identity sum_{(i,j)} coeff_{i,j}(n,k) f(n+i,k+j) = 0 from an
// operator stanza, reading its proviso as the excluded-set description.
inline GuardedIdentity identity_from_operator(const AnnRec& rec,
                                              const std::string& term_name = "f") {
    GuardedIdentity id;
    id.name = rec.name;
    id.delta = rec.guard;
    for (const auto& [key, c] : rec.op.terms())
        id.terms.push_back({term_name, key.first, key.second, c});
    return id;
}

namespace detail {

// Resolve a term to its base hypergeometric term, composing
// multiple-of factors along the way.
inline std::pair<const HyperTerm*, RatFun> resolve_term(
    const std::string& name, const std::map<std::string, HyperTerm>& terms,
    std::string& error) {
    RatFun factor(Rat(1));
    const HyperTerm* t = nullptr;
    std::string cur = name;
    for (int depth = 0; depth < 16; ++depth) {
        auto it = terms.find(cur);
        if (it == terms.end()) {
            error = "unknown term '" + cur + "'";
            return {nullptr, factor};
        }
        t = &it->second;
        if (t->multiple_of.empty()) return {t, factor};
        factor = factor * t->factor;
        cur = t->multiple_of;
    }
    error = "cyclic multiple-of chain at '" + name + "'";
    return {nullptr, factor};
}

}  // namespace detail

// Symbolic verification: divide the identity by the common reference
// term, rewrite every shifted instance into a product of shift
// quotients, and accept iff the resulting rational function is zero
// and every quotient's vanishing locus is covered by delta. The
// k-shifts are applied first (at the original n), then the n-shifts at
// the shifted k; this ordering fixes which guard instances are
// recorded.
inline Verdict verify_hyper_identity(const GuardedIdentity& id,
                                     const std::map<std::string, HyperTerm>& terms) {
    Verdict v;
    RatFun total;
    std::vector<MultiPoly> guards;
    auto need_guard = [&](const MultiPoly& g) {
        if (!g.is_constant()) guards.push_back(g);
    };
    const HyperTerm* reference = nullptr;
    for (const auto& tr : id.terms) {
        std::string err;
        auto [base, factor] = detail::resolve_term(tr.term, terms, err);
        if (!base) {
            v.detail = err;
            return v;
        }
        if (!reference) reference = base;
        if (base != reference) {
            v.detail = "terms '" + reference->name + "' and '" + base->name +
                       "' do not share a reference term";
            return v;
        }
        // term(n+dn, k+dk) / reference(n,k), as a rational function.
        RatFun acc = factor.shifted("n", tr.dn).shifted("k", tr.dk);
        need_guard(acc.den());
        if (tr.dk != 0 && base->ratio_k.is_zero()) {
            v.detail = "term '" + base->name + "' has no k-shift quotient";
            return v;
        }
        if (tr.dn != 0 && base->ratio_n.is_zero()) {
            v.detail = "term '" + base->name + "' has no n-shift quotient";
            return v;
        }
        for (long j = 0; j < tr.dk; ++j) {
            RatFun r = base->ratio_k.shifted("k", j);
            need_guard(r.den());
            acc = acc * r;
        }
        for (long j = 1; j <= -tr.dk; ++j) {
            RatFun r = base->ratio_k.shifted("k", -j);
            need_guard(r.num());
            acc = acc / r;
        }
        for (long i = 0; i < tr.dn; ++i) {
            RatFun r = base->ratio_n.shifted("k", tr.dk).shifted("n", i);
            need_guard(r.den());
            acc = acc * r;
        }
        for (long i = 1; i <= -tr.dn; ++i) {
            RatFun r = base->ratio_n.shifted("k", tr.dk).shifted("n", -i);
            need_guard(r.num());
            acc = acc / r;
        }
        need_guard(tr.coeff.den());
        total = total + tr.coeff * acc;
    }
    for (const auto& g : guards) {
        v.guard_trace.push_back(g.str() + " <> 0");
        if (!id.delta.covers_zeros_of(g)) {
            v.detail = "guard violation not excluded: requires " + g.str() + " <> 0";
            return v;
        }
    }
    if (!ratfun_equal_zero(total)) {
        v.detail = "normal form nonzero: " + total.str();
        return v;
    }
    v.ok = true;
    return v;
}

// Pointwise exact verification on a grid, first failure in
// lexicographic (n,k) order. Points inside the excluded set are
// skipped; singular coefficient evaluations are reported, never
// silently dropped.
inline Verdict verify_pointwise(const GuardedIdentity& id,
                                const std::map<std::string, Evaluator>& evaluators,
                                std::vector<std::pair<long, long>> grid) {
    Verdict v;
    std::sort(grid.begin(), grid.end());
    for (const auto& [n, k] : grid) {
        if (id.delta.excludes(n, k)) continue;
        std::map<std::string, Rat> pt{{"n", Rat(n)}, {"k", Rat(k)}};
        Rat total = 0;
        for (const auto& tr : id.terms) {
            auto it = evaluators.find(tr.term);
            if (it == evaluators.end()) {
                v.detail = "no evaluator for term '" + tr.term + "'";
                return v;
            }
            try {
                total += tr.coeff.eval(pt) * it->second(n + tr.dn, k + tr.dk);
            } catch (const SingularPoint&) {
                v.has_failure_point = true;
                v.fail_n = n;
                v.fail_k = k;
                v.detail = "singular coefficient at (n,k)=(" + std::to_string(n) + "," +
                           std::to_string(k) + ")";
                return v;
            }
        }
        if (total != 0) {
            v.has_failure_point = true;
            v.fail_n = n;
            v.fail_k = k;
            v.detail = "identity fails at (n,k)=(" + std::to_string(n) + "," +
                       std::to_string(k) + ")";
            return v;
        }
    }
    v.ok = true;
    return v;
}

// Rectangular grid helper: all (n,k) with n_lo <= n <= n_hi and
// k_lo(n) <= k <= k_hi(n) given as offsets from n when relative.
inline std::vector<std::pair<long, long>> triangle_grid(long n_lo, long n_hi, long k_lo) {
    std::vector<std::pair<long, long>> g;
    for (long n = n_lo; n <= n_hi; ++n)
        for (long k = k_lo; k <= n; ++k) g.emplace_back(n, k);
    return g;
}

struct CtVerdict {
    bool ok = false;
    bool rhs_all_zero = true;  // right-hand side vanished for every checked n
    std::vector<long> excluded_n;  // indices where a coefficient of P is singular
    std::string detail;
    long fail_n = 0;

    // P annihilates F on the checked range when both sides matched and
    // the right-hand side was identically zero.
    bool annihilates() const { return ok && rhs_all_zero; }
};

// Per-n exact check of the summation formula for F_n =
// sum_{k=alpha}^{n+beta} f_{n,k}, with g playing the role of Q.f.
inline CtVerdict ct_sum_check(const ShiftOp& P, const Evaluator& g, const Evaluator& f,
                              long alpha, long beta, const Proviso& delta, long n_lo,
                              long n_hi) {
    CtVerdict v;
    if (!P.univariate_in_n()) {
        v.detail = "P must be univariate in Sn";
        return v;
    }
    long r = P.order_in_n();
    auto F = [&](long m) {
        Rat total = 0;
        for (long k = alpha; k <= m + beta; ++k) total += f(m, k);
        return total;
    };
    for (long n = n_lo; n <= n_hi; ++n) {
        std::map<std::string, Rat> pt{{"n", Rat(n)}};
        std::vector<Rat> p(static_cast<std::size_t>(r) + 1);
        try {
            for (long i = 0; i <= r; ++i) p[static_cast<std::size_t>(i)] = P.coeff_at(i, 0).eval(pt);
        } catch (const SingularPoint&) {
            v.excluded_n.push_back(n);
            continue;
        }
        Rat lhs = 0;
        for (long i = 0; i <= r; ++i) lhs += p[static_cast<std::size_t>(i)] * F(n + i);
        Rat rhs = g(n, n + beta + 1) - g(n, alpha);
        for (long i = 1; i <= r; ++i)
            for (long j = 1; j <= i; ++j)
                rhs += p[static_cast<std::size_t>(i)] * f(n + i, n + beta + j);
        for (long k = alpha; k <= n + beta; ++k) {
            if (!delta.excludes(n, k)) continue;
            Rat col = 0;
            for (long i = 0; i <= r; ++i) col += p[static_cast<std::size_t>(i)] * f(n + i, k);
            rhs += col - g(n, k + 1) + g(n, k);
        }
        if (lhs != rhs) {
            v.fail_n = n;
            v.detail = "summation formula fails at n=" + std::to_string(n);
            return v;
        }
        if (rhs != 0) v.rhs_all_zero = false;
    }
    v.ok = true;
    return v;
}

// Overload building g = Q.f from an operator certificate.
inline CtVerdict ct_sum_check(const ShiftOp& P, const ShiftOp& Q, const Evaluator& f,
                              long alpha, long beta, const Proviso& delta, long n_lo,
                              long n_hi) {
    Evaluator g = [Q, f](long n, long k) { return Q.apply(f, n, k); };
    return ct_sum_check(P, g, f, alpha, beta, delta, n_lo, n_hi);
}

}  // namespace apery
