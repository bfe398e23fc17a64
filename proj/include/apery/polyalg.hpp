#pragma once

// Sparse multivariate polynomials and reduced rational functions over
// exact rationals. Equality is decided by normalization: subtract and
// check for the zero polynomial. Reduction uses content/primitive-part
// gcd over the integers (primitive pseudo-remainder sequences).

#include "apery/numkit.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace apery {

struct SingularPoint : std::runtime_error {
    explicit SingularPoint(const std::string& what) : std::runtime_error(what) {}
};
struct SupportViolation : std::runtime_error {
    explicit SupportViolation(const std::string& what) : std::runtime_error(what) {}
};

// Fixed global variable order: n, then k, then lexicographic.
inline bool var_less(const std::string& a, const std::string& b) {
    auto rank = [](const std::string& v) { return v == "n" ? 0 : v == "k" ? 1 : 2; };
    int ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
}

using Exponents = std::vector<int>;

// Graded lexicographic order on exponent vectors of equal length.
inline bool grlex_less(const Exponents& a, const Exponents& b) {
    long ta = 0, tb = 0;
    for (int e : a) ta += e;
    for (int e : b) tb += e;
    if (ta != tb) return ta < tb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

class MultiPoly {
  public:
    MultiPoly() = default;

    static MultiPoly constant(const Rat& c) {
        MultiPoly p;
        if (c != 0) p.terms_[{}] = c;
        return p;
    }
    static MultiPoly variable(const std::string& name) {
        MultiPoly p;
        p.vars_ = {name};
        p.terms_[{1}] = 1;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    Rat constant_value() const {
        if (!is_constant()) throw std::logic_error("constant_value: not a constant");
        return terms_.empty() ? Rat(0) : terms_.begin()->second;
    }

    long total_degree() const {
        long d = 0;
        for (const auto& [e, c] : terms_) {
            long t = 0;
            for (int x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    long degree_in(const std::string& v) const {
        auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end()) return 0;
        std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
        long d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[idx]));
        return d;
    }

    // Grlex-leading term.
    std::pair<Exponents, Rat> leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (grlex_less(best->first, it->first)) best = it;
        return *best;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = aligned(a, b);
        for (const auto& [e, c] : y.terms_) {
            auto [it, fresh] = x.terms_.emplace(e, c);
            if (!fresh) it->second += c;
        }
        x.compress();
        return x;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = aligned(a, b);
        MultiPoly r;
        r.vars_ = x.vars_;
        for (const auto& [ea, ca] : x.terms_)
            for (const auto& [eb, cb] : y.terms_) {
                Exponents e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.terms_[e] += ca * cb;
            }
        r.compress();
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const Rat& c) {
        return a * MultiPoly::constant(c);
    }
    friend MultiPoly operator*(const Rat& c, const MultiPoly& a) { return a * c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return (a - b).is_zero();
    }

    MultiPoly pow(long e) const {
        if (e < 0) throw std::domain_error("MultiPoly::pow: negative exponent");
        MultiPoly r = constant(1), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Rat eval(const std::map<std::string, Rat>& point) const {
        Rat total = 0;
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = point.find(vars_[i]);
                if (it == point.end())
                    throw std::invalid_argument("eval: unbound variable " + vars_[i]);
                t *= rat_pow(it->second, e[i]);
            }
            total += t;
        }
        return total;
    }

    // Substitute one variable by a polynomial.
    MultiPoly subst(const std::string& v, const MultiPoly& repl) const {
        auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end()) return *this;
        std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
        MultiPoly total;
        for (const auto& [e, c] : terms_) {
            MultiPoly t = constant(c);
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                MultiPoly base = (i == idx) ? repl : variable(vars_[i]);
                t = t * base.pow(e[i]);
            }
            total = total + t;
        }
        return total;
    }

    MultiPoly shifted(const std::string& v, long offset) const {
        if (offset == 0) return *this;
        return subst(v, variable(v) + constant(Rat(offset)));
    }

    // Splits the polynomial as content * primitive where primitive has
    // coprime integer coefficients and positive grlex-leading coefficient.
    std::pair<Rat, MultiPoly> primitive_parts() const {
        if (is_zero()) return {Rat(0), MultiPoly()};
        Int g = 0, l = 1;
        for (const auto& [e, c] : terms_) {
            g = gcd(g, num(c));
            l = lcm(l, den(c));
        }
        Rat content(g, l);
        if (leading_term().second < 0) content = -content;
        MultiPoly prim = *this;
        for (auto& [e, c] : prim.terms_) c /= content;
        return {content, prim};
    }

    MultiPoly primitive_part() const { return primitive_parts().second; }

    // Exact division by grlex lead-term reduction; nullopt when b does not
    // divide *this.
    friend std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
        if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
        MultiPoly q, r = a;
        while (!r.is_zero()) {
            // Realign every round: arithmetic normalizes away variables
            // that cancel, so the exponent vectors can change length.
            auto [x, y] = aligned(r, b);
            auto [lr, cr] = x.leading_term();
            auto [lb, cb] = y.leading_term();
            Exponents e(lr.size());
            for (std::size_t i = 0; i < lr.size(); ++i) {
                e[i] = lr[i] - lb[i];
                if (e[i] < 0) return std::nullopt;
            }
            MultiPoly mono;
            mono.vars_ = x.vars_;
            mono.terms_[e] = cr / cb;
            mono.compress();
            q = q + mono;
            r = x - mono * y;
        }
        return q;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exponents, Rat>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(),
                  [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : ts) {
            Rat cc = c;
            if (first) {
                if (cc < 0) {
                    os << "-";
                    cc = -cc;
                }
            } else {
                os << (cc < 0 ? " - " : " + ");
                if (cc < 0) cc = -cc;
            }
            first = false;
            bool any_var = false;
            std::ostringstream vs;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                if (any_var) vs << "*";
                vs << vars_[i];
                if (e[i] > 1) vs << "^" << e[i];
                any_var = true;
            }
            if (!any_var) {
                os << cc;
            } else {
                if (cc != 1) os << cc << "*";
                os << vs.str();
            }
        }
        return os.str();
    }

  private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rat> terms_;

    void compress() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == 0) ? terms_.erase(it) : std::next(it);
        // Drop variables that no longer occur so equal polynomials have
        // identical representations.
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) used[i] = true;
        if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
        std::vector<std::string> nv;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) nv.push_back(vars_[i]);
        std::map<Exponents, Rat> nt;
        for (const auto& [e, c] : terms_) {
            Exponents ne;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (used[i]) ne.push_back(e[i]);
            nt[ne] = c;
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    // Rewrites both operands over the merged, canonically ordered variable
    // list.
    static std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ == b.vars_) return {a, b};
        std::vector<std::string> merged = a.vars_;
        for (const auto& v : b.vars_)
            if (std::find(merged.begin(), merged.end(), v) == merged.end())
                merged.push_back(v);
        std::sort(merged.begin(), merged.end(), var_less);
        return {a.remapped(merged), b.remapped(merged)};
    }

    MultiPoly remapped(const std::vector<std::string>& target) const {
        MultiPoly r;
        r.vars_ = target;
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i)
            pos[i] = static_cast<std::size_t>(
                std::find(target.begin(), target.end(), vars_[i]) - target.begin());
        for (const auto& [e, c] : terms_) {
            Exponents ne(target.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            r.terms_[ne] = c;
        }
        return r;
    }

    friend MultiPoly poly_gcd(const MultiPoly&, const MultiPoly&);
};

namespace detail {

// Univariate view of a polynomial in one chosen variable, with
// MultiPoly coefficients in the remaining variables.
inline std::map<long, MultiPoly> coeffs_in(const MultiPoly& p, const std::string& x) {
    std::map<long, MultiPoly> out;
    auto it = std::find(p.vars().begin(), p.vars().end(), x);
    if (it == p.vars().end()) {
        if (!p.is_zero()) out[0] = p;
        return out;
    }
    std::size_t idx = static_cast<std::size_t>(it - p.vars().begin());
    for (const auto& [e, c] : p.terms()) {
        MultiPoly mono = MultiPoly::constant(c);
        for (std::size_t i = 0; i < p.vars().size(); ++i)
            if (i != idx && e[i] != 0) mono = mono * MultiPoly::variable(p.vars()[i]).pow(e[i]);
        auto [jt, fresh] = out.emplace(e[idx], mono);
        if (!fresh) jt->second = jt->second + mono;
    }
    for (auto jt = out.begin(); jt != out.end();)
        jt = jt->second.is_zero() ? out.erase(jt) : std::next(jt);
    return out;
}

inline MultiPoly from_coeffs(const std::map<long, MultiPoly>& cs, const std::string& x) {
    MultiPoly r;
    for (const auto& [d, c] : cs) r = r + c * MultiPoly::variable(x).pow(d);
    return r;
}

inline long deg_of(const std::map<long, MultiPoly>& cs) {
    return cs.empty() ? -1 : cs.rbegin()->first;
}

}  // namespace detail

// Multivariate gcd over Q by recursive primitive pseudo-remainder
// sequences; result is integer-primitive with positive leading
// coefficient (1 for coprime inputs).
inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? MultiPoly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(1);

    // Main variable: last canonical variable occurring in either operand.
    std::vector<std::string> merged = a.vars();
    for (const auto& v : b.vars())
        if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
    std::sort(merged.begin(), merged.end(), var_less);
    const std::string x = merged.back();

    auto ca = detail::coeffs_in(a, x);
    auto cb = detail::coeffs_in(b, x);

    auto content = [](const std::map<long, MultiPoly>& cs) {
        MultiPoly g;
        for (const auto& [d, c] : cs) g = poly_gcd(g, c);
        return g;
    };

    if (detail::deg_of(ca) == 0 && a.degree_in(x) == 0)
        return poly_gcd(a, content(cb));
    if (detail::deg_of(cb) == 0 && b.degree_in(x) == 0)
        return poly_gcd(content(ca), b);

    MultiPoly cont_a = content(ca), cont_b = content(cb);
    MultiPoly cont_g = poly_gcd(cont_a, cont_b);

    auto divide_all = [](std::map<long, MultiPoly> cs, const MultiPoly& d) {
        for (auto& [deg, c] : cs) c = *divide_exact(c, d);
        return cs;
    };
    auto A = divide_all(ca, cont_a);
    auto B = divide_all(cb, cont_b);
    if (detail::deg_of(A) < detail::deg_of(B)) std::swap(A, B);

    // Full pseudo-remainder lc(B)^(delta+1) A mod B in x.
    auto prem = [](std::map<long, MultiPoly> R, const std::map<long, MultiPoly>& B,
                   long delta) {
        long db = detail::deg_of(B);
        const MultiPoly& lcB = B.rbegin()->second;
        long mults = 0;
        while (detail::deg_of(R) >= db) {
            long dr = detail::deg_of(R);
            MultiPoly lcR = R.rbegin()->second;
            std::map<long, MultiPoly> next;
            for (auto& [d, c] : R)
                if (d != dr) next[d] = c * lcB;
            for (const auto& [d, c] : B)
                if (d != db) {
                    auto [it, fresh] = next.emplace(d + dr - db, -(c * lcR));
                    if (!fresh) it->second = it->second - c * lcR;
                }
            for (auto it = next.begin(); it != next.end();)
                it = it->second.is_zero() ? next.erase(it) : std::next(it);
            R = std::move(next);
            ++mults;
        }
        for (; mults < delta + 1; ++mults)
            for (auto& [d, c] : R) c = c * lcB;
        return R;
    };

    // Subresultant pseudo-remainder sequence (Brown/Collins): each
    // remainder divides exactly by g h^delta, keeping coefficient
    // growth polynomial where the primitive sequence would recompute
    // large contents at every step.
    MultiPoly g = MultiPoly::constant(1), h = MultiPoly::constant(1);
    while (true) {
        long delta = detail::deg_of(A) - detail::deg_of(B);
        auto R = prem(A, B, delta);
        if (detail::deg_of(R) < 0) {
            MultiPoly out = detail::from_coeffs(B, x);
            auto [ic, prim] = out.primitive_parts();
            (void)ic;
            // B may still carry polynomial content in x; strip it.
            auto bc = content(B);
            prim = *divide_exact(prim, bc.is_zero() ? MultiPoly::constant(1) : bc);
            return (cont_g * prim).primitive_part();
        }
        if (detail::deg_of(R) == 0) return cont_g.primitive_part();
        MultiPoly divisor = g * h.pow(delta);
        std::map<long, MultiPoly> next;
        for (auto& [d, c] : R) {
            auto q = divide_exact(c, divisor);
            if (!q) throw std::logic_error("poly_gcd: inexact subresultant division");
            next[d] = *q;
        }
        g = B.rbegin()->second;
        if (delta > 0) {
            auto q = divide_exact(g.pow(delta), h.pow(delta - 1));
            if (!q) throw std::logic_error("poly_gcd: inexact h update");
            h = *q;
        }
        A = std::move(B);
        B = std::move(next);
    }
}

// Reduced rational function: denominator is integer-primitive with a
// positive grlex-leading coefficient, numerator carries the scalar.
class RatFun {
  public:
    RatFun() : num_(MultiPoly::constant(0)), den_(MultiPoly::constant(1)) {}
    RatFun(MultiPoly numerator, MultiPoly denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        reduce();
    }
    RatFun(const Rat& c) : num_(MultiPoly::constant(c)), den_(MultiPoly::constant(1)) {}
    RatFun(const MultiPoly& p) : num_(p), den_(MultiPoly::constant(1)) {}
    static RatFun variable(const std::string& v) { return RatFun(MultiPoly::variable(v)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFun pow(long e) const {
        if (e < 0) return RatFun(Rat(1)) / pow(-e);
        RatFun r(Rat(1)), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    RatFun subst(const std::string& v, const MultiPoly& repl) const {
        return RatFun(num_.subst(v, repl), den_.subst(v, repl));
    }
    RatFun shifted(const std::string& v, long offset) const {
        if (offset == 0) return *this;
        return RatFun(num_.shifted(v, offset), den_.shifted(v, offset));
    }

    Rat eval(const std::map<std::string, Rat>& point) const {
        Rat d = den_.eval(point);
        if (d == 0) throw SingularPoint("rational function denominator vanishes");
        return num_.eval(point) / d;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string ns = num_.str(), ds = den_.str();
        auto wrap = [](const MultiPoly& p, const std::string& s) {
            return (p.terms().size() > 1) ? "(" + s + ")" : s;
        };
        return wrap(num_, ns) + "/" + wrap(den_, ds);
    }

  private:
    MultiPoly num_, den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(1);
            return;
        }
        auto [cn, pn] = num_.primitive_parts();
        auto [cd, pd] = den_.primitive_parts();
        MultiPoly g = poly_gcd(pn, pd);
        if (!g.is_constant()) {
            pn = *divide_exact(pn, g);
            pd = *divide_exact(pd, g);
        }
        num_ = pn * (cn / cd);
        den_ = pd;
    }
};

inline bool ratfun_equal_zero(const RatFun& a) { return a.is_zero(); }

// Expansion of (x_1 + ... + x_l)^n; the coefficient of prod x_i^{k_i} is
// multinomial([k_1..k_l]).
inline MultiPoly newton_expand(const std::vector<std::string>& vars, long n) {
    MultiPoly sum;
    for (const auto& v : vars) sum = sum + MultiPoly::variable(v);
    return sum.pow(n);
}

}  // namespace apery
