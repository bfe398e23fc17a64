#pragma once

// Closed-form exact evaluators for the sequences of the zeta(3)
// irrationality argument: z, lambda, the summand chain d/s/u/v, the
// pair (a, b), the telescoping certificates U and V, the Casoratian w
// and the growth ratio rho. All values are memoized.

#include "apery/numkit.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace apery {
namespace seq {

// Each table has its own mutex: fill routines call other sequence
// evaluators, so a shared lock would self-deadlock.

// z_n = sum_{m=1}^n 1/m^3, z_0 = 0.
inline Rat z(long n) {
    if (n < 0) throw std::domain_error("z: negative index");
    static std::vector<Rat> table{0};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<long>(table.size()) <= n) {
        long m = static_cast<long>(table.size());
        table.push_back(table.back() + Rat(Int(1), Int(m) * m * m));
    }
    return table[static_cast<std::size_t>(n)];
}

// lambda_{n,k} = C(n,k)^2 C(n+k,k)^2, zero off 0 <= k <= n.
inline Int lambda(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int c = binomial(n, k) * binomial(n + k, k);
    return c * c;
}

// d_{n,m} = (-1)^{m+1} / (2 m^3 C(n,m) C(n+m,m)), for 1 <= m <= n.
inline Rat d(long n, long m) {
    if (m < 1 || m > n) throw std::domain_error("d: requires 1 <= m <= n");
    Int denom = Int(2) * m * m * m * binomial(n, m) * binomial(n + m, m);
    return (m % 2 == 1) ? Rat(1, denom) : Rat(-1, denom);
}

// s_{n,k} = sum_{m=1}^k d_{n,m} (empty sum for k <= 0).
inline Rat s(long n, long k) {
    if (k > n) throw std::domain_error("s: requires k <= n");
    static std::map<std::pair<long, long>, Rat> table;
    static std::mutex mtx;
    if (k <= 0) return 0;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = table.find({n, k});
    if (it != table.end()) return it->second;
    Rat acc = 0;
    long start = 1;
    // Extend from the largest cached prefix for this n.
    for (long j = k - 1; j >= 1; --j) {
        auto jt = table.find({n, j});
        if (jt != table.end()) {
            acc = jt->second;
            start = j + 1;
            break;
        }
    }
    for (long m = start; m <= k; ++m) {
        acc += d(n, m);
        table[{n, m}] = acc;
    }
    return acc;
}

// u_{n,k} = z_n + s_{n,k}; v_{n,k} = lambda_{n,k} u_{n,k} (the b summand),
// zero off 0 <= k <= n.
inline Rat u(long n, long k) { return z(n) + s(n, k); }

inline Rat v(long n, long k) {
    if (k < 0 || k > n) return 0;
    return Rat(lambda(n, k)) * u(n, k);
}

inline Int a(long n) {
    if (n < 0) throw std::domain_error("a: negative index");
    static std::vector<Int> table;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<long>(table.size()) <= n) {
        long m = static_cast<long>(table.size());
        Int acc = 0;
        for (long k = 0; k <= m; ++k) acc += lambda(m, k);
        table.push_back(acc);
    }
    return table[static_cast<std::size_t>(n)];
}

// b_n = a_n z_n + sum_{k=1}^n lambda_{n,k} s_{n,k}; evaluated from the
// closed form, never from the recurrence.
inline Rat b(long n) {
    if (n < 0) throw std::domain_error("b: negative index");
    static std::vector<Rat> table;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<long>(table.size()) <= n) {
        long m = static_cast<long>(table.size());
        Rat acc = Rat(a(m)) * z(m);
        Rat sk = 0;
        for (long k = 1; k <= m; ++k) {
            sk += d(m, k);
            acc += Rat(lambda(m, k)) * sk;
        }
        table.push_back(acc);
    }
    return table[static_cast<std::size_t>(n)];
}

// U_{n,k} = 4(2n+1)(k(2k+1) - (2n+1)^2) lambda_{n,k}.
inline Int U(long n, long k) {
    Int t = Int(2) * n + 1;
    return Int(4) * t * (Int(k) * (2 * k + 1) - t * t) * lambda(n, k);
}

// V_{n,k} = U_{n,k}(z_n + s_{n,k}) + 5(2n+1)k(-1)^{k-1}/(n(n+1)) C(n,k)C(n+k,k),
// zero off 0 <= k <= n; requires n >= 1.
inline Rat V(long n, long k) {
    if (n < 1) throw std::domain_error("V: requires n >= 1");
    if (k < 0 || k > n) return 0;
    Rat main = Rat(U(n, k)) * u(n, k);
    Int sign = (k % 2 == 0) ? -1 : 1;  // (-1)^(k-1)
    Rat corr = Rat(Int(5) * (2 * n + 1) * k * sign * binomial(n, k) * binomial(n + k, k),
                   Int(n) * (n + 1));
    return main + corr;
}

// Casoratian w_n = b_{n+1} a_n - a_{n+1} b_n.
inline Rat casoratian_w(long n) { return b(n + 1) * Rat(a(n)) - Rat(a(n + 1)) * b(n); }

// rho_n = a_{n+1} / a_n.
inline Rat rho(long n) { return Rat(a(n + 1), a(n)); }

inline std::function<Rat(long, long)> lambda_evaluator() {
    return [](long n, long k) { return Rat(lambda(n, k)); };
}
inline std::function<Rat(long, long)> v_evaluator() {
    return [](long n, long k) { return v(n, k); };
}
inline std::function<Rat(long, long)> binom_evaluator() {
    return [](long n, long k) { return Rat(binomial(n, k)); };
}

}  // namespace seq
}  // namespace apery
