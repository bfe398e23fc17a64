#pragma once

// Exact integer/rational kernel: factorials, generalized binomials,
// multinomials, p-adic valuations, truncated logarithms, lcm prefixes
// and desk-scale primality.

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace apery {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0)
        return Rat(int_pow(num(base), static_cast<unsigned long>(e)),
                   int_pow(den(base), static_cast<unsigned long>(e)));
    if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
    return Rat(int_pow(den(base), static_cast<unsigned long>(-e)),
               int_pow(num(base), static_cast<unsigned long>(-e)));
}

namespace detail {
// Memo tables are filled under a lock; lookups of already-present
// prefixes stay consistent because entries are append-only.
inline std::mutex& numkit_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace detail

inline const Int& factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    static std::vector<Int> table{1};
    std::lock_guard<std::mutex> lock(detail::numkit_mutex());
    while (static_cast<long>(table.size()) <= n)
        table.push_back(table.back() * Int(table.size()));
    return table[static_cast<std::size_t>(n)];
}

// Binomial coefficient extended to all integers: C(n,k) = 0 for k < 0 or
// (n >= 0 and k > n); for n < 0, C(n,k) = (-1)^k C(k-n-1, k).
inline Int binomial(long n, long k) {
    if (k < 0) return 0;
    if (n < 0) {
        Int c = binomial(k - n - 1, k);
        return (k % 2 == 0) ? c : -c;
    }
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// Product-of-binomials form: prod_i C(l_1 + ... + l_i, l_i).
inline Int multinomial(const std::vector<long>& parts) {
    Int r = 1;
    long acc = 0;
    for (long p : parts) {
        if (p < 0) throw std::domain_error("multinomial: negative part");
        acc += p;
        r *= binomial(acc, p);
    }
    return r;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long> primes_upto(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
    for (long i = 2; i <= n; ++i) {
        if (!sieve[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (long j = 2 * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
    }
    return out;
}

inline long p_adic_val(long p, const Int& m) {
    if (!is_prime(p)) throw std::domain_error("p_adic_val: p is not prime");
    if (m == 0) throw std::domain_error("p_adic_val: zero argument");
    Int v = abs(m);
    long e = 0;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    return e;
}

// Greatest a with base^a <= m.
inline long trunc_log(long base, const Int& m) {
    if (base < 2) throw std::domain_error("trunc_log: base < 2");
    if (m <= 0) throw std::domain_error("trunc_log: m < 1");
    long a = 0;
    Int p = base;
    while (p <= m) {
        p *= base;
        ++a;
    }
    return a;
}

// v_p(n!) = sum_{i=1}^{j} floor(n / p^i), valid when n < p^(j+1).
inline long val_factorial(long p, long n, long j) {
    if (!is_prime(p)) throw std::domain_error("val_factorial: p is not prime");
    if (n < 0 || j < 0) throw std::domain_error("val_factorial: negative argument");
    if (Int(n) >= int_pow(Int(p), static_cast<unsigned long>(j) + 1))
        throw std::domain_error("val_factorial: requires n < p^(j+1)");
    long total = 0;
    Int q = p;
    for (long i = 1; i <= j; ++i) {
        total += static_cast<long>(Int(n) / q);
        q *= p;
    }
    return total;
}

// ell_n = lcm(1..n), with ell_0 = 1; memoized prefix table.
inline const Int& lcm_upto(long n) {
    if (n < 0) throw std::domain_error("lcm_upto: negative argument");
    static std::vector<Int> table{1};
    std::lock_guard<std::mutex> lock(detail::numkit_mutex());
    while (static_cast<long>(table.size()) <= n) {
        Int next(table.size());
        table.push_back(lcm(table.back(), next));
    }
    return table[static_cast<std::size_t>(n)];
}

inline Int int_sqrt_floor(const Int& v) {
    if (v < 0) throw std::domain_error("int_sqrt_floor: negative argument");
    return sqrt(v);
}

// floor / ceil of an exact rational.
inline Int rat_floor(const Rat& q) {
    Int n = num(q), d = den(q);
    Int f = n / d;
    if (n < 0 && f * d != n) --f;
    return f;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

}  // namespace apery
