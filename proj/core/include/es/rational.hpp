#ifndef ES_RATIONAL_HPP
#define ES_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>
#include <cstdint>

namespace es {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) { Rat q(num, den); q.canonicalize(); return q; }

// n choose k, exact
inline Int binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

inline Rat pow2(long e) {
    Rat q;
    if (e >= 0) { Int t; mpz_ui_pow_ui(t.get_mpz_t(), 2, (unsigned long)e); q = t; }
    else        { Int t; mpz_ui_pow_ui(t.get_mpz_t(), 2, (unsigned long)(-e)); q = Rat(1) / Rat(t); }
    return q;
}

inline Rat rpow(const Rat& b, long e) {
    Rat r = 1, a = b;
    long n = e < 0 ? -e : e;
    while (n) { if (n & 1) r *= a; a *= a; n >>= 1; }
    if (e < 0) r = Rat(1) / r;
    return r;
}

// 2-adic valuation; returns huge value for 0 (treated as +infinity)
inline long v2(const Rat& q) {
    if (q == 0) return 1L << 40;
    Rat c = q;
    c.canonicalize();
    long vn = mpz_scan1(c.get_num().get_mpz_t(), 0);
    long vd = mpz_scan1(c.get_den().get_mpz_t(), 0);
    return vn - vd;
}

// lowest-terms printing, explicit sign only when negative
inline std::string rat_str(const Rat& q) {
    Rat c = q; c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Bernoulli numbers B_0..B_n (B_1 = -1/2), classic recurrence
inline std::vector<Rat> bernoulli_upto(int n) {
    std::vector<Rat> B(n + 1);
    for (int m = 0; m <= n; ++m) {
        Rat s = 0;
        for (int k = 0; k < m; ++k) s += Rat(binom(m + 1, k)) * B[k];
        B[m] = -s / Rat(m + 1);
        if (m == 0) B[0] = 1;
    }
    return B;
}

inline Int factorial(long n) { Int r; mpz_fac_ui(r.get_mpz_t(), (unsigned long)n); return r; }

} // namespace es

#endif
