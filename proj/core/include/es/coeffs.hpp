#ifndef ES_COEFFS_HPP
#define ES_COEFFS_HPP

#include "es/rational.hpp"

namespace es {

// closed-form coefficients showing up in the depth-1 reductions

// C_r = 2^{2r+1} / (2r+1)
inline Rat coeff_C(long r) { return pow2(2 * r + 1) / Rat(2 * r + 1); }

// A_r^{a,b} = 2(-delta_{r=a} + C(2r,2a)) 2^{2r}/(2^{2r}-1) - 2 C(2r,2b+1)
inline Rat coeff_A(long r, long a, long b) {
    Rat lead = Rat(binom(2 * r, 2 * a)) - (r == a ? Rat(1) : Rat(0));
    return 2 * lead * pow2(2 * r) / (pow2(2 * r) - 1) - 2 * Rat(binom(2 * r, 2 * b + 1));
}
// the depth-1 reduction of zs(2^a,3,2^b) uses r = a+b+1
inline Rat coeff_A(long a, long b) { return coeff_A(a + b + 1, a, b); }

// B^{a,b} = 1 - (2 / C_{a+b+1}) C(2a+2b+2, 2b+1)
inline Rat coeff_B(long a, long b) {
    long r = a + b + 1;
    return Rat(1) - Rat(2) / coeff_C(r) * Rat(binom(2 * r, 2 * b + 1));
}

// Btilde^{a,b} = B^{a,b} C_{a+b+1} - A^{a,b}
inline Rat coeff_Bt(long a, long b) { return coeff_B(a, b) * coeff_C(a + b + 1) - coeff_A(a, b); }

// c(r) = 2^{2r+1} / (1 - 2^{2r})
inline Rat coeff_c(long r) { return pow2(2 * r + 1) / (Rat(1) - pow2(2 * r)); }

} // namespace es

#endif
