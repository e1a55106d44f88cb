/* Test-only oracles: slow, independent evaluation routes used to freeze
 * expected values.  Nothing here may call the Euler-Maclaurin or
 * convolution paths it is checking. */

#pragma once

#include <cmath>
#include <vector>

#include "bigreal.hpp"
#include "rational.hpp"

namespace zetalab::oracle {

/* zeta(k, x) bracketed by partial sum + integral tail:
 *   S + I <= zeta <= S + I + (T+x)^{-k},  I = (T+x)^{1-k}/(k-1).
 * Returned as a ball centered mid-bracket. */
inline BigReal hurwitz_partial_sum(long k, const Rational& x, long terms, long prec) {
    BigReal s(0, prec);
    for (long n = 0; n < terms; ++n)
        s = s + BigReal::from_rational(x + Rational(n), prec).pow_si(-k);
    BigReal tx = BigReal::from_rational(x + Rational(terms), prec);
    BigReal integral = tx.pow_si(1 - k) / BigReal(k - 1, prec);
    BigReal ftop = tx.pow_si(-k);
    BigReal mid = s + integral + ftop.mul_2exp(-1);
    return mid.with_extra_error(ftop.upper_mag());
}

/* Dirichlet beta via the alternating series: the remainder is bounded by
 * the first omitted term. */
inline BigReal dirichlet_beta_alternating(long k, long terms, long prec) {
    BigReal s(0, prec);
    for (long n = 0; n < terms; ++n) {
        BigReal t = BigReal::from_rational(Rational(1, 2 * n + 1), prec).pow_si(k);
        s = (n % 2 == 0) ? s + t : s - t;
    }
    long bitlen = 64 - __builtin_clzl(2 * terms + 1);
    return s.with_extra_error(-k * (bitlen - 1) + 1);
}

/* Li_m(zeta_q^a) by direct series with the integral tail bound
 * |sum_{n>T} z^n/n^m| <= T^{1-m}/(m-1), m >= 2. */
inline BigComplex polylog_series(long m, long q, long a, long terms, long prec) {
    BigComplex s(BigReal(0, prec), BigReal(0, prec));
    BigComplex z = BigComplex::unit_root(q, a, prec);
    BigComplex zn(BigReal(1, prec), BigReal(0, prec));
    for (long n = 1; n <= terms; ++n) {
        zn = zn * z;
        BigReal c = BigReal::from_rational(Rational(1, n), prec).pow_si(m);
        s = s + c * zn;
    }
    double tail = (1.0 - m) * std::log2(static_cast<double>(terms)) - std::log2(m - 1.0);
    long tail_exp = static_cast<long>(tail) + 2;
    return BigComplex(s.real().with_extra_error(tail_exp),
                      s.imag().with_extra_error(tail_exp));
}

/* double-precision depth-2 MZV via inner tails: good to ~N^(2-s1-s2) */
inline double mzv2_inner_tail(long s1, long s2, long outer_terms) {
    double zs1 = std::riemann_zeta(static_cast<double>(s1));
    double partial = 0.0, total = 0.0;
    for (long n = 1; n <= outer_terms; ++n) {
        partial += std::pow(static_cast<double>(n), -static_cast<double>(s1));
        total += std::pow(static_cast<double>(n), -static_cast<double>(s2)) * (zs1 - partial);
    }
    return total;
}

/* nested loops, length 3, double precision */
inline double mzv3_brute(long s1, long s2, long s3, long top) {
    double total = 0.0;
    for (long n3 = 1; n3 < top; ++n3) {
        double f3 = std::pow(static_cast<double>(n3), -static_cast<double>(s3));
        for (long n2 = n3 + 1; n2 < top; ++n2) {
            double f2 = std::pow(static_cast<double>(n2), -static_cast<double>(s2));
            for (long n1 = n2 + 1; n1 <= top; ++n1)
                total += f3 * f2 * std::pow(static_cast<double>(n1), -static_cast<double>(s1));
        }
    }
    return total;
}

}  // namespace zetalab::oracle
