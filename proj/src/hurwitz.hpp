/*
   Copyright 2026 zetalab developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <vector>

#include "bigreal.hpp"
#include "rational.hpp"

namespace zetalab {

/*
 * zeta(k, x) = sum_{n>=0} (n+x)^{-k} for integer k >= 2 and rational
 * 0 < x <= 1, with absolute error at most 2^(1-precision_bits).
 *
 * Euler-Maclaurin: a direct partial sum to N, the integral and half terms,
 * then Bernoulli corrections until the first omitted correction -- which
 * rigorously bounds the remainder for this completely monotone summand --
 * drops below target.  N doubles if the corrections stall.
 */
BigReal hurwitz_zeta(long k, const Rational& x, long precision_bits);

BigReal riemann_zeta(long k, long precision_bits);

/*
 * Li_m(zeta_q^a).  For m >= 2 uses the Hurwitz decomposition
 * q^{-m} sum_b zeta_q^{ab} zeta(m, b/q); for m = 1 evaluates -log(1 - z),
 * rejecting z = 1.
 */
BigComplex polylog_at_root(long m, long q, long a, long precision_bits);

/*
 * P_k with d^{k-1}/dz^{k-1} (pi cot pi z) = pi^k P_k(cot pi z); integer
 * coefficients, ascending degree.  Recurrence P_{k+1} = -(1+c^2) P_k'.
 */
struct CotDerivativePolynomial {
    long order;
    std::vector<mpz_class> coefficients;

    BigReal evaluate(const BigReal& c) const;
};

CotDerivativePolynomial cot_derivative(long k);

/* cot(pi a / q), 0 < a/q < 1 */
BigReal cot_pi_rational(long a, long q, long precision_bits);

/*
 * Right-hand side of the reflection identity
 *   zeta(k,a/q) + (-1)^k zeta(k,1-a/q)
 *     = ((-1)^{k-1}/(k-1)!) d^{k-1}/dz^{k-1} (pi cot pi z) |_{z=a/q},
 * for 1 <= a < q/2, gcd(a,q) = 1, k >= 2.
 */
BigReal reflection_value(long k, long a, long q, long precision_bits);

/* exact rational zeta(2m) / pi^(2m) */
Rational even_zeta_exact(long m);

}  // namespace zetalab
