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
#include "cyclotomic.hpp"
#include "rational.hpp"

namespace zetalab {

/*
 * Rational-valued function on Z with period q.  Values are stored for
 * arguments 1..q; the entry for q carries the residue-0 value, matching
 * the f(q) convention used throughout the L-function identities.
 */
struct PeriodicFunction {
    long period = 1;
    std::vector<Rational> values{Rational(0)};  // values[a-1] = f(a), a = 1..q

    PeriodicFunction() = default;
    PeriodicFunction(long q, std::vector<Rational> vals);

    static PeriodicFunction constant(long q, const Rational& c);
    static PeriodicFunction indicator(long q, long residue);

    const Rational& at(long n) const;
    Rational max_abs() const;

    friend bool operator==(const PeriodicFunction& a, const PeriodicFunction& b) {
        return a.period == b.period && a.values == b.values;
    }
};

struct FourierCoefficients {
    long period = 1;
    std::vector<CyclotomicNumber> coefficients;  // [n-1] = fhat(n), n = 1..q
};

/* fhat(n) = (1/q) sum_a f(a) zeta_q^{-an}, exact in Q(zeta_q) */
FourierCoefficients fourier_transform(const PeriodicFunction& f);

/* f(n) = sum_a Fhat(a) zeta_q^{an}; errors out if any value fails to be
 * rational (the input was not the transform of a rational function) */
PeriodicFunction fourier_inverse(const FourierCoefficients& F);

/* f_h(n) = f(n h^{-1} mod q) for gcd(h, q) = 1 */
PeriodicFunction twist(const PeriodicFunction& f, long h);

/* prod_{p | q} (1 - p^{-k}), exact */
Rational euler_factor_product(long q, long k);

/*
 * The distinguished function with f(q) = c,
 * f(a) = -c q^{-k} / prod_{p|q}(1 - p^{-k}) on coprime residues, zero on
 * the rest: the one rational shape whose L(k, .) vanishes identically.
 */
PeriodicFunction degenerate_function(long q, long k, const Rational& c);

enum class LValueMethod { kHurwitz, kSeries };

/*
 * L(k, f) = sum f(n)/n^k for k >= 2, absolute error <= 2^(1-precision).
 * kHurwitz evaluates the exact finite combination q^{-k} sum_a f(a)
 * zeta(k, a/q); kSeries sums the Dirichlet series directly with the
 * crude tail bound max|f| q N^{1-k}/(k-1) and refuses precision targets
 * it cannot reach at desk scale.
 */
BigReal l_value(const PeriodicFunction& f, long k, long precision_bits,
                LValueMethod method = LValueMethod::kHurwitz);

struct Eq1Term {
    long residue;
    Rational bracket;     // f(a) + f(q) q^{-k} / prod(1 - p^{-k})
    BigReal hurwitz;      // zeta(k, a/q)
};

/*
 * The bracket decomposition of L(k, f) over coprime residues, valid for
 * f vanishing on residues with 1 < gcd(a, q) < q.
 */
std::vector<Eq1Term> eq1_decomposition(const PeriodicFunction& f, long k,
                                       long precision_bits);

}  // namespace zetalab
