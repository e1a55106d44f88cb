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

#include "hurwitz.hpp"

#include <algorithm>

#include "bernoulli.hpp"
#include "errors.hpp"
#include "numbers.hpp"

namespace zetalab {

namespace {

/* One Euler-Maclaurin evaluation attempt at fixed split point N and
 * working precision W.  Returns false if the correction terms stall
 * before reaching the target error. */
bool euler_maclaurin(long k, const Rational& x, long N, long W, long target_exp,
                     BigReal& out) {
    BigReal sum(0, W);
    for (long n = 0; n < N; ++n) {
        BigReal base = BigReal::from_rational(x + Rational(n), W);
        sum = sum + base.pow_si(-k);
    }
    BigReal nx = BigReal::from_rational(x + Rational(N), W);
    BigReal u = BigReal(1, W) / nx;
    BigReal u2 = u * u;
    // integral and half terms
    sum = sum + u.pow_si(k - 1) / BigReal(k - 1, W);
    sum = sum + u.pow_si(k).mul_2exp(-1);

    // corrections  B_{2j}/(2j)! (k)_{2j-1} (N+x)^{-(k+2j-1)}
    mpz_class pochhammer(k);                  // (k)(k+1)...(k+2j-2)
    mpz_class fact = 2;                       // (2j)!
    BigReal power = u.pow_si(k + 1);          // (N+x)^{-(k+2j-1)}
    long prev_mag = BigReal::kExact;
    for (long j = 1;; ++j) {
        Rational coef = bernoulli_number(2 * j) * Rational(pochhammer, fact);
        BigReal term = BigReal::from_rational(coef, W) * power;
        long mag = term.upper_mag();
        if (mag != BigReal::kExact && mag <= target_exp) {
            // first omitted correction bounds the remainder
            out = sum.with_extra_error(mag);
            return true;
        }
        if (prev_mag != BigReal::kExact && mag >= prev_mag) return false;  // stalled
        prev_mag = mag;
        sum = sum + term;
        // advance to j+1
        pochhammer *= (k + 2 * j - 1);
        pochhammer *= (k + 2 * j);
        fact *= (2 * j + 1);
        fact *= (2 * j + 2);
        power = power * u2;
        if (j > 4 * N + 64) return false;
    }
}

}  // namespace

BigReal hurwitz_zeta(long k, const Rational& x, long precision_bits) {
    if (k < 2) throw DomainError("hurwitz_zeta: k must be at least 2");
    if (precision_bits < 2) throw InvalidArgument("hurwitz_zeta: precision too small");
    if (x <= Rational(0) || x > Rational(1))
        throw DomainError("hurwitz_zeta: x must lie in (0, 1]");

    long W = precision_bits + 96;
    long N = std::max({16L, 2 * k, (precision_bits * 3 + 40) / 8});
    for (int attempt = 0; attempt < 24; ++attempt) {
        long target = -precision_bits - 8;
        BigReal out;
        if (euler_maclaurin(k, x, N, W, target, out) && out.error_exp() <= 1 - precision_bits)
            return out;
        N *= 2;
        W += W / 2;
    }
    throw Error("hurwitz_zeta: failed to converge (internal)");
}

BigReal riemann_zeta(long k, long precision_bits) {
    return hurwitz_zeta(k, Rational(1), precision_bits);
}

BigComplex polylog_at_root(long m, long q, long a, long precision_bits) {
    if (q < 1) throw InvalidArgument("polylog_at_root: q must be positive");
    if (m < 1) throw DomainError("polylog_at_root: order must be at least 1");
    long r = mod_reduce(a, q);
    if (m == 1) {
        if (r == 0) throw DomainError("polylog_at_root: Li_1 diverges at z = 1");
        for (long W = precision_bits + 64;; W *= 2) {
            BigComplex z = BigComplex::unit_root(q, r, W);
            BigComplex w = BigComplex(BigReal(1, W), BigReal(0, W)) - z;
            BigComplex res = -w.log_principal();
            if (res.error_exp() <= 1 - precision_bits) return res;
        }
    }
    if (r == 0) return BigComplex(riemann_zeta(m, precision_bits));
    for (long W = precision_bits + 64;; W *= 2) {
        BigComplex acc(BigReal(0, W), BigReal(0, W));
        for (long b = 1; b <= q; ++b) {
            BigReal h = hurwitz_zeta(m, Rational(b, q), W);
            acc = acc + h * BigComplex::unit_root(q, r * b, W);
        }
        BigReal scale = BigReal::from_rational(Rational(1, q).pow(m), W);
        BigComplex res = scale * acc;
        if (res.error_exp() <= 1 - precision_bits) return res;
    }
}

CotDerivativePolynomial cot_derivative(long k) {
    if (k < 1) throw InvalidArgument("cot_derivative: order must be at least 1");
    CotDerivativePolynomial p;
    p.order = 1;
    p.coefficients = {mpz_class(0), mpz_class(1)};  // P_1(c) = c
    while (p.order < k) {
        // P_{k+1} = -(1 + c^2) P_k'
        std::vector<mpz_class> d(p.coefficients.size() - 1);
        for (size_t i = 1; i < p.coefficients.size(); ++i)
            d[i - 1] = p.coefficients[i] * static_cast<long>(i);
        std::vector<mpz_class> next(d.size() + 2, mpz_class(0));
        for (size_t i = 0; i < d.size(); ++i) {
            next[i] -= d[i];
            next[i + 2] -= d[i];
        }
        p.coefficients = std::move(next);
        ++p.order;
    }
    return p;
}

BigReal CotDerivativePolynomial::evaluate(const BigReal& c) const {
    BigReal acc(0, c.precision());
    for (long i = static_cast<long>(coefficients.size()) - 1; i >= 0; --i)
        acc = acc * c + BigReal::from_rational(Rational(coefficients[i]), c.precision());
    return acc;
}

BigReal cot_pi_rational(long a, long q, long precision_bits) {
    long r = mod_reduce(a, q);
    if (r == 0) throw DomainError("cot_pi_rational: pole at integer argument");
    for (long W = precision_bits + 64;; W *= 2) {
        BigReal theta = BigReal::pi(W) * BigReal::from_rational(Rational(r, q), W);
        BigReal c = theta.cot();
        if (c.error_exp() <= 1 - precision_bits) return c;
    }
}

BigReal reflection_value(long k, long a, long q, long precision_bits) {
    if (k < 2) throw DomainError("reflection_value: k must be at least 2");
    if (a < 1 || 2 * a >= q) throw DomainError("reflection_value: need 1 <= a < q/2");
    if (gcd_long(a, q) != 1) throw DomainError("reflection_value: a must be coprime to q");
    CotDerivativePolynomial p = cot_derivative(k);
    Rational front = Rational((k - 1) % 2 ? -1 : 1, 1) / Rational(factorial(k - 1));
    for (long W = precision_bits + 64;; W *= 2) {
        BigReal c = cot_pi_rational(a, q, W);
        BigReal value = p.evaluate(c) * BigReal::pi(W).pow_si(k) *
                        BigReal::from_rational(front, W);
        if (value.error_exp() <= 1 - precision_bits) return value;
    }
}

Rational even_zeta_exact(long m) {
    if (m < 1) throw InvalidArgument("even_zeta_exact: m must be at least 1");
    // zeta(2m) = (2 pi)^{2m} |B_{2m}| / (2 (2m)!)
    Rational b = bernoulli_number(2 * m).abs();
    mpz_class two_pow = mpz_class(1) << (2 * m - 1);
    return Rational(two_pow) * b / Rational(factorial(2 * m));
}

}  // namespace zetalab
