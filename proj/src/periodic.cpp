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

#include "periodic.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"
#include "hurwitz.hpp"
#include "numbers.hpp"

namespace zetalab {

PeriodicFunction::PeriodicFunction(long q, std::vector<Rational> vals)
    : period(q), values(std::move(vals)) {
    if (q < 1) throw InvalidArgument("PeriodicFunction: period must be positive");
    if (static_cast<long>(values.size()) != q)
        throw InvalidArgument("PeriodicFunction: need exactly q values");
}

PeriodicFunction PeriodicFunction::constant(long q, const Rational& c) {
    return PeriodicFunction(q, std::vector<Rational>(q, c));
}

PeriodicFunction PeriodicFunction::indicator(long q, long residue) {
    std::vector<Rational> v(q, Rational(0));
    long r = mod_reduce(residue, q);
    v[(r == 0 ? q : r) - 1] = Rational(1);
    return PeriodicFunction(q, std::move(v));
}

const Rational& PeriodicFunction::at(long n) const {
    long r = mod_reduce(n, period);
    return values[(r == 0 ? period : r) - 1];
}

Rational PeriodicFunction::max_abs() const {
    Rational m(0);
    for (const auto& v : values) m = std::max(m, v.abs());
    return m;
}

FourierCoefficients fourier_transform(const PeriodicFunction& f) {
    long q = f.period;
    FourierCoefficients out;
    out.period = q;
    out.coefficients.resize(q, CyclotomicNumber::zero(q));
    for (long n = 1; n <= q; ++n) {
        CyclotomicNumber acc = CyclotomicNumber::zero(q);
        for (long a = 1; a <= q; ++a) {
            if (f.values[a - 1].is_zero()) continue;
            acc = acc + f.values[a - 1] * CyclotomicNumber::root(q, -a * n);
        }
        out.coefficients[n - 1] = Rational(1, q) * acc;
    }
    return out;
}

PeriodicFunction fourier_inverse(const FourierCoefficients& F) {
    long q = F.period;
    if (static_cast<long>(F.coefficients.size()) != q)
        throw InvalidArgument("fourier_inverse: need exactly q coefficients");
    std::vector<Rational> vals(q);
    for (long n = 1; n <= q; ++n) {
        CyclotomicNumber acc = CyclotomicNumber::zero(q);
        for (long a = 1; a <= q; ++a)
            acc = acc + F.coefficients[a - 1] * CyclotomicNumber::root(q, a * n);
        if (!acc.is_rational())
            throw DomainError("fourier_inverse: inverse is not rational-valued");
        vals[n - 1] = acc.rational_value();
    }
    return PeriodicFunction(q, std::move(vals));
}

PeriodicFunction twist(const PeriodicFunction& f, long h) {
    long q = f.period;
    if (std::gcd(mod_reduce(h, q), q) != 1 && q != 1)
        throw DomainError("twist: index must be coprime to the period");
    long hinv = mod_inverse(h, q);
    std::vector<Rational> vals(q);
    for (long n = 1; n <= q; ++n) vals[n - 1] = f.at(n * hinv);
    return PeriodicFunction(q, std::move(vals));
}

Rational euler_factor_product(long q, long k) {
    Rational prod(1);
    for (auto& [p, e] : factorize(q))
        prod *= Rational(1) - Rational(1, p).pow(k);
    return prod;
}

PeriodicFunction degenerate_function(long q, long k, const Rational& c) {
    if (q < 2) throw InvalidArgument("degenerate_function: q must exceed 1");
    if (k < 2) throw InvalidArgument("degenerate_function: k must exceed 1");
    Rational coprime_value = -c * Rational(1, q).pow(k) / euler_factor_product(q, k);
    std::vector<Rational> vals(q, Rational(0));
    for (long a = 1; a < q; ++a)
        if (gcd_long(a, q) == 1) vals[a - 1] = coprime_value;
    vals[q - 1] = c;
    return PeriodicFunction(q, std::move(vals));
}

BigReal l_value(const PeriodicFunction& f, long k, long precision_bits,
                LValueMethod method) {
    if (k < 2) throw DomainError("l_value: k must be at least 2 (pole at 1 not handled)");
    long q = f.period;
    if (method == LValueMethod::kHurwitz) {
        for (long W = precision_bits + 48;; W *= 2) {
            BigReal acc(0, W);
            for (long a = 1; a <= q; ++a) {
                if (f.values[a - 1].is_zero()) continue;
                acc = acc + BigReal::from_rational(f.values[a - 1], W) *
                                hurwitz_zeta(k, Rational(a, q), W);
            }
            BigReal res = BigReal::from_rational(Rational(1, q).pow(k), W) * acc;
            if (res.error_exp() <= 1 - precision_bits) return res;
        }
    }
    // direct series with the crude rigorous tail bound
    Rational mf = f.max_abs();
    if (mf.is_zero()) return BigReal(0, precision_bits);
    long mf_exp = static_cast<long>(mpz_sizeinbase(mf.num().get_mpz_t(), 2)) -
                  static_cast<long>(mpz_sizeinbase(mf.den().get_mpz_t(), 2)) + 1;
    long q_exp = 64 - __builtin_clzl(q);
    long t = 0;  // N = 2^t
    while (mf_exp + q_exp + (1 - k) * t + 2 > -(precision_bits + 2) && t < 63) ++t;
    if (t > 22)
        throw PrecisionError(
            "l_value: series method cannot reach this precision at desk scale; "
            "use the Hurwitz method",
            precision_bits);
    long N = 1L << t;
    long W = precision_bits + 32 + t;
    BigReal acc(0, W);
    for (long n = 1; n <= N; ++n) {
        const Rational& fn = f.at(n);
        if (fn.is_zero()) continue;
        acc = acc + BigReal::from_rational(fn, W) *
                        BigReal::from_rational(Rational(1, n), W).pow_si(k);
    }
    return acc.with_extra_error(mf_exp + q_exp + (1 - k) * t + 2);
}

std::vector<Eq1Term> eq1_decomposition(const PeriodicFunction& f, long k,
                                       long precision_bits) {
    if (k < 2) throw DomainError("eq1_decomposition: k must be at least 2");
    long q = f.period;
    if (q < 2) throw InvalidArgument("eq1_decomposition: period must exceed 1");
    for (long a = 2; a < q; ++a) {
        long g = gcd_long(a, q);
        if (g > 1 && g < q && !f.values[a - 1].is_zero())
            throw DomainError(
                "eq1_decomposition: f must vanish on residues with 1 < gcd(a,q) < q");
    }
    Rational correction =
        f.values[q - 1] * Rational(1, q).pow(k) / euler_factor_product(q, k);
    std::vector<Eq1Term> out;
    for (long a = 1; a < q; ++a) {
        if (gcd_long(a, q) != 1) continue;
        Eq1Term term{a, f.values[a - 1] + correction,
                     hurwitz_zeta(k, Rational(a, q), precision_bits)};
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace zetalab
