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

#include <string>
#include <vector>

#include "bigreal.hpp"
#include "rational.hpp"

namespace zetalab {

/* coefficients of the n-th cyclotomic polynomial, ascending degree,
 * integers, monic; cached process-wide */
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

/*
 * Exact element of Q(zeta_n) on the power basis 1, z, ..., z^(phi(n)-1)
 * modulo the n-th cyclotomic polynomial.  The representation is canonical,
 * so operator== decides equality of field elements (of equal conductor).
 * Binary operations on mismatched conductors promote both sides into
 * Q(zeta_lcm) first.
 */
class CyclotomicNumber {
  public:
    CyclotomicNumber() : CyclotomicNumber(1) {}
    explicit CyclotomicNumber(long conductor);  // zero element

    static CyclotomicNumber zero(long n) { return CyclotomicNumber(n); }
    static CyclotomicNumber one(long n) { return from_rational(n, Rational(1)); }
    static CyclotomicNumber from_rational(long n, const Rational& r);
    /* zeta_n^a, a taken mod n */
    static CyclotomicNumber root(long n, long a);

    long conductor() const { return n_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /* throws DomainError when the element is not rational */
    Rational rational_value() const;

    /* re-express in Q(zeta_m); requires conductor | m */
    CyclotomicNumber promote(long m) const;

    /* Galois action zeta_n -> zeta_n^h, gcd(h, n) = 1 */
    CyclotomicNumber galois(long h) const;
    CyclotomicNumber conj() const { return galois(n_ - 1 == 0 ? 1 : n_ - 1); }

    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const Rational& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return !(a == b);
    }

    /* extended gcd in Q[x]/(Phi_n); throws DomainError on zero */
    CyclotomicNumber inverse() const;

    CyclotomicNumber pow(long e) const;

    /* numeric value with absolute error <= 2^(1-prec) */
    BigComplex embed(mpfr_prec_t prec) const;

    std::string to_string() const;

  private:
    long n_;
    std::vector<Rational> c_;
};

}  // namespace zetalab
