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

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace zetalab {

/*
 * Exact fraction of arbitrary-size integers.  Always stored in lowest
 * terms with a positive denominator, so operator== is structural equality
 * of values.  This is the scalar for every exact computation in the
 * library; floating approximations only ever appear behind BigReal.
 */
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                       // NOLINT(runtime/explicit)
    Rational(const mpz_class& n) : v_(n) {}           // NOLINT(runtime/explicit)
    Rational(long num, long den) : v_(num, den) { normalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { normalize(); }

    /* parses "p/q" or "p"; throws InvalidArgument on anything else */
    static Rational from_string(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const;

    /* integer exponents, negative allowed for nonzero values */
    Rational pow(long e) const;

    std::string to_string() const;

  private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    void normalize() {
        if (v_.get_den() == 0) throw DomainError("Rational: zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

/* n! as an exact integer */
mpz_class factorial(long n);

/* binomial coefficient C(n, k) */
mpz_class binomial(long n, long k);

}  // namespace zetalab
