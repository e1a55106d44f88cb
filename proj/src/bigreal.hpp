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

#include <mpfr.h>

#include <limits>
#include <string>
#include <utility>

#include "rational.hpp"

namespace zetalab {

/*
 * Non-negative magnitude bound m * 2^e with 1 <= m < 2 (m deliberately a
 * double: every operation rounds the mantissa up by a relative fudge, so
 * the represented bound only ever grows).  m == 0 encodes "exactly zero";
 * this is what lets long summation chains keep honest error bounds instead
 * of losing a bit per addition.
 */
struct MagBound {
    double m = 0.0;
    long e = 0;

    static MagBound zero() { return {0.0, 0}; }
    static MagBound from_exp(long exp) { return {1.0, exp}; }
    bool is_zero() const { return m == 0.0; }
    /* smallest integer k with value <= 2^k */
    long ceil_exp() const;
    MagBound scaled_2exp(long c) const { return is_zero() ? *this : MagBound{m, e + c}; }

    friend MagBound operator+(const MagBound& a, const MagBound& b);
    friend MagBound operator*(const MagBound& a, const MagBound& b);
    friend bool operator<(const MagBound& a, const MagBound& b);
};

/*
 * Precision-tracked real numbers: an MPFR center plus a conservative
 * absolute error bound.  Every operation propagates the bound, so a
 * result's digits are guaranteed, not hoped for.  The error of a nonzero
 * rounded result is accounted as one full ulp, 2^(exp(center) - prec),
 * which over-covers the half-ulp of round-to-nearest.
 */
class BigReal {
  public:
    static constexpr long kExact = std::numeric_limits<long>::min();

    BigReal() : BigReal(0L, 64) {}
    BigReal(long v, mpfr_prec_t prec);
    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    static BigReal from_rational(const Rational& r, mpfr_prec_t prec);
    static BigReal pi(mpfr_prec_t prec);
    /* value 2^e, exact */
    static BigReal pow2(long e, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    /* error <= 2^error_exp(); kExact when stored exactly */
    long error_exp() const { return err_.is_zero() ? kExact : err_.ceil_exp(); }
    bool is_exact() const { return err_.is_zero(); }
    const mpfr_t& raw() const { return v_; }

    /* |center| < 2^center_mag(); kExact when the center is zero */
    long center_mag() const;
    /* |true value| <= 2^upper_mag() */
    long upper_mag() const;
    /* largest l with |true value| >= 2^l guaranteed, or kExact if the
     * ball touches zero */
    long lower_mag() const;
    bool contains_zero() const;
    bool definitely_positive() const;
    bool definitely_negative() const;

    int center_sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /* decimal rendering limited to digits the error bound supports */
    std::string to_decimal() const;
    std::string to_decimal(long significant_digits) const;

    /* true value guaranteed <= 2^e */
    bool magnitude_at_most_exp(long e) const;
    /* |center| <= 2^e (no error folded in; for soundness cross-checks) */
    bool center_at_most_exp(long e) const;

    BigReal operator-() const;
    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    /* throws PrecisionError if the divisor ball straddles zero */
    friend BigReal operator/(const BigReal& a, const BigReal& b);

    BigReal abs() const;
    BigReal mul_2exp(long e) const;
    BigReal pow_si(long e) const;
    BigReal sqrt() const;   // ball clipped to [0, inf)
    /* natural log; requires a ball strictly above zero */
    BigReal log() const;
    BigReal sin() const;
    BigReal cos() const;
    /* cot on a ball inside (0, pi), by monotone endpoint evaluation */
    BigReal cot() const;

    /* widen the error bound by an extra 2^e term (folds an external
     * truncation bound into the ball) */
    BigReal with_extra_error(long e) const;

    /* exponent arithmetic kept for callers that combine error exponents */
    static long eadd(long a, long b);

    friend BigReal atan2_positive_x(const BigReal& y, const BigReal& x);

  private:
    struct Uninit {};
    BigReal(mpfr_prec_t prec, Uninit);  // uninitialized-center constructor

    MagBound ulp_bound() const;
    /* upper bound on |center| as a MagBound */
    MagBound center_bound() const;
    /* lower bound on |center|; zero bound if center is zero */
    MagBound center_bound_low() const;

    mpfr_t v_;
    MagBound err_;
};

/* atan2(y, x) for x definitely positive (no branch cut in reach) */
BigReal atan2_positive_x(const BigReal& y, const BigReal& x);

/*
 * Complex ball: componentwise real balls.  The reported error of the
 * complex value is the max of the component bounds.
 */
class BigComplex {
  public:
    BigComplex() = default;
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(const BigReal& re)
        : re_(re), im_(0L, re.precision()) {}

    static BigComplex from_rational(const Rational& r, mpfr_prec_t prec) {
        return BigComplex(BigReal::from_rational(r, prec));
    }
    /* e^{2 pi i r / q} */
    static BigComplex unit_root(long q, long r, mpfr_prec_t prec);

    const BigReal& real() const { return re_; }
    const BigReal& imag() const { return im_; }
    long error_exp() const { return std::max(re_.error_exp(), im_.error_exp()); }

    BigComplex conj() const { return BigComplex(re_, -im_); }
    BigComplex operator-() const { return BigComplex(-re_, -im_); }
    friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigReal& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

    BigComplex div_real(const BigReal& d) const;
    /* multiply by i^k (exact rotation) */
    BigComplex mul_i_pow(long k) const;

    BigReal norm2() const;  // re^2 + im^2
    BigReal abs() const;

    /* principal log for Re(z) definitely positive */
    BigComplex log_principal() const;

    std::string to_decimal() const;

  private:
    BigReal re_, im_;
};

}  // namespace zetalab
