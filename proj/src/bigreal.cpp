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

#include "bigreal.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "numbers.hpp"

namespace zetalab {

namespace {

constexpr long kCapExp = 1L << 60;
/* relative fudge applied after every mantissa operation so double rounding
 * can never shave the bound */
constexpr double kBump = 1.0 + 0x1p-40;

long clamp_exp(long e) { return std::max(-kCapExp, std::min(kCapExp, e)); }

long fdiv2(long e) { return e >= 0 ? e / 2 : -((-e + 1) / 2); }
long cdiv2(long e) { return e >= 0 ? (e + 1) / 2 : -((-e) / 2); }

}  // namespace

long MagBound::ceil_exp() const {
    if (is_zero()) return BigReal::kExact;
    return clamp_exp(m > 1.0 ? e + 1 : e);
}

MagBound operator+(const MagBound& a, const MagBound& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const MagBound& hi = (a.e >= b.e) ? a : b;
    const MagBound& lo = (a.e >= b.e) ? b : a;
    long shift = hi.e - lo.e;
    double m = hi.m;
    m += (shift > 80) ? 0x1p-80 : std::ldexp(lo.m, static_cast<int>(-shift));
    m *= kBump;
    MagBound out{m, hi.e};
    while (out.m >= 2.0) {
        out.m /= 2.0;
        ++out.e;
    }
    out.e = clamp_exp(out.e);
    return out;
}

MagBound operator*(const MagBound& a, const MagBound& b) {
    if (a.is_zero() || b.is_zero()) return MagBound::zero();
    MagBound out{a.m * b.m * kBump, clamp_exp(a.e + b.e)};
    while (out.m >= 2.0) {
        out.m /= 2.0;
        ++out.e;
    }
    return out;
}

bool operator<(const MagBound& a, const MagBound& b) {
    if (a.is_zero()) return !b.is_zero();
    if (b.is_zero()) return false;
    if (a.e != b.e) return a.e < b.e;
    return a.m < b.m;
}

BigReal::BigReal(mpfr_prec_t prec, Uninit) : err_(MagBound::zero()) {
    mpfr_init2(v_, prec);
}

BigReal::BigReal(long v, mpfr_prec_t prec) : err_(MagBound::zero()) {
    mpfr_init2(v_, prec);
    int t = mpfr_set_si(v_, v, MPFR_RNDN);
    if (t != 0) err_ = ulp_bound();
}

BigReal::BigReal(const BigReal& o) : err_(o.err_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept : err_(o.err_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        err_ = o.err_;
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        err_ = o.err_;
    }
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

MagBound BigReal::ulp_bound() const {
    if (mpfr_zero_p(v_)) return MagBound::zero();
    return MagBound::from_exp(clamp_exp(mpfr_get_exp(v_) - mpfr_get_prec(v_)));
}

MagBound BigReal::center_bound() const {
    if (mpfr_zero_p(v_)) return MagBound::zero();
    long e;
    double d = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    MagBound out{std::fabs(d) * 2.0 * kBump, clamp_exp(e - 1)};
    while (out.m >= 2.0) {
        out.m /= 2.0;
        ++out.e;
    }
    return out;
}

MagBound BigReal::center_bound_low() const {
    if (mpfr_zero_p(v_)) return MagBound::zero();
    long e;
    double d = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    double m = std::fabs(d) * 2.0 * (1.0 - 0x1p-40);
    MagBound out{m, clamp_exp(e - 1)};
    while (out.m >= 2.0) {
        out.m /= 2.0;
        ++out.e;
    }
    while (out.m < 1.0 && out.m > 0.0) {
        out.m *= 2.0;
        --out.e;
    }
    return out;
}

BigReal BigReal::from_rational(const Rational& r, mpfr_prec_t prec) {
    BigReal out(prec, Uninit{});
    int t = mpfr_set_q(out.v_, r.mpq().get_mpq_t(), MPFR_RNDN);
    out.err_ = (t == 0) ? MagBound::zero() : out.ulp_bound();
    return out;
}

BigReal BigReal::pi(mpfr_prec_t prec) {
    BigReal out(prec, Uninit{});
    mpfr_const_pi(out.v_, MPFR_RNDN);
    out.err_ = out.ulp_bound();
    return out;
}

BigReal BigReal::pow2(long e, mpfr_prec_t prec) {
    BigReal out(prec, Uninit{});
    mpfr_set_ui_2exp(out.v_, 1, e, MPFR_RNDN);
    out.err_ = MagBound::zero();
    return out;
}

long BigReal::center_mag() const {
    if (mpfr_zero_p(v_)) return kExact;
    return clamp_exp(mpfr_get_exp(v_));
}

long BigReal::upper_mag() const { return (center_bound() + err_).ceil_exp(); }

long BigReal::lower_mag() const {
    if (mpfr_zero_p(v_)) return kExact;
    MagBound lo = center_bound_low();
    if (err_.is_zero())
        return clamp_exp(lo.e - 1);  // m >= 1 so value >= 2^(e-1) at worst
    // need err < lo strictly with headroom
    long shift = lo.e - err_.e;
    if (shift > 80) return clamp_exp(lo.e - 1);
    if (shift < -2) return kExact;
    double d = lo.m - std::ldexp(err_.m, static_cast<int>(-shift));
    d *= (1.0 - 0x1p-40);
    if (d <= 0.0) return kExact;
    int k;
    std::frexp(d, &k);  // d in [2^(k-1), 2^k)
    return clamp_exp(lo.e + k - 1);
}

bool BigReal::contains_zero() const {
    if (mpfr_zero_p(v_)) return true;
    return lower_mag() == kExact;
}

bool BigReal::definitely_positive() const {
    return mpfr_sgn(v_) > 0 && !contains_zero();
}

bool BigReal::definitely_negative() const {
    return mpfr_sgn(v_) < 0 && !contains_zero();
}

bool BigReal::magnitude_at_most_exp(long e) const {
    long u = upper_mag();
    return u == kExact || u <= e;
}

bool BigReal::center_at_most_exp(long e) const {
    long c = center_mag();
    return c == kExact || c <= e;
}

long BigReal::eadd(long a, long b) {
    if (a == kExact) return b;
    if (b == kExact) return a;
    return clamp_exp(std::max(a, b) + 1);
}

BigReal BigReal::operator-() const {
    BigReal out(*this);
    mpfr_neg(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigReal BigReal::abs() const {
    BigReal out(*this);
    mpfr_abs(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal out(std::max(a.precision(), b.precision()), BigReal::Uninit{});
    mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
    out.err_ = a.err_ + b.err_ + out.ulp_bound();
    return out;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal out(std::max(a.precision(), b.precision()), BigReal::Uninit{});
    mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
    out.err_ = a.err_ + b.err_ + out.ulp_bound();
    return out;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal out(std::max(a.precision(), b.precision()), BigReal::Uninit{});
    mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
    // a*b - ~a~b = a(b - ~b) + ~b(a - ~a), |a| <= |~a| + err_a
    MagBound abound = a.center_bound() + a.err_;
    out.err_ = abound * b.err_ + b.center_bound() * a.err_ + out.ulp_bound();
    return out;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    if (mpfr_zero_p(b.v_) && b.is_exact()) throw DomainError("BigReal: division by zero");
    long lb = b.lower_mag();
    if (lb == BigReal::kExact)
        throw PrecisionError("BigReal: divisor ball contains zero",
                             2 * std::max(a.precision(), b.precision()));
    BigReal out(std::max(a.precision(), b.precision()), BigReal::Uninit{});
    mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
    // |a/b - ~a/~b| <= err_a/|b| + |~a| err_b/(|b||~b|)
    MagBound inv_b = MagBound::from_exp(-lb);
    MagBound inv_bc = MagBound::from_exp(-(b.center_mag() - 1));
    out.err_ = a.err_ * inv_b + a.center_bound() * b.err_ * inv_b * inv_bc +
               out.ulp_bound();
    return out;
}

BigReal BigReal::mul_2exp(long e) const {
    BigReal out(*this);
    mpfr_mul_2si(out.v_, out.v_, e, MPFR_RNDN);
    out.err_ = out.err_.scaled_2exp(e);
    return out;
}

BigReal BigReal::pow_si(long e) const {
    if (e == 0) return BigReal(1, precision());
    if (e < 0) return BigReal(1, precision()) / pow_si(-e);
    BigReal base(*this), acc(1, precision());
    long k = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

BigReal BigReal::sqrt() const {
    if (is_exact() && mpfr_zero_p(v_)) return *this;
    if (definitely_negative()) throw DomainError("BigReal: sqrt of negative value");
    BigReal out(precision(), Uninit{});
    long lm = lower_mag();
    if (mpfr_sgn(v_) > 0 && lm != kExact) {
        mpfr_sqrt(out.v_, v_, MPFR_RNDN);
        out.err_ = err_ * MagBound::from_exp(-fdiv2(lm)) + out.ulp_bound();
        return out;
    }
    // ball touches zero: enclose sqrt([0, 2^um]) in [0, 2^ceil(um/2)]
    long um = upper_mag();
    if (mpfr_sgn(v_) > 0)
        mpfr_sqrt(out.v_, v_, MPFR_RNDN);
    else
        mpfr_set_zero(out.v_, 1);
    out.err_ = (um == kExact ? MagBound::zero() : MagBound::from_exp(cdiv2(um))) +
               out.ulp_bound();
    return out;
}

BigReal BigReal::log() const {
    long lm = lower_mag();
    if (mpfr_sgn(v_) <= 0) throw DomainError("BigReal: log of non-positive value");
    if (lm == kExact)
        throw PrecisionError("BigReal: log of ball touching zero", 2 * precision());
    BigReal out(precision(), Uninit{});
    mpfr_log(out.v_, v_, MPFR_RNDN);
    out.err_ = err_ * MagBound::from_exp(-lm) + out.ulp_bound();
    return out;
}

BigReal BigReal::sin() const {
    BigReal out(precision(), Uninit{});
    mpfr_sin(out.v_, v_, MPFR_RNDN);
    out.err_ = err_ + out.ulp_bound();
    return out;
}

BigReal BigReal::cos() const {
    BigReal out(precision(), Uninit{});
    mpfr_cos(out.v_, v_, MPFR_RNDN);
    out.err_ = err_ + out.ulp_bound();
    return out;
}

BigReal BigReal::cot() const {
    mpfr_prec_t prec = precision();
    mpfr_t xl, xh, cl, ch, pi_lo;
    mpfr_inits2(prec, xl, xh, cl, ch, pi_lo, static_cast<mpfr_ptr>(nullptr));
    if (err_.is_zero()) {
        mpfr_set(xl, v_, MPFR_RNDD);
        mpfr_set(xh, v_, MPFR_RNDU);
    } else {
        mpfr_t rad;
        mpfr_init2(rad, 53);
        mpfr_set_d(rad, err_.m, MPFR_RNDU);
        mpfr_mul_2si(rad, rad, err_.e, MPFR_RNDU);
        mpfr_sub(xl, v_, rad, MPFR_RNDD);
        mpfr_add(xh, v_, rad, MPFR_RNDU);
        mpfr_clear(rad);
    }
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    bool in_domain = mpfr_sgn(xl) > 0 && mpfr_cmp(xh, pi_lo) < 0;
    if (!in_domain) {
        mpfr_clears(xl, xh, cl, ch, pi_lo, static_cast<mpfr_ptr>(nullptr));
        throw DomainError("BigReal: cot ball not inside (0, pi)");
    }
    // cot is decreasing on (0, pi)
    mpfr_cot(ch, xl, MPFR_RNDU);
    mpfr_cot(cl, xh, MPFR_RNDD);
    BigReal out(prec, Uninit{});
    mpfr_add(out.v_, cl, ch, MPFR_RNDN);
    mpfr_div_2si(out.v_, out.v_, 1, MPFR_RNDN);
    mpfr_t w;
    mpfr_init2(w, 53);
    mpfr_sub(w, ch, cl, MPFR_RNDU);
    MagBound werr = MagBound::zero();
    if (!mpfr_zero_p(w)) {
        long we;
        double wd = mpfr_get_d_2exp(&we, w, MPFR_RNDU);
        werr = MagBound{std::fabs(wd) * 2.0 * kBump, clamp_exp(we - 2)};  // half width
        while (werr.m >= 2.0) {
            werr.m /= 2.0;
            ++werr.e;
        }
    }
    out.err_ = werr + out.ulp_bound();
    mpfr_clear(w);
    mpfr_clears(xl, xh, cl, ch, pi_lo, static_cast<mpfr_ptr>(nullptr));
    return out;
}

BigReal BigReal::with_extra_error(long e) const {
    BigReal out(*this);
    out.err_ = out.err_ + MagBound::from_exp(e);
    return out;
}

std::string BigReal::to_decimal(long significant_digits) const {
    if (significant_digits < 1) significant_digits = 1;
    char* s = nullptr;
    int n = mpfr_asprintf(&s, "%.*Re", static_cast<int>(significant_digits - 1), v_);
    if (n < 0) throw Error("BigReal: decimal formatting failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string BigReal::to_decimal() const {
    constexpr double kLog10Of2 = 0.30102999566398119;
    if (mpfr_zero_p(v_)) return "0";
    long sig_bits;
    if (is_exact()) {
        sig_bits = precision();
    } else {
        long cm = center_mag();
        long ee = err_.ceil_exp();
        if (cm <= ee) return "0";
        sig_bits = cm - ee;
    }
    long digits = std::max(1L, static_cast<long>(sig_bits * kLog10Of2) - 1);
    return to_decimal(digits);
}

BigReal atan2_positive_x(const BigReal& y, const BigReal& x) {
    long lx = x.lower_mag();
    if (!x.definitely_positive() || lx == BigReal::kExact)
        throw DomainError("atan2_positive_x: x not definitely positive");
    BigReal out(std::max(x.precision(), y.precision()), BigReal::Uninit{});
    mpfr_atan2(out.v_, y.v_, x.v_, MPFR_RNDN);
    out.err_ = (y.err_ + x.err_) * MagBound::from_exp(-lx) + out.ulp_bound();
    return out;
}

/* ---------------- BigComplex ---------------- */

BigComplex BigComplex::unit_root(long q, long r, mpfr_prec_t prec) {
    if (q < 1) throw InvalidArgument("unit_root: order must be positive");
    long rr = mod_reduce(r, q);
    BigReal theta = BigReal::pi(prec) * BigReal::from_rational(Rational(2 * rr, q), prec);
    return BigComplex(theta.cos(), theta.sin());
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

BigComplex operator*(const BigReal& a, const BigComplex& b) {
    return BigComplex(a * b.re_, a * b.im_);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal n2 = b.norm2();
    BigComplex num = a * b.conj();
    return num.div_real(n2);
}

BigComplex BigComplex::div_real(const BigReal& d) const {
    return BigComplex(re_ / d, im_ / d);
}

BigComplex BigComplex::mul_i_pow(long k) const {
    switch (mod_reduce(k, 4)) {
        case 0: return *this;
        case 1: return BigComplex(-im_, re_);
        case 2: return BigComplex(-re_, -im_);
        default: return BigComplex(im_, -re_);
    }
}

BigReal BigComplex::norm2() const { return re_ * re_ + im_ * im_; }

BigReal BigComplex::abs() const { return norm2().sqrt(); }

BigComplex BigComplex::log_principal() const {
    BigReal half_log = norm2().log().mul_2exp(-1);
    BigReal arg = atan2_positive_x(im_, re_);
    return BigComplex(half_log, arg);
}

std::string BigComplex::to_decimal() const {
    std::string rs = re_.to_decimal(), is = im_.to_decimal();
    if (is == "0") return rs;
    return rs + (is[0] == '-' ? " - " + is.substr(1) : " + " + is) + "*i";
}

}  // namespace zetalab
