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

#include "cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "errors.hpp"
#include "numbers.hpp"

namespace zetalab {

namespace {

using ZPoly = std::vector<mpz_class>;   // dense, ascending degree
using QPoly = std::vector<Rational>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void qtrim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/* exact division of integer polynomials, divisor monic */
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    ztrim(num);
    ZPoly q;
    if (num.size() < den.size()) return q;
    q.assign(num.size() - den.size() + 1, mpz_class(0));
    for (long i = static_cast<long>(num.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        mpz_class f = num[i];
        if (f == 0) continue;
        long shift = i - (static_cast<long>(den.size()) - 1);
        q[shift] = f;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= f * den[j];
    }
    ztrim(num);
    if (!num.empty()) throw Error("cyclotomic: non-exact polynomial division");
    return q;
}

std::mutex phi_mutex;
std::map<long, ZPoly> phi_cache;

/* remainder of p modulo Phi_n (monic integer), rational coefficients */
QPoly qmod_phi(QPoly p, const ZPoly& phi) {
    qtrim(p);
    long d = static_cast<long>(phi.size()) - 1;
    while (static_cast<long>(p.size()) > d) {
        Rational lead = p.back();
        long shift = static_cast<long>(p.size()) - 1 - d;
        if (!lead.is_zero())
            for (long j = 0; j <= d; ++j)
                p[shift + j] -= lead * Rational(phi[j]);
        p.pop_back();
        qtrim(p);
    }
    return p;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

/* polynomial division with remainder over Q */
void qdivmod(const QPoly& num, const QPoly& den_in, QPoly& quot, QPoly& rem) {
    QPoly den = den_in;
    qtrim(den);
    if (den.empty()) throw Error("cyclotomic: division by zero polynomial");
    rem = num;
    qtrim(rem);
    quot.clear();
    if (rem.size() < den.size()) return;
    quot.assign(rem.size() - den.size() + 1, Rational(0));
    Rational lead_inv = den.back().inverse();
    while (rem.size() >= den.size() && !rem.empty()) {
        Rational f = rem.back() * lead_inv;
        size_t shift = rem.size() - den.size();
        if (!f.is_zero()) {
            quot[shift] = f;
            for (size_t j = 0; j + 1 < den.size(); ++j)
                rem[shift + j] -= f * den[j];
        }
        rem.pop_back();
        qtrim(rem);
    }
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
    if (n < 1) throw InvalidArgument("cyclotomic_polynomial: order must be positive");
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // inline to stay under one lock.
    std::vector<long> pending{n};
    while (!pending.empty()) {
        long m = pending.back();
        if (phi_cache.count(m)) { pending.pop_back(); continue; }
        bool ready = true;
        for (long d : divisors(m))
            if (d < m && !phi_cache.count(d)) { pending.push_back(d); ready = false; }
        if (!ready) continue;
        pending.pop_back();
        ZPoly num(m + 1, mpz_class(0));
        num[0] = -1;
        num[m] = 1;
        for (long d : divisors(m))
            if (d < m) num = zdiv_exact(num, phi_cache[d]);
        phi_cache[m] = num;
    }
    return phi_cache[n];
}

CyclotomicNumber::CyclotomicNumber(long conductor) : n_(conductor) {
    if (conductor < 1) throw InvalidArgument("CyclotomicNumber: conductor must be positive");
    c_.assign(totient(conductor), Rational(0));
}

CyclotomicNumber CyclotomicNumber::from_rational(long n, const Rational& r) {
    CyclotomicNumber out(n);
    out.c_[0] = r;
    return out;
}

CyclotomicNumber CyclotomicNumber::root(long n, long a) {
    const ZPoly& phi = cyclotomic_polynomial(n);
    long deg = static_cast<long>(phi.size()) - 1;
    long e = mod_reduce(a, n);
    CyclotomicNumber out(n);
    if (e < deg) {
        out.c_[e] = Rational(1);
        return out;
    }
    QPoly p(e + 1, Rational(0));
    p[e] = Rational(1);
    p = qmod_phi(std::move(p), phi);
    for (size_t i = 0; i < p.size(); ++i) out.c_[i] = p[i];
    return out;
}

bool CyclotomicNumber::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool CyclotomicNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw DomainError("CyclotomicNumber: not a rational element");
    return c_[0];
}

CyclotomicNumber CyclotomicNumber::promote(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0)
        throw InvalidArgument("CyclotomicNumber: promote target must be a multiple of conductor");
    long stride = m / n_;
    CyclotomicNumber out(m);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        out = out + c_[j] * root(m, stride * static_cast<long>(j));
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::galois(long h) const {
    if (n_ == 1) return *this;
    if (std::gcd(mod_reduce(h, n_), n_) != 1)
        throw InvalidArgument("CyclotomicNumber: Galois index not coprime to conductor");
    CyclotomicNumber out(n_);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        out = out + c_[j] * root(n_, h * static_cast<long>(j));
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out(*this);
    for (auto& r : out.c_) r = -r;
    return out;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.n_ != b.n_) {
        long m = std::lcm(a.n_, b.n_);
        return a.promote(m) + b.promote(m);
    }
    CyclotomicNumber out(a);
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a + (-b);
}

CyclotomicNumber operator*(const Rational& a, const CyclotomicNumber& b) {
    CyclotomicNumber out(b);
    for (auto& r : out.c_) r *= a;
    return out;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.n_ != b.n_) {
        long m = std::lcm(a.n_, b.n_);
        return a.promote(m) * b.promote(m);
    }
    QPoly prod = qmul(a.c_, b.c_);
    prod = qmod_phi(std::move(prod), cyclotomic_polynomial(a.n_));
    CyclotomicNumber out(a.n_);
    for (size_t i = 0; i < prod.size(); ++i) out.c_[i] = prod[i];
    return out;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.n_ != b.n_) {
        long m = std::lcm(a.n_, b.n_);
        return a.promote(m) == b.promote(m);
    }
    return a.c_ == b.c_;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw DomainError("CyclotomicNumber: inverse of zero");
    if (is_rational()) return from_rational(n_, c_[0].inverse());
    // extended euclid in Q[x] against Phi_n, which is irreducible: the gcd
    // is a nonzero constant g with  u*f + v*Phi = g,  so f^{-1} = u/g.
    const ZPoly& phiz = cyclotomic_polynomial(n_);
    QPoly phi(phiz.size());
    for (size_t i = 0; i < phiz.size(); ++i) phi[i] = Rational(phiz[i]);
    QPoly r0 = phi, r1 = c_;
    qtrim(r1);
    QPoly u0 = {}, u1 = {Rational(1)};  // coefficients of f in the combination
    while (!r1.empty() && r1.size() > 1) {
        QPoly q, r2;
        qdivmod(r0, r1, q, r2);
        QPoly u2 = u0;
        // u2 = u0 - q*u1
        QPoly qu = qmul(q, u1);
        if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        qtrim(u2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.empty())
        throw Error("CyclotomicNumber: gcd with cyclotomic polynomial not constant");
    Rational g = r1[0];
    QPoly inv = u1;
    for (auto& r : inv) r /= g;
    inv = qmod_phi(std::move(inv), phiz);
    CyclotomicNumber out(n_);
    for (size_t i = 0; i < inv.size(); ++i) out.c_[i] = inv[i];
    return out;
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.n_ != b.n_) {
        long m = std::lcm(a.n_, b.n_);
        return a.promote(m) / b.promote(m);
    }
    return a * b.inverse();
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CyclotomicNumber acc = one(n_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

BigComplex CyclotomicNumber::embed(mpfr_prec_t prec) const {
    for (mpfr_prec_t work = prec + 32;; work *= 2) {
        BigComplex acc(BigReal(0, work), BigReal(0, work));
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero()) continue;
            BigComplex term = BigReal::from_rational(c_[j], work) *
                              BigComplex::unit_root(n_, static_cast<long>(j), work);
            acc = acc + term;
        }
        if (acc.error_exp() <= 1 - static_cast<long>(prec) ||
            acc.error_exp() == BigReal::kExact)
            return acc;
    }
}

std::string CyclotomicNumber::to_string() const {
    if (is_rational()) return c_[0].to_string();
    std::ostringstream os;
    std::string sym = (n_ == 4) ? "i" : "z" + std::to_string(n_);
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        Rational v = c_[j];
        if (!first) {
            os << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        first = false;
        if (j == 0) {
            os << v.to_string();
            continue;
        }
        if (v != Rational(1)) os << v.to_string() << "*";
        os << sym;
        if (j > 1) os << "^" << j;
    }
    return os.str();
}

}  // namespace zetalab
