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

#include "characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "errors.hpp"
#include "hurwitz.hpp"
#include "numbers.hpp"

namespace zetalab {

namespace {

std::mutex group_mutex;
std::map<long, std::shared_ptr<const UnitGroup>> group_cache;

std::shared_ptr<const UnitGroup> build_group(long q) {
    auto g = std::make_shared<UnitGroup>();
    g->modulus = q;
    g->order = totient(q);

    // cyclic factors: odd prime powers contribute one generator each; the
    // power of two contributes none (2), one (4), or two (-1 and 3) (>= 8)
    std::vector<std::pair<long, long>> local;  // (generator mod p^e lifted, order)
    auto add_factor = [&](long pe, long gen_mod_pe, long ord) {
        // CRT lift: ≡ gen mod pe, ≡ 1 mod q/pe
        long rest = q / pe;
        long lifted;
        if (rest == 1) {
            lifted = mod_reduce(gen_mod_pe, q);
        } else {
            long inv = mod_inverse(rest, pe);
            // lifted = 1 + rest * t with t ≡ (gen-1) * inv (mod pe)
            long t = mod_reduce((gen_mod_pe - 1) % pe * inv % pe, pe);
            lifted = mod_reduce(1 + rest * t, q);
        }
        local.emplace_back(lifted, ord);
    };

    for (auto& [p, e] : factorize(q)) {
        long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e == 1) continue;
            if (e == 2) {
                add_factor(pe, 3, 2);
            } else {
                add_factor(pe, pe - 1, 2);        // -1
                add_factor(pe, 3, pe / 4);        // 3 has order 2^(e-2)
            }
        } else {
            add_factor(pe, primitive_root(p, e), totient(pe));
        }
    }
    for (auto& [gen, ord] : local) {
        g->generators.push_back(gen);
        g->orders.push_back(ord);
    }
    g->exponent = 1;
    for (long o : g->orders) g->exponent = std::lcm(g->exponent, o);

    // enumerate all tuples once; index by residue
    g->residue_index.assign(q + 1, -1);
    size_t count = static_cast<size_t>(g->order);
    g->tuples.reserve(count);
    g->coprimes = coprime_residues(q);
    std::vector<long> tuple(g->generators.size(), 0);
    for (size_t idx = 0;; ++idx) {
        long r = 1;
        for (size_t i = 0; i < tuple.size(); ++i)
            r = r * mod_pow(g->generators[i], tuple[i], q) % q;
        if (q == 1) r = 1;
        g->residue_index[r == 0 ? 1 : r] = static_cast<long>(g->tuples.size());
        g->tuples.push_back(tuple);
        // lexicographic advance
        size_t pos = 0;
        while (pos < tuple.size()) {
            if (++tuple[pos] < g->orders[pos]) break;
            tuple[pos] = 0;
            ++pos;
        }
        if (pos == tuple.size()) break;
    }
    if (g->tuples.size() != count)
        throw Error("UnitGroup: generator decomposition does not cover the group");
    return g;
}

}  // namespace

std::shared_ptr<const UnitGroup> UnitGroup::get(long q) {
    if (q < 1) throw InvalidArgument("UnitGroup: modulus must be positive");
    std::lock_guard<std::mutex> lock(group_mutex);
    auto it = group_cache.find(q);
    if (it != group_cache.end()) return it->second;
    auto g = build_group(q);
    group_cache[q] = g;
    return g;
}

const std::vector<long>& UnitGroup::decompose(long a) const {
    long r = mod_reduce(a, modulus);
    if (modulus == 1) r = 1;
    if (r == 0 || residue_index[r] < 0)
        throw DomainError("UnitGroup: residue not coprime to modulus");
    return tuples[residue_index[r]];
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<long> images)
    : group_(std::move(group)), images_(std::move(images)) {
    if (images_.size() != group_->generators.size())
        throw InvalidArgument("DirichletCharacter: one image per generator required");
    for (size_t i = 0; i < images_.size(); ++i)
        images_[i] = mod_reduce(images_[i], group_->orders[i]);
}

bool DirichletCharacter::is_principal() const {
    return std::all_of(images_.begin(), images_.end(), [](long t) { return t == 0; });
}

long DirichletCharacter::order() const {
    long ord = 1;
    for (size_t i = 0; i < images_.size(); ++i) {
        long oi = group_->orders[i];
        long d = oi / std::gcd(oi, images_[i] == 0 ? oi : images_[i]);
        if (images_[i] == 0) d = 1;
        ord = std::lcm(ord, d);
    }
    return ord;
}

bool DirichletCharacter::value_exponent(long a, long& e_out) const {
    long q = group_->modulus;
    long r = mod_reduce(a, q);
    if (q == 1) r = 1;
    if (r == 0 || group_->residue_index[r] < 0) return false;
    const auto& tuple = group_->tuples[group_->residue_index[r]];
    long m = group_->exponent;
    long e = 0;
    for (size_t i = 0; i < tuple.size(); ++i) {
        long contrib = (m / group_->orders[i]) * images_[i] % m;
        e = (e + contrib * tuple[i]) % m;
    }
    e_out = e;
    return true;
}

CyclotomicNumber DirichletCharacter::value(long a) const {
    long ord = order();
    long e;
    if (!value_exponent(a, e)) return CyclotomicNumber::zero(ord);
    long m = group_->exponent;
    // e is a multiple of m / ord; express in zeta_ord
    return CyclotomicNumber::root(ord, e / (m / ord));
}

bool DirichletCharacter::is_odd() const {
    long q = group_->modulus;
    if (q <= 2) return false;
    long e;
    value_exponent(q - 1, e);
    // chi(-1) = zeta_m^e is -1 iff e = m/2
    return e != 0;
}

long DirichletCharacter::conductor() const {
    long q = group_->modulus;
    for (long d : divisors(q)) {
        // chi factors через d iff chi(a) = 1 for all a ≡ 1 (mod d), (a,q)=1
        bool ok = true;
        for (long a = 1; a <= q && ok; a += d) {
            if (std::gcd(a, q) != 1) continue;
            long e;
            value_exponent(a, e);
            if (e != 0) ok = false;
        }
        if (ok) return d;
    }
    return q;
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<long> imgs(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        imgs[i] = images_[i] == 0 ? 0 : group_->orders[i] - images_[i];
    return DirichletCharacter(group_, imgs);
}

std::vector<DirichletCharacter> enumerate_characters(long q) {
    auto g = UnitGroup::get(q);
    std::vector<DirichletCharacter> out;
    out.reserve(g->order);
    std::vector<long> images(g->generators.size(), 0);
    for (;;) {
        out.emplace_back(g, images);
        size_t pos = images.size();
        while (pos > 0) {
            --pos;
            if (++images[pos] < g->orders[pos]) break;
            images[pos] = 0;
            if (pos == 0) return out;
        }
        if (images.empty()) return out;
    }
}

int kronecker_symbol(long discriminant, long n) {
    if (!is_fundamental_discriminant(discriminant))
        throw DomainError("kronecker_symbol: discriminant is not fundamental");
    if (n == 0) return (discriminant == 1) ? 1 : 0;
    int out = 1;
    if (n < 0) {
        out = discriminant > 0 ? 1 : -1;  // (d / -1)
        n = -n;
    }
    // factor out 2 first
    int e2 = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++e2;
    }
    if (e2 > 0) {
        long dm8 = mod_reduce(discriminant, 8);
        int two;
        if (dm8 % 2 == 0)
            two = 0;  // p | d
        else
            two = (dm8 == 1) ? 1 : -1;  // 1 mod 8 -> +1, 5 mod 8 -> -1
        if (two == 0) return 0;
        if (e2 % 2) out *= two;
    }
    for (auto& [p, e] : factorize(n)) {
        if (p == 1) continue;
        int lp = (discriminant % p == 0) ? 0 : legendre_symbol(mod_reduce(discriminant, p), p);
        if (lp == 0) return 0;
        if (e % 2) out *= lp;
    }
    return out;
}

DirichletCharacter kronecker_character(long discriminant) {
    if (!is_fundamental_discriminant(discriminant))
        throw DomainError("kronecker_character: discriminant is not fundamental");
    long q = discriminant < 0 ? -discriminant : discriminant;
    auto g = UnitGroup::get(q);
    std::vector<long> images(g->generators.size());
    for (size_t i = 0; i < g->generators.size(); ++i) {
        int v = kronecker_symbol(discriminant, g->generators[i]);
        if (v == 0)
            throw Error("kronecker_character: generator not coprime to modulus");
        images[i] = (v == 1) ? 0 : g->orders[i] / 2;
        if (v == -1 && g->orders[i] % 2 != 0)
            throw Error("kronecker_character: -1 image needs an even-order factor");
    }
    return DirichletCharacter(g, images);
}

CyclotomicNumber gauss_sum(const DirichletCharacter& chi, long b) {
    long q = chi.modulus();
    long ord = chi.order();
    long m = chi.group().exponent;
    if (ord <= 2) {
        // real character: values are +-1 and the sum stays in Q(zeta_q)
        CyclotomicNumber acc = CyclotomicNumber::zero(q);
        for (long a : chi.group().coprimes) {
            long e;
            chi.value_exponent(a, e);
            Rational c = (e == 0) ? Rational(1) : Rational(-1);
            acc = acc + c * CyclotomicNumber::root(q, a * b);
        }
        return acc;
    }
    long field = std::lcm(q, ord);
    CyclotomicNumber acc = CyclotomicNumber::zero(field);
    for (long a : chi.group().coprimes) {
        long e;
        chi.value_exponent(a, e);
        // chi(a) = zeta_m^e with e a multiple of m/ord, i.e. zeta_ord^(e')
        // with e' = e/(m/ord); ord divides the compositum field
        long e_ord = e / (m / ord);
        CyclotomicNumber term =
            CyclotomicNumber::root(field, e_ord * (field / ord)) *
            CyclotomicNumber::root(field, mod_reduce(a * b, q) * (field / q));
        acc = acc + term;
    }
    return acc;
}

BigComplex dirichlet_l_value(const DirichletCharacter& chi, long k, long precision_bits) {
    long q = chi.modulus();
    if (k < 1) throw DomainError("dirichlet_l_value: k must be at least 1");
    if (k == 1) {
        if (chi.is_principal())
            throw DomainError("dirichlet_l_value: L(1, chi_0) diverges");
        // Fourier side: the n-th coefficient of chi is tau(chi, -n)/q, and
        // the constant coefficient vanishes for non-principal chi, so
        // L(1, chi) = (1/q) sum_{n=1}^{q-1} tau(chi, -n) Li_1(zeta_q^n).
        std::vector<CyclotomicNumber> coef(q);
        for (long n = 1; n < q; ++n) coef[n] = gauss_sum(chi, -n);
        for (long W = precision_bits + 32 + 4 * q;; W *= 2) {
            BigComplex acc(BigReal(0, W), BigReal(0, W));
            for (long n = 1; n < q; ++n) {
                if (coef[n].is_zero()) continue;
                acc = acc + coef[n].embed(W) * polylog_at_root(1, q, n, W);
            }
            BigComplex res = BigReal::from_rational(Rational(1, q), W) * acc;
            if (res.error_exp() <= 1 - precision_bits) return res;
        }
    }
    for (long W = precision_bits + 32 + 4 * (k + 1);; W *= 2) {
        BigComplex acc(BigReal(0, W), BigReal(0, W));
        for (long a : chi.group().coprimes) {
            BigReal h = hurwitz_zeta(k, Rational(a, q), W);
            acc = acc + h * chi.value(a).embed(W);
        }
        BigComplex res = BigReal::from_rational(Rational(1, q).pow(k), W) * acc;
        if (res.error_exp() <= 1 - precision_bits) return res;
    }
}

}  // namespace zetalab
