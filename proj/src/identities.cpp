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

#include "identities.hpp"

#include <numeric>
#include <sstream>

#include "bernoulli.hpp"
#include "characters.hpp"
#include "errors.hpp"
#include "hurwitz.hpp"
#include "mzv.hpp"
#include "numbers.hpp"

namespace zetalab {

namespace {

std::string exp_str(const BigReal& r) {
    long u = r.upper_mag();
    if (u == BigReal::kExact) return "exact-zero";
    return "2^" + std::to_string(u);
}

IdentityReport numeric_report(std::string name, std::map<std::string, std::string> params,
                              const BigReal& residual_abs, long tolerance_exp,
                              long precision_bits) {
    IdentityReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.exact_mode = false;
    r.residual = residual_abs;
    r.tolerance_exp = tolerance_exp;
    r.pass = residual_abs.magnitude_at_most_exp(tolerance_exp);
    r.precision_bits = precision_bits;
    return r;
}

/* determinant of a ball matrix by Gaussian elimination with partial
 * pivoting; throws PrecisionError if a pivot ball straddles zero */
BigReal ball_determinant(std::vector<std::vector<BigReal>> m, long W) {
    size_t n = m.size();
    BigReal det(1, W);
    bool negate = false;
    for (size_t col = 0; col < n; ++col) {
        size_t best = col;
        for (size_t r = col + 1; r < n; ++r)
            if (mpfr_cmpabs(m[r][col].raw(), m[best][col].raw()) > 0) best = r;
        if (best != col) {
            std::swap(m[best], m[col]);
            negate = !negate;
        }
        BigReal& pivot = m[col][col];
        if (pivot.contains_zero())
            throw PrecisionError("ball_determinant: pivot indistinguishable from zero",
                                 2 * W);
        det = det * pivot;
        for (size_t r = col + 1; r < n; ++r) {
            BigReal f = m[r][col] / pivot;
            for (size_t c = col + 1; c < n; ++c)
                m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    return negate ? -det : det;
}

/* exact determinant over the cyclotomic field */
CyclotomicNumber exact_determinant(std::vector<std::vector<CyclotomicNumber>> m) {
    size_t n = m.size();
    CyclotomicNumber det = CyclotomicNumber::one(1);
    bool negate = false;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot_row = n;
        for (size_t r = col; r < n; ++r)
            if (!m[r][col].is_zero()) { pivot_row = r; break; }
        if (pivot_row == n) return CyclotomicNumber::zero(1);
        if (pivot_row != col) {
            std::swap(m[pivot_row], m[col]);
            negate = !negate;
        }
        det = det * m[col][col];
        CyclotomicNumber inv = m[col][col].inverse();
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            CyclotomicNumber f = m[r][col] * inv;
            for (size_t c = col; c < n; ++c)
                m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    return negate ? -det : det;
}

}  // namespace

IdentityReport check_euler_factor(long k, long q, long precision_bits) {
    if (k < 2) throw DomainError("check_euler_factor: k must be at least 2");
    if (q < 2) throw DomainError("check_euler_factor: q must be at least 2");
    long W = precision_bits + 48;
    BigReal lhs = riemann_zeta(k, W) *
                  BigReal::from_rational(euler_factor_product(q, k), W);
    BigReal acc(0, W);
    for (long a : coprime_residues(q))
        if (a < q || q == 1) acc = acc + hurwitz_zeta(k, Rational(a, q), W);
    BigReal rhs = BigReal::from_rational(Rational(1, q).pow(k), W) * acc;
    return numeric_report(
        "euler-factor",
        {{"k", std::to_string(k)}, {"q", std::to_string(q)}},
        (lhs - rhs).abs(), 4 - precision_bits, precision_bits);
}

IdentityReport check_reflection(long k, long q, long a, long precision_bits) {
    if (k < 2) throw DomainError("check_reflection: k must be at least 2");
    if (q < 3) throw DomainError("check_reflection: q must be at least 3");
    std::vector<long> residues;
    if (a == 0) {
        for (long x = 1; 2 * x < q; ++x)
            if (gcd_long(x, q) == 1) residues.push_back(x);
    } else {
        residues.push_back(a);
    }
    if (residues.empty()) throw DomainError("check_reflection: no valid residues");
    long W = precision_bits + 48;
    BigReal worst(0, W);
    for (long x : residues) {
        BigReal lhs = hurwitz_zeta(k, Rational(x, q), W);
        BigReal other = hurwitz_zeta(k, Rational(q - x, q), W);
        lhs = (k % 2 == 0) ? lhs + other : lhs - other;
        BigReal resid = (lhs - reflection_value(k, x, q, W)).abs();
        if (resid.upper_mag() > worst.upper_mag()) worst = resid;
    }
    return numeric_report(
        "reflection",
        {{"k", std::to_string(k)}, {"q", std::to_string(q)},
         {"a", a == 0 ? "all" : std::to_string(a)}},
        worst, 4 - precision_bits, precision_bits);
}

CyclotomicNumber hecke_exact_value(long k, long q, long a) {
    if (k < 3 || k % 2 == 0)
        throw DomainError("hecke_exact_value: k must be odd and at least 3");
    if (q < 3) throw DomainError("hecke_exact_value: q must exceed 2");
    if (a < 1 || 2 * a >= q || gcd_long(a, q) != 1)
        throw DomainError("hecke_exact_value: need 1 <= a < q/2 coprime to q");
    BernoulliPolynomial bk = bernoulli_polynomial(k);
    CyclotomicNumber acc = CyclotomicNumber::zero(q);
    for (long b = 1; b <= q; ++b) {
        Rational w = bk.evaluate(Rational(b, q));
        if (w.is_zero()) continue;
        acc = acc + w * (CyclotomicNumber::root(q, a * b) - CyclotomicNumber::root(q, -a * b));
    }
    mpz_class qk1;
    mpz_ui_pow_ui(qk1.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(k - 1));
    Rational front = Rational(qk1) / (Rational(2) * Rational(factorial(k)));
    return front * acc;
}

IdentityReport check_hecke_formula(long k, long q, long a, long precision_bits) {
    if (k < 3 || k % 2 == 0)
        throw DomainError("check_hecke_formula: k must be odd and at least 3");
    if (q < 3) throw DomainError("check_hecke_formula: q must exceed 2");
    std::vector<long> residues;
    if (a == 0) {
        for (long x = 1; 2 * x < q; ++x)
            if (gcd_long(x, q) == 1) residues.push_back(x);
    } else {
        residues.push_back(a);
    }
    long W = precision_bits + 64;
    BigReal worst(0, W);
    std::string detail;
    for (long x : residues) {
        CyclotomicNumber exact = hecke_exact_value(k, q, x);
        BigComplex rhs = exact.embed(W);
        BigReal diff = hurwitz_zeta(k, Rational(x, q), W) -
                       hurwitz_zeta(k, Rational(q - x, q), W);
        BigReal inv_two_pi_k = (BigReal::pi(W).mul_2exp(1)).pow_si(-k);
        BigComplex lhs = BigComplex(diff * inv_two_pi_k).mul_i_pow(-k);
        BigReal resid = (lhs - rhs).abs();
        if (resid.upper_mag() > worst.upper_mag()) worst = resid;
        if (!detail.empty()) detail += "; ";
        detail += "a=" + std::to_string(x) + ": " + exact.to_string();
    }
    IdentityReport r = numeric_report(
        "hecke",
        {{"k", std::to_string(k)}, {"q", std::to_string(q)},
         {"a", a == 0 ? "all" : std::to_string(a)}},
        worst, 8 - precision_bits, precision_bits);
    r.detail = detail;
    return r;
}

IdentityReport check_dedekind_determinant(long q, long k, long precision_bits) {
    if (q < 3) throw DomainError("check_dedekind_determinant: q must exceed 2");
    if (k < 2) throw DomainError("check_dedekind_determinant: k must be at least 2");
    auto residues = coprime_residues(q);
    size_t n = residues.size();
    long W = precision_bits + 64 + 8 * static_cast<long>(n);

    std::vector<BigReal> zeta_at(q + 1, BigReal(0, W));
    for (long r = 1; r <= q; ++r)
        if (gcd_long(r, q) == 1) zeta_at[r] = hurwitz_zeta(k, Rational(r, q), W);

    std::vector<std::vector<BigReal>> m(n, std::vector<BigReal>(n, BigReal(0, W)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m[i][j] = zeta_at[mod_reduce(residues[i] * residues[j], q)];
    BigReal det_abs = ball_determinant(std::move(m), W).abs();

    BigReal rhs(1, W);
    for (const auto& chi : enumerate_characters(q)) {
        BigComplex s(BigReal(0, W), BigReal(0, W));
        for (long r : residues) s = s + zeta_at[r] * chi.value(r).embed(W);
        rhs = rhs * s.abs();
    }

    BigReal diff = (det_abs - rhs).abs();
    // relative tolerance with a fixed conditioning slack
    long rel_tol = 8 - precision_bits + 40;
    long rhs_low = rhs.lower_mag();
    IdentityReport r = numeric_report(
        "dedekind",
        {{"q", std::to_string(q)}, {"k", std::to_string(k)}},
        diff, rhs_low == BigReal::kExact ? rel_tol : rel_tol + rhs_low, precision_bits);
    bool nonzero = det_abs.definitely_positive();
    r.pass = r.pass && nonzero;
    std::ostringstream os;
    os << "|det M| = " << det_abs.to_decimal(24) << ", det nonzero: " << (nonzero ? "yes" : "no")
       << ", relative residual <= 2^"
       << (rhs_low == BigReal::kExact ? 0 : diff.upper_mag() - rhs_low);
    r.detail = os.str();
    return r;
}

IdentityReport check_dedekind_generic(const std::vector<long>& cyclic_orders,
                                      const std::vector<CyclotomicNumber>& F) {
    long n = 1;
    for (long o : cyclic_orders) {
        if (o < 1) throw InvalidArgument("check_dedekind_generic: orders must be positive");
        n *= o;
    }
    if (n > 12) throw InvalidArgument("check_dedekind_generic: group order capped at 12");
    if (static_cast<long>(F.size()) != n)
        throw InvalidArgument("check_dedekind_generic: need one value per group element");

    size_t rank = cyclic_orders.size();
    auto index_of = [&](const std::vector<long>& t) {
        long idx = 0;
        for (size_t i = 0; i < rank; ++i) idx = idx * cyclic_orders[i] + t[i];
        return idx;
    };
    std::vector<std::vector<long>> elems;
    std::vector<long> t(rank, 0);
    for (;;) {
        elems.push_back(t);
        size_t pos = rank;
        while (pos > 0) {
            --pos;
            if (++t[pos] < cyclic_orders[pos]) break;
            t[pos] = 0;
            if (pos == 0) { pos = rank + 1; break; }
        }
        if (rank == 0 || pos == rank + 1) break;
    }

    // det(F(x - y))
    std::vector<std::vector<CyclotomicNumber>> m(n, std::vector<CyclotomicNumber>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            std::vector<long> d(rank);
            for (size_t c = 0; c < rank; ++c)
                d[c] = mod_reduce(elems[i][c] - elems[j][c], cyclic_orders[c]);
            m[i][j] = F[index_of(d)];
        }
    CyclotomicNumber det = exact_determinant(std::move(m));

    long E = 1;
    for (long o : cyclic_orders) E = std::lcm(E, o);
    CyclotomicNumber prod = CyclotomicNumber::one(1);
    for (long ci = 0; ci < n; ++ci) {
        const auto& c = elems[ci];
        CyclotomicNumber s = CyclotomicNumber::zero(E);
        for (long xi = 0; xi < n; ++xi) {
            long e = 0;
            for (size_t i = 0; i < rank; ++i)
                e = mod_reduce(e + c[i] * elems[xi][i] * (E / cyclic_orders[i]), E);
            s = s + CyclotomicNumber::root(E, e) * F[xi];
        }
        prod = prod * s;
    }

    IdentityReport r;
    r.name = "dedekind-generic";
    std::string orders;
    for (long o : cyclic_orders) orders += (orders.empty() ? "" : "x") + std::to_string(o);
    r.params = {{"group", orders.empty() ? "trivial" : orders}};
    r.exact_mode = true;
    r.exact_zero = (det == prod);
    r.pass = r.exact_zero;
    r.detail = "det = " + det.to_string();
    return r;
}

IdentityReport check_gauss_sum(long discriminant) {
    if (discriminant >= 0)
        throw DomainError("check_gauss_sum: discriminant must be negative");
    DirichletCharacter chi = kronecker_character(discriminant);  // validates fundamental
    long q = -discriminant;
    CyclotomicNumber tau = gauss_sum(chi, 1);

    bool ok = (tau * tau == CyclotomicNumber::from_rational(1, Rational(discriminant)));
    bool twisted_ok = true, folding_ok = true;
    for (long b : chi.group().coprimes) {
        Rational chib = chi.value(b).rational_value();
        if (!(gauss_sum(chi, b) == chib * tau)) twisted_ok = false;
        CyclotomicNumber fold = CyclotomicNumber::zero(q);
        for (long a = 1; 2 * a <= q; ++a) {
            long e;
            if (!chi.value_exponent(a, e)) continue;
            Rational ca = (e == 0) ? Rational(1) : Rational(-1);
            fold = fold + ca * (CyclotomicNumber::root(q, a * b) -
                                CyclotomicNumber::root(q, -a * b));
        }
        if (!(fold == chib * tau)) folding_ok = false;
    }

    IdentityReport r;
    r.name = "gauss";
    r.params = {{"disc", std::to_string(discriminant)}};
    r.exact_mode = true;
    r.exact_zero = ok && twisted_ok && folding_ok;
    r.pass = r.exact_zero;
    r.detail = "tau = " + tau.to_string() + "; tau^2 = disc: " + (ok ? "yes" : "no") +
               ", twists: " + (twisted_ok ? "yes" : "no") +
               ", odd folding: " + (folding_ok ? "yes" : "no");
    return r;
}

IdentityReport check_stuffle(long d, long precision_bits) {
    if (d < 1) throw InvalidArgument("check_stuffle: d must be at least 1");
    long W = precision_bits + 48;
    BigReal z = riemann_zeta(2 * d + 1, W);
    BigReal zz = mzv({2 * d + 1, 2 * d + 1}, W);
    BigReal z2 = riemann_zeta(4 * d + 2, W);
    BigReal resid = (z * z - zz.mul_2exp(1) - z2).abs();
    return numeric_report("stuffle", {{"d", std::to_string(d)}}, resid,
                          12 - precision_bits, precision_bits);
}

IdentityReport check_stuffle_pair(long s1, long s2, long precision_bits) {
    if (s1 < 2 || s2 < 2)
        throw DomainError("check_stuffle_pair: both exponents must exceed 1");
    long W = precision_bits + 48;
    BigReal lhs = riemann_zeta(s1, W) * riemann_zeta(s2, W);
    BigReal rhs = mzv({s1, s2}, W) + mzv({s2, s1}, W) + riemann_zeta(s1 + s2, W);
    return numeric_report("stuffle-pair",
                          {{"s1", std::to_string(s1)}, {"s2", std::to_string(s2)}},
                          (lhs - rhs).abs(), 12 - precision_bits, precision_bits);
}

IdentityReport check_lemma19_ingredients(long discriminant, long d, long precision_bits) {
    if (discriminant >= 0)
        throw DomainError("check_lemma19_ingredients: discriminant must be negative");
    if (d < 1) throw InvalidArgument("check_lemma19_ingredients: d must be at least 1");
    DirichletCharacter chi = kronecker_character(discriminant);
    long q = -discriminant;
    long k = 2 * d + 1;
    BernoulliPolynomial bk = bernoulli_polynomial(k);

    // exact: sum_{a <= q/2} chi(a) sum_b (zeta^{ab} - zeta^{-ab}) B_k(b/q)
    //        = tau(chi) * sum_b chi(b) B_k(b/q)
    CyclotomicNumber lhs = CyclotomicNumber::zero(q);
    for (long a = 1; 2 * a <= q; ++a) {
        long e;
        if (!chi.value_exponent(a, e)) continue;
        Rational ca = (e == 0) ? Rational(1) : Rational(-1);
        CyclotomicNumber inner = CyclotomicNumber::zero(q);
        for (long b = 1; b <= q; ++b) {
            Rational w = bk.evaluate(Rational(b, q));
            if (w.is_zero()) continue;
            inner = inner + w * (CyclotomicNumber::root(q, a * b) -
                                 CyclotomicNumber::root(q, -a * b));
        }
        lhs = lhs + ca * inner;
    }
    Rational sb(0);
    for (long b = 1; b <= q; ++b) {
        long e;
        if (!chi.value_exponent(b, e)) continue;
        Rational cb = (e == 0) ? Rational(1) : Rational(-1);
        sb += cb * bk.evaluate(Rational(b, q));
    }
    CyclotomicNumber tau = gauss_sum(chi, 1);
    bool exact_ok = (lhs == sb * tau);

    // numeric link: L(k, chi) = (2 pi i)^k tau S_B / (2 q k!)
    long W = precision_bits + 64;
    BigComplex L = dirichlet_l_value(chi, k, W);
    Rational scale = sb / (Rational(2 * q) * Rational(factorial(k)));
    BigComplex formula = (BigReal::from_rational(scale, W) *
                          BigReal::pi(W).mul_2exp(1).pow_si(k) * tau.embed(W))
                             .mul_i_pow(k);
    BigReal resid = (L - formula).abs();

    IdentityReport r = numeric_report(
        "lemma19", {{"disc", std::to_string(discriminant)}, {"d", std::to_string(d)}},
        resid, 12 - precision_bits, precision_bits);
    r.pass = r.pass && exact_ok;
    r.detail = std::string("exact Bernoulli identity: ") + (exact_ok ? "pass" : "fail") +
               "; S_B = " + sb.to_string();
    return r;
}

IdentityReport check_eq1(const PeriodicFunction& f, long k, long precision_bits) {
    long W = precision_bits + 48;
    auto terms = eq1_decomposition(f, k, W);
    long q = f.period;
    BigReal acc(0, W);
    bool all_zero = true;
    for (const auto& t : terms) {
        if (!t.bracket.is_zero()) {
            all_zero = false;
            acc = acc + BigReal::from_rational(t.bracket, W) * t.hurwitz;
        }
    }
    BigReal combo = BigReal::from_rational(Rational(1, q).pow(k), W) * acc;
    BigReal direct = l_value(f, k, W);
    IdentityReport r = numeric_report(
        "eq1", {{"q", std::to_string(q)}, {"k", std::to_string(k)}},
        (combo - direct).abs(), 8 - precision_bits, precision_bits);
    r.detail = all_zero ? "all brackets exactly zero" : "brackets nonzero";
    return r;
}

std::string identity_report_brief(const IdentityReport& r) {
    std::ostringstream os;
    os << r.name;
    for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
    os << ": " << (r.pass ? "PASS" : "FAIL");
    if (r.exact_mode)
        os << " (exact)";
    else if (r.residual)
        os << " (residual " << exp_str(*r.residual) << " vs tol 2^"
           << r.tolerance_exp << ")";
    return os.str();
}

}  // namespace zetalab
