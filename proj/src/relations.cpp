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

#include "relations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"
#include "hurwitz.hpp"
#include "mzv.hpp"
#include "numbers.hpp"

namespace zetalab {

namespace {

using Row = std::vector<mpz_class>;

mpz_class dot(const Row& a, const Row& b) {
    mpz_class s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/* round(num / den) for den > 0 */
mpz_class nearest_quotient(const mpz_class& num, const mpz_class& den) {
    mpz_class r;
    mpz_class two_num = 2 * num + den;
    mpz_fdiv_q(r.get_mpz_t(), two_num.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    return r;
}

}  // namespace

/*
 * All-integer LLL with delta = 99/100.  State: the rows themselves, the
 * scaled Gram-Schmidt coefficients lambda[i][j] and the subdeterminants
 * d[0..n] with mu_{ij} = lambda_{ij}/d_j and |b*_i|^2 = d_i/d_{i-1}.
 */
void lll_reduce(std::vector<std::vector<mpz_class>>& basis) {
    const long n = static_cast<long>(basis.size());
    if (n <= 1) return;
    std::vector<std::vector<mpz_class>> lambda(n + 1, std::vector<mpz_class>(n + 1, 0));
    std::vector<mpz_class> d(n + 1);
    d[0] = 1;
    d[1] = dot(basis[0], basis[0]);
    if (d[1] == 0) throw InvalidArgument("lll_reduce: zero row in basis");

    auto red = [&](long k, long l) {
        if (2 * abs(lambda[k][l]) <= d[l]) return;
        mpz_class r = nearest_quotient(lambda[k][l], d[l]);
        for (size_t c = 0; c < basis[k - 1].size(); ++c)
            basis[k - 1][c] -= r * basis[l - 1][c];
        lambda[k][l] -= r * d[l];
        for (long i = 1; i < l; ++i) lambda[k][i] -= r * lambda[l][i];
    };

    auto swap_step = [&](long k, long kmax) {
        std::swap(basis[k - 1], basis[k - 2]);
        for (long j = 1; j <= k - 2; ++j) std::swap(lambda[k][j], lambda[k - 1][j]);
        mpz_class lam = lambda[k][k - 1];
        mpz_class B = (d[k - 2] * d[k] + lam * lam) / d[k - 1];
        for (long i = k + 1; i <= kmax; ++i) {
            mpz_class t = lambda[i][k];
            lambda[i][k] = (d[k] * lambda[i][k - 1] - lam * t) / d[k - 1];
            lambda[i][k - 1] = (B * t + lam * lambda[i][k]) / d[k];
        }
        d[k - 1] = B;
    };

    long k = 2, kmax = 1;
    while (k <= n) {
        if (k > kmax) {
            kmax = k;
            for (long j = 1; j <= k; ++j) {
                mpz_class u = dot(basis[k - 1], basis[j - 1]);
                for (long i = 1; i < j; ++i)
                    u = (d[i] * u - lambda[k][i] * lambda[j][i]) / d[i - 1];
                if (j < k)
                    lambda[k][j] = u;
                else {
                    d[k] = u;
                    if (d[k] == 0)
                        throw InvalidArgument("lll_reduce: linearly dependent rows");
                }
            }
        }
        red(k, k - 1);
        // Lovasz test, delta = 99/100
        if (100 * (d[k] * d[k - 2] + lambda[k][k - 1] * lambda[k][k - 1]) <
            99 * d[k - 1] * d[k - 1]) {
            swap_step(k, kmax);
            k = std::max(2L, k - 1);
        } else {
            for (long l = k - 2; l >= 1; --l) red(k, l);
            ++k;
        }
    }
}

long relation_required_bits(size_t n_values, long height_bound) {
    double h = std::max<double>(2.0, static_cast<double>(height_bound));
    return 80 + static_cast<long>(std::ceil(static_cast<double>(n_values) * std::log2(h)));
}

namespace {

/* normalize to the primitive vector with positive leading coefficient */
void normalize_relation(Row& m) {
    mpz_class g = 0;
    for (const auto& c : m) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : m) c /= g;
    for (const auto& c : m)
        if (c != 0) {
            if (c < 0)
                for (auto& cc : m) cc = -cc;
            break;
        }
}

/* candidate rows from the reduced basis, by ascending norm */
std::vector<Row> candidate_rows(std::vector<Row> reduced, size_t n) {
    std::sort(reduced.begin(), reduced.end(), [n](const Row& a, const Row& b) {
        mpz_class na = 0, nb = 0;
        for (size_t i = 0; i < n; ++i) {
            na += a[i] * a[i];
            nb += b[i] * b[i];
        }
        if (na != nb) return na < nb;
        return a < b;
    });
    return reduced;
}

}  // namespace

static RelationReport find_relation_impl(const RelationQuery& query,
                                         std::vector<Row>* all_out) {
    size_t n = query.labels.size();
    if (n < 2) throw InvalidArgument("find_relation: need at least two values");
    if (query.height_bound < 1) throw InvalidArgument("find_relation: height bound must be positive");
    long P = query.precision_bits;
    long required = relation_required_bits(n, query.height_bound);
    if (P < required)
        throw PrecisionError("find_relation: precision too small for the requested height bound",
                             required);

    std::vector<BigReal> values = query.evaluate(P);
    if (values.size() != n) throw Error("find_relation: evaluator returned wrong count");
    for (const auto& v : values)
        if (!v.is_exact() && v.error_exp() > 8 - P)
            throw Error("find_relation: evaluator violated its error contract");

    long scale = P - 16;
    std::vector<Row> rows(n, Row(n + 1, 0));
    mpfr_t tmp;
    mpfr_init2(tmp, values[0].precision() + 64);
    for (size_t i = 0; i < n; ++i) {
        rows[i][i] = 1;
        mpfr_mul_2si(tmp, values[i].raw(), scale, MPFR_RNDN);
        mpfr_get_z(rows[i][n].get_mpz_t(), tmp, MPFR_RNDN);
    }
    mpfr_clear(tmp);

    lll_reduce(rows);

    RelationReport rep;
    rep.labels = query.labels;
    rep.height_bound = query.height_bound;
    rep.precision_bits = P;
    rep.confirmation_bits = 2 * P;

    std::vector<BigReal> confirm;
    bool confirm_ready = false;
    mpz_class H(query.height_bound);
    for (auto& row : candidate_rows(rows, n)) {
        bool zero = true, small = true;
        for (size_t i = 0; i < n; ++i) {
            if (row[i] != 0) zero = false;
            if (abs(row[i]) > H) small = false;
        }
        if (zero || !small) continue;
        if (!confirm_ready) {
            confirm = query.evaluate(2 * P);
            if (confirm.size() != n) throw Error("find_relation: evaluator returned wrong count");
            confirm_ready = true;
        }
        // mandatory re-verification at doubled precision
        BigReal s(0, confirm[0].precision());
        for (size_t i = 0; i < n; ++i) {
            if (row[i] == 0) continue;
            s = s + BigReal::from_rational(Rational(row[i]), confirm[i].precision()) *
                        confirm[i];
        }
        if (!s.magnitude_at_most_exp(-P)) continue;
        Row m(row.begin(), row.begin() + n);
        normalize_relation(m);
        if (all_out) {
            all_out->push_back(m);
            continue;
        }
        rep.relation_found = true;
        rep.coefficients = std::move(m);
        rep.verified_residual = s.abs();
        return rep;
    }
    rep.relation_found = false;
    if (all_out && !all_out->empty()) {
        // dedupe and report the first as the headline relation
        std::sort(all_out->begin(), all_out->end());
        all_out->erase(std::unique(all_out->begin(), all_out->end()), all_out->end());
        rep.relation_found = true;
        rep.coefficients = all_out->front();
    }
    std::ostringstream os;
    os << "no relation with height <= " << query.height_bound << " detectable at "
       << P << " bits (heuristic evidence, not a proof of independence)";
    rep.certificate = os.str();
    return rep;
}

RelationReport find_relation(const RelationQuery& query) {
    return find_relation_impl(query, nullptr);
}

std::vector<std::vector<mpz_class>> find_all_relations(const RelationQuery& query) {
    std::vector<Row> all;
    find_relation_impl(query, &all);
    return all;
}

long integer_rank(std::vector<std::vector<mpz_class>> rows) {
    if (rows.empty()) return 0;
    size_t n = rows[0].size();
    long rank = 0;
    size_t col = 0;
    for (size_t r = 0; r < rows.size() && col < n; ++col) {
        size_t pivot = rows.size();
        for (size_t i = r; i < rows.size(); ++i)
            if (rows[i][col] != 0) { pivot = i; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            // eliminate over Q by cross-multiplication
            mpz_class a = rows[r][col], b = rows[i][col];
            for (size_t c = col; c < n; ++c) rows[i][c] = rows[i][c] * a - rows[r][c] * b;
        }
        ++r;
        ++rank;
    }
    return rank;
}

namespace {

std::string zeta_label(long k, long a, long q) {
    return "zeta(" + std::to_string(k) + "," + std::to_string(a) + "/" + std::to_string(q) +
           ")";
}

RelationQuery make_query(std::vector<std::string> labels,
                         std::function<std::vector<BigReal>(long)> eval, long H, long P) {
    RelationQuery q;
    q.labels = std::move(labels);
    q.evaluate = std::move(eval);
    q.height_bound = H;
    q.precision_bits = P;
    return q;
}

/* largest height the precision supports for an n-value search */
long height_cap_for(long precision_bits, size_t n) {
    long bits = (precision_bits - 80) / static_cast<long>(n);
    if (bits <= 1) return 0;
    if (bits >= 40) bits = 40;
    return (1L << bits) - 1;
}

}  // namespace

DimensionEvidence strong_cm_dimension_evidence(long k, long q, long height_bound,
                                               long precision_bits) {
    if (k < 2) throw DomainError("strong_cm_dimension_evidence: k must be at least 2");
    if (q < 2) throw DomainError("strong_cm_dimension_evidence: q must be at least 2");
    auto res = coprime_residues(q);
    std::vector<long> as;
    for (long a : res)
        if (a < q || q == 1) as.push_back(a);

    DimensionEvidence ev;
    ev.space = "strong-cm";
    ev.params = {{"k", std::to_string(k)}, {"q", std::to_string(q)},
                 {"height", std::to_string(height_bound)}};
    ev.labels.push_back("1");
    for (long a : as) ev.labels.push_back(zeta_label(k, a, q));

    auto eval_full = [k, q, as](long bits) {
        std::vector<BigReal> v;
        v.push_back(BigReal(1, bits));
        for (long a : as) v.push_back(hurwitz_zeta(k, Rational(a, q), bits));
        return v;
    };
    auto full_query = make_query(ev.labels, eval_full, height_bound, precision_bits);
    ev.relations = find_all_relations(full_query);
    ev.searches.push_back(find_relation(full_query));
    ev.evidence_dimension =
        static_cast<long>(ev.labels.size()) - integer_rank(ev.relations);

    // Proposition-15 split: plus combinations with 1, then minus combinations
    std::vector<long> half;
    for (long a : as)
        if (2 * a < q) half.push_back(a);
    if (!half.empty()) {
        std::vector<std::string> plus_labels{"1"};
        for (long a : half)
            plus_labels.push_back(zeta_label(k, a, q) + "+" + zeta_label(k, q - a, q));
        auto eval_plus = [k, q, half](long bits) {
            std::vector<BigReal> v;
            v.push_back(BigReal(1, bits));
            for (long a : half)
                v.push_back(hurwitz_zeta(k, Rational(a, q), bits) +
                            hurwitz_zeta(k, Rational(q - a, q), bits));
            return v;
        };
        ev.searches.push_back(find_relation(
            make_query(plus_labels, eval_plus, height_bound, precision_bits)));
        if (half.size() >= 2) {
            std::vector<std::string> minus_labels;
            for (long a : half)
                minus_labels.push_back(zeta_label(k, a, q) + "-" + zeta_label(k, q - a, q));
            auto eval_minus = [k, q, half](long bits) {
                std::vector<BigReal> v;
                for (long a : half)
                    v.push_back(hurwitz_zeta(k, Rational(a, q), bits) -
                                hurwitz_zeta(k, Rational(q - a, q), bits));
                return v;
            };
            ev.searches.push_back(find_relation(
                make_query(minus_labels, eval_minus, height_bound, precision_bits)));
        }
    }

    long phi = static_cast<long>(as.size());
    ev.proven_lower_bound = phi / 2 + 1;
    ev.upper_bound = phi + 1;
    ev.consistent = ev.proven_lower_bound <= ev.evidence_dimension &&
                    ev.evidence_dimension <= ev.upper_bound;
    return ev;
}

DimensionEvidence cm_dimension_evidence(long k, long q, long height_bound,
                                        long precision_bits) {
    if (k < 2) throw DomainError("cm_dimension_evidence: k must be at least 2");
    if (q < 2) throw DomainError("cm_dimension_evidence: q must be at least 2");
    std::vector<long> as;
    for (long a : coprime_residues(q))
        if (a < q || q == 1) as.push_back(a);

    DimensionEvidence ev;
    ev.space = "cm";
    ev.params = {{"k", std::to_string(k)}, {"q", std::to_string(q)},
                 {"height", std::to_string(height_bound)}};
    for (long a : as) ev.labels.push_back(zeta_label(k, a, q));
    if (ev.labels.size() < 2) {
        ev.degenerate = true;
        ev.evidence_dimension = static_cast<long>(ev.labels.size());
        ev.proven_lower_bound = static_cast<long>(as.size()) / 2;
        ev.upper_bound = static_cast<long>(as.size());
        return ev;
    }
    auto eval = [k, q, as](long bits) {
        std::vector<BigReal> v;
        for (long a : as) v.push_back(hurwitz_zeta(k, Rational(a, q), bits));
        return v;
    };
    auto query = make_query(ev.labels, eval, height_bound, precision_bits);
    ev.relations = find_all_relations(query);
    ev.searches.push_back(find_relation(query));
    ev.evidence_dimension =
        static_cast<long>(ev.labels.size()) - integer_rank(ev.relations);
    long phi = static_cast<long>(as.size());
    ev.proven_lower_bound = phi / 2;  // the half-system combinations are independent
    ev.upper_bound = phi;
    ev.consistent = ev.proven_lower_bound <= ev.evidence_dimension &&
                    ev.evidence_dimension <= ev.upper_bound;
    return ev;
}

DimensionEvidence okada_set_evidence(long k, long q, long height_bound,
                                     long precision_bits) {
    if (k < 1) throw DomainError("okada_set_evidence: k must be at least 1");
    if (q <= 2) throw DomainError("okada_set_evidence: q must exceed 2");
    std::vector<long> half;
    for (long a = 1; 2 * a < q; ++a)
        if (gcd_long(a, q) == 1) half.push_back(a);

    DimensionEvidence ev;
    ev.space = "okada";
    ev.params = {{"k", std::to_string(k)}, {"q", std::to_string(q)},
                 {"height", std::to_string(height_bound)}};
    CotDerivativePolynomial poly = cot_derivative(k);
    for (long a : half)
        ev.labels.push_back("P_" + std::to_string(k) + "(cot(pi*" + std::to_string(a) + "/" +
                            std::to_string(q) + "))");
    ev.proven_lower_bound = static_cast<long>(half.size());  // Okada's theorem
    ev.upper_bound = static_cast<long>(half.size());
    if (half.size() < 2) {
        ev.degenerate = true;
        ev.evidence_dimension = static_cast<long>(half.size());
        ev.consistent = true;
        return ev;
    }
    auto eval = [poly, half, q](long bits) {
        std::vector<BigReal> v;
        for (long a : half) {
            for (long W = bits + 32;; W *= 2) {
                BigReal val = poly.evaluate(cot_pi_rational(a, q, W));
                if (val.error_exp() <= 1 - bits) {
                    v.push_back(val);
                    break;
                }
            }
        }
        return v;
    };
    auto query = make_query(ev.labels, eval, height_bound, precision_bits);
    ev.relations = find_all_relations(query);
    ev.searches.push_back(find_relation(query));
    ev.relation_in_theorem_set = !ev.relations.empty();
    ev.evidence_dimension =
        static_cast<long>(ev.labels.size()) - integer_rank(ev.relations);
    ev.consistent = !ev.relation_in_theorem_set;
    return ev;
}

std::vector<std::vector<long>> zagier_span(long p) {
    if (p < 2) throw InvalidArgument("zagier_span: weight must be at least 2");
    // compositions of p with first part >= 2, larger parts first at each level
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long remaining, bool first) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        long top = remaining;
        long low = first ? 2 : 1;
        for (long c = top; c >= low; --c) {
            if (first && c < 2) continue;
            cur.push_back(c);
            self(self, remaining - c, false);
            cur.pop_back();
        }
    };
    rec(rec, p, true);
    return out;
}

DimensionEvidence zagier_dimension_evidence(long p, long height_bound, long precision_bits,
                                            long length_cap) {
    if (p < 4) throw DomainError("zagier_dimension_evidence: weight must be at least 4");
    if (p > 8) throw DomainError("zagier_dimension_evidence: weight capped at 8 at desk scale");
    if (length_cap < 1) throw InvalidArgument("zagier_dimension_evidence: bad length cap");

    std::vector<std::vector<long>> comps;
    for (auto& c : zagier_span(p))
        if (static_cast<long>(c.size()) <= length_cap) comps.push_back(c);

    DimensionEvidence ev;
    ev.space = "zagier";
    ev.params = {{"weight", std::to_string(p)},
                 {"height", std::to_string(height_bound)},
                 {"length_cap", std::to_string(length_cap)}};
    for (auto& c : comps) {
        std::string l = "zeta(";
        for (size_t i = 0; i < c.size(); ++i)
            l += (i ? "," : "") + std::to_string(c[i]);
        ev.labels.push_back(l + ")");
    }
    ev.labels.push_back("pi^" + std::to_string(p));

    auto eval_at = [comps, p](long bits) {
        std::vector<BigReal> v;
        for (auto& c : comps) v.push_back(mzv(c, bits));
        v.push_back(BigReal::pi(bits + 32).pow_si(p));
        return v;
    };

    // pairwise searches of each MZV against pi^p at the full height
    std::vector<Row> found;  // over the full label set
    size_t n_all = ev.labels.size();
    for (size_t i = 0; i < comps.size(); ++i) {
        auto ci = comps[i];
        auto eval_pair = [ci, p](long bits) {
            return std::vector<BigReal>{mzv(ci, bits), BigReal::pi(bits + 32).pow_si(p)};
        };
        auto rep = find_relation(make_query({ev.labels[i], ev.labels.back()}, eval_pair,
                                            height_bound, precision_bits));
        if (rep.relation_found) {
            Row full(n_all, 0);
            full[i] = rep.coefficients[0];
            full[n_all - 1] = rep.coefficients[1];
            found.push_back(full);
        }
        ev.searches.push_back(std::move(rep));
    }

    // the weight 4d+2 pair from the stuffle argument
    if (p % 4 == 2) {
        long d = (p - 2) / 4;
        std::vector<long> diag{2 * d + 1, 2 * d + 1};
        auto eval_pair = [p, diag](long bits) {
            return std::vector<BigReal>{riemann_zeta(p, bits), mzv(diag, bits)};
        };
        std::string l2 = "zeta(" + std::to_string(2 * d + 1) + "," + std::to_string(2 * d + 1) + ")";
        ev.searches.push_back(find_relation(make_query(
            {"zeta(" + std::to_string(p) + ")", l2}, eval_pair, height_bound, precision_bits)));
    }

    // full-set search, height lowered to what the precision supports
    long hcap = std::min(height_bound, height_cap_for(precision_bits, n_all));
    if (hcap >= 2) {
        auto full = find_relation_impl(
            make_query(ev.labels, eval_at, hcap, precision_bits), &found);
        ev.searches.push_back(std::move(full));
    }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    ev.relations = found;
    ev.evidence_dimension = static_cast<long>(n_all) - integer_rank(found);
    ev.proven_lower_bound = 1;
    ev.upper_bound = static_cast<long>(n_all);
    ev.consistent = ev.evidence_dimension >= 1;
    return ev;
}

}  // namespace zetalab
