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

#include "zetalab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "characters.hpp"
#include "errors.hpp"
#include "hurwitz.hpp"
#include "identities.hpp"
#include "json_io.hpp"
#include "mzv.hpp"
#include "numbers.hpp"
#include "periodic.hpp"
#include "relations.hpp"

using namespace zetalab;

struct zl_real {
    BigReal value;
    std::string decimal;
};

namespace {

thread_local std::string g_error;
thread_local long g_required_bits = 0;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

zl_real* wrap(BigReal v) {
    auto* h = new zl_real{std::move(v), {}};
    h->decimal = h->value.to_decimal();
    return h;
}

template <typename F>
zl_status guard(F&& f) {
    g_error.clear();
    g_required_bits = 0;
    try {
        f();
        return ZL_OK;
    } catch (const PrecisionError& e) {
        g_error = e.what();
        g_required_bits = e.required_bits();
        return ZL_ERR_PRECISION;
    } catch (const InvalidArgument& e) {
        g_error = e.what();
        return ZL_ERR_INVALID;
    } catch (const DomainError& e) {
        g_error = e.what();
        return ZL_ERR_DOMAIN;
    } catch (const json::exception& e) {
        g_error = e.what();
        return ZL_ERR_INVALID;
    } catch (const std::exception& e) {
        g_error = e.what();
        return ZL_ERR_INTERNAL;
    }
}

long require_prec(int64_t prec) {
    if (prec < 16) throw InvalidArgument("precision must be at least 16 bits");
    if (prec > 1 << 20) throw InvalidArgument("precision beyond supported range");
    return static_cast<long>(prec);
}

json parse_json(const char* s, const char* what) {
    if (!s) throw InvalidArgument(std::string(what) + ": null JSON");
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded()) throw InvalidArgument(std::string(what) + ": malformed JSON");
    return j;
}

long param_long(const json& j, const char* name) {
    if (!j.contains(name)) throw InvalidArgument(std::string("missing parameter ") + name);
    return j.at(name).get<long>();
}

long param_long_or(const json& j, const char* name, long dflt) {
    return j.contains(name) ? j.at(name).get<long>() : dflt;
}

}  // namespace

extern "C" {

const char* zl_version(void) { return "zetalab 0.1.0"; }

const char* zl_last_error(void) { return g_error.c_str(); }

long zl_last_required_bits(void) { return g_required_bits; }

const char* zl_real_decimal(const zl_real* v) { return v ? v->decimal.c_str() : ""; }

int64_t zl_real_error_log2(const zl_real* v) {
    if (!v) return 0;
    long e = v->value.error_exp();
    return e == BigReal::kExact ? INT64_MIN : e;
}

double zl_real_approx(const zl_real* v) { return v ? v->value.to_double() : 0.0; }

void zl_real_free(zl_real* v) { delete v; }

void zl_free_string(char* s) { std::free(s); }

zl_status zl_hurwitz_zeta(int64_t k, const char* x, int64_t prec_bits, zl_real** out) {
    return guard([&] {
        if (!x || !out) throw InvalidArgument("zl_hurwitz_zeta: null argument");
        Rational xr = Rational::from_string(x);
        *out = wrap(hurwitz_zeta(k, xr, require_prec(prec_bits)));
    });
}

zl_status zl_riemann_zeta(int64_t k, int64_t prec_bits, zl_real** out) {
    return guard([&] {
        if (!out) throw InvalidArgument("zl_riemann_zeta: null output");
        *out = wrap(riemann_zeta(k, require_prec(prec_bits)));
    });
}

zl_status zl_polylog_at_root(int64_t m, int64_t q, int64_t a, int64_t prec_bits,
                             zl_real** out_re, zl_real** out_im) {
    return guard([&] {
        if (!out_re || !out_im) throw InvalidArgument("zl_polylog_at_root: null output");
        BigComplex v = polylog_at_root(m, q, a, require_prec(prec_bits));
        *out_re = wrap(v.real());
        *out_im = wrap(v.imag());
    });
}

zl_status zl_mzv(const int64_t* exponents, size_t count, int64_t prec_bits, zl_real** out) {
    return guard([&] {
        if (!exponents || !out || count == 0)
            throw InvalidArgument("zl_mzv: null or empty exponent list");
        std::vector<long> s(exponents, exponents + count);
        *out = wrap(mzv(s, require_prec(prec_bits)));
    });
}

zl_status zl_even_zeta_exact(int64_t m, char** out_rational) {
    return guard([&] {
        if (!out_rational) throw InvalidArgument("zl_even_zeta_exact: null output");
        *out_rational = dup_string(even_zeta_exact(m).to_string());
    });
}

zl_status zl_l_value(const char* periodic_json, int64_t k, int64_t prec_bits, int method,
                     zl_real** out) {
    return guard([&] {
        if (!out) throw InvalidArgument("zl_l_value: null output");
        PeriodicFunction f = periodic_from_json(parse_json(periodic_json, "periodic function"));
        LValueMethod mm = method == 1 ? LValueMethod::kSeries : LValueMethod::kHurwitz;
        *out = wrap(l_value(f, k, require_prec(prec_bits), mm));
    });
}

zl_status zl_dirichlet_l_value(const char* character_json, int64_t k, int64_t prec_bits,
                               zl_real** out_re, zl_real** out_im) {
    return guard([&] {
        if (!out_re || !out_im) throw InvalidArgument("zl_dirichlet_l_value: null output");
        DirichletCharacter chi = character_from_json(parse_json(character_json, "character"));
        BigComplex v = dirichlet_l_value(chi, k, require_prec(prec_bits));
        *out_re = wrap(v.real());
        *out_im = wrap(v.imag());
    });
}

zl_status zl_enumerate_characters(int64_t q, char** out_json) {
    return guard([&] {
        if (!out_json) throw InvalidArgument("zl_enumerate_characters: null output");
        json arr = json::array();
        for (const auto& chi : enumerate_characters(q)) arr.push_back(character_json(chi));
        *out_json = dup_string(arr.dump());
    });
}

zl_status zl_kronecker_symbol(int64_t discriminant, int64_t n, int* out) {
    return guard([&] {
        if (!out) throw InvalidArgument("zl_kronecker_symbol: null output");
        *out = kronecker_symbol(discriminant, n);
    });
}

zl_status zl_gauss_sum(int64_t discriminant, int64_t b, int64_t prec_bits, char** exact_json,
                       zl_real** out_re, zl_real** out_im) {
    return guard([&] {
        if (!exact_json || !out_re || !out_im)
            throw InvalidArgument("zl_gauss_sum: null output");
        DirichletCharacter chi = kronecker_character(discriminant);
        CyclotomicNumber tau = gauss_sum(chi, b);
        BigComplex v = tau.embed(require_prec(prec_bits));
        *exact_json = dup_string(cyclotomic_json(tau).dump());
        *out_re = wrap(v.real());
        *out_im = wrap(v.imag());
    });
}

zl_status zl_verify(const char* identity, const char* params_json, int64_t prec_bits,
                    char** report_json, int* pass_out) {
    return guard([&] {
        if (!identity || !report_json || !pass_out)
            throw InvalidArgument("zl_verify: null argument");
        json p = params_json ? parse_json(params_json, "params") : json::object();
        long prec = require_prec(prec_bits);
        std::string name = identity;
        IdentityReport rep;
        if (name == "euler-factor") {
            rep = check_euler_factor(param_long(p, "k"), param_long(p, "q"), prec);
        } else if (name == "reflection") {
            rep = check_reflection(param_long(p, "k"), param_long(p, "q"),
                                   param_long_or(p, "a", 0), prec);
        } else if (name == "hecke") {
            rep = check_hecke_formula(param_long(p, "k"), param_long(p, "q"),
                                      param_long_or(p, "a", 0), prec);
        } else if (name == "dedekind") {
            rep = check_dedekind_determinant(param_long(p, "q"), param_long(p, "k"), prec);
        } else if (name == "dedekind-generic") {
            std::vector<long> orders = p.contains("orders")
                                           ? p.at("orders").get<std::vector<long>>()
                                           : std::vector<long>{};
            long n = 1;
            for (long o : orders) n *= o;
            std::vector<CyclotomicNumber> F;
            if (p.contains("values")) {
                for (const auto& e : p.at("values"))
                    F.push_back(CyclotomicNumber::from_rational(
                        1, Rational::from_string(e.get<std::string>())));
            } else {
                // deterministic small-integer values when none are given
                for (long i = 0; i < n; ++i)
                    F.push_back(CyclotomicNumber::from_rational(
                        1, Rational(2 * i + 1, 1 + (i % 3))));
            }
            rep = check_dedekind_generic(orders, F);
        } else if (name == "gauss") {
            rep = check_gauss_sum(param_long(p, "disc"));
        } else if (name == "stuffle") {
            if (p.contains("s1") && p.contains("s2"))
                rep = check_stuffle_pair(param_long(p, "s1"), param_long(p, "s2"), prec);
            else
                rep = check_stuffle(param_long_or(p, "d", 1), prec);
        } else if (name == "lemma19") {
            rep = check_lemma19_ingredients(param_long(p, "disc"),
                                            param_long_or(p, "d", 1), prec);
        } else if (name == "eq1") {
            PeriodicFunction f =
                p.contains("periodic")
                    ? periodic_from_json(p.at("periodic"))
                    : degenerate_function(param_long(p, "q"), param_long(p, "k"),
                                          p.contains("c")
                                              ? Rational::from_string(
                                                    p.at("c").get<std::string>())
                                              : Rational(1));
            rep = check_eq1(f, param_long(p, "k"), prec);
        } else {
            throw InvalidArgument("zl_verify: unknown identity '" + name + "'");
        }
        *pass_out = rep.pass ? 1 : 0;
        *report_json = dup_string(identity_report_json(rep).dump());
    });
}

zl_status zl_dimension(const char* space, const char* params_json, int64_t height_bound,
                       int64_t prec_bits, char** report_json) {
    return guard([&] {
        if (!space || !report_json) throw InvalidArgument("zl_dimension: null argument");
        json p = params_json ? parse_json(params_json, "params") : json::object();
        long prec = require_prec(prec_bits);
        long H = static_cast<long>(height_bound);
        std::string name = space;
        DimensionEvidence ev;
        if (name == "strong-cm") {
            ev = strong_cm_dimension_evidence(param_long(p, "k"), param_long(p, "q"), H, prec);
        } else if (name == "cm") {
            ev = cm_dimension_evidence(param_long(p, "k"), param_long(p, "q"), H, prec);
        } else if (name == "okada") {
            ev = okada_set_evidence(param_long(p, "k"), param_long(p, "q"), H, prec);
        } else if (name == "zagier") {
            ev = zagier_dimension_evidence(param_long(p, "weight"), H, prec,
                                           param_long_or(p, "length_cap", 3));
        } else {
            throw InvalidArgument("zl_dimension: unknown space '" + name + "'");
        }
        *report_json = dup_string(dimension_evidence_json(ev).dump());
    });
}

}  // extern "C"
