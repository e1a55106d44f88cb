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

/*
 * zetalab C API.
 *
 * A C interface over the zetalab core: guaranteed-precision evaluation of
 * Hurwitz zeta values, Dirichlet L-functions, polylogarithms at roots of
 * unity and multiple zeta values; exact and numeric verification of the
 * classical identities relating them; and integer-relation searches over
 * their rational spans.
 *
 * Conventions:
 *   - numeric results come back as opaque zl_real handles carrying both a
 *     decimal rendering and a binary error bound; free with zl_real_free.
 *   - structured results (reports, characters) come back as JSON strings
 *     allocated by the library; free with zl_free_string.
 *   - rationals cross the boundary as strings "p/q".
 *   - every function returns a zl_status; on failure call zl_last_error()
 *     for a message (thread-local).
 */

#ifndef ZETALAB_H
#define ZETALAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zl_status {
    ZL_OK = 0,
    ZL_ERR_INVALID = 1,    /* malformed input (syntax, unknown name) */
    ZL_ERR_DOMAIN = 2,     /* mathematically out of domain */
    ZL_ERR_PRECISION = 3,  /* precision cannot support the request */
    ZL_ERR_INTERNAL = 4
} zl_status;

/* opaque precision-tracked real number */
typedef struct zl_real zl_real;

const char* zl_version(void);

/* message for the most recent failure on this thread */
const char* zl_last_error(void);

/* required precision estimate attached to the most recent
 * ZL_ERR_PRECISION failure on this thread (0 if none) */
long zl_last_required_bits(void);

/* ---- value handles ---- */

/* decimal rendering limited to the digits the error bound supports */
const char* zl_real_decimal(const zl_real* v);
/* absolute error <= 2^(this); INT64_MIN means exact */
int64_t zl_real_error_log2(const zl_real* v);
double zl_real_approx(const zl_real* v);
void zl_real_free(zl_real* v);

void zl_free_string(char* s);

/* ---- evaluation ----
 * All results carry absolute error at most 2^(1 - prec_bits). */

/* zeta(k, x) for integer k >= 2 and rational x in (0,1] ("p/q") */
zl_status zl_hurwitz_zeta(int64_t k, const char* x, int64_t prec_bits, zl_real** out);

zl_status zl_riemann_zeta(int64_t k, int64_t prec_bits, zl_real** out);

/* Li_m(zeta_q^a); out_im may receive a nonzero imaginary part */
zl_status zl_polylog_at_root(int64_t m, int64_t q, int64_t a, int64_t prec_bits,
                             zl_real** out_re, zl_real** out_im);

/* zeta(s_1,...,s_k) for s_1 >= 2 */
zl_status zl_mzv(const int64_t* exponents, size_t count, int64_t prec_bits, zl_real** out);

/* exact zeta(2m)/pi^(2m) as "p/q" */
zl_status zl_even_zeta_exact(int64_t m, char** out_rational);

/* L(k, f) for a periodic function {"period": q, "values": ["p/q", ...]};
 * method 0 = Hurwitz decomposition, 1 = direct series */
zl_status zl_l_value(const char* periodic_json, int64_t k, int64_t prec_bits,
                     int method, zl_real** out);

/* L(k, chi) for a character {"modulus": q, "images": [...]} (as produced
 * by zl_enumerate_characters); k = 1 needs a non-principal character */
zl_status zl_dirichlet_l_value(const char* character_json, int64_t k, int64_t prec_bits,
                               zl_real** out_re, zl_real** out_im);

/* all phi(q) characters mod q as a JSON array */
zl_status zl_enumerate_characters(int64_t q, char** out_json);

/* Kronecker symbol (d/n) for a fundamental discriminant */
zl_status zl_kronecker_symbol(int64_t discriminant, int64_t n, int* out);

/* tau(chi_d, b): exact cyclotomic JSON plus a numeric embedding */
zl_status zl_gauss_sum(int64_t discriminant, int64_t b, int64_t prec_bits,
                       char** exact_json, zl_real** out_re, zl_real** out_im);

/* ---- verification ----
 * identity is one of: euler-factor, hecke, dedekind, dedekind-generic,
 * gauss, stuffle, lemma19, eq1, reflection.  params_json carries the
 * identity's parameters; the report is returned as JSON.  *pass_out is 1
 * when the identity verified. */
zl_status zl_verify(const char* identity, const char* params_json, int64_t prec_bits,
                    char** report_json, int* pass_out);

/* ---- dimension evidence ----
 * space is one of: cm, strong-cm, okada, zagier.  params_json:
 *   cm/strong-cm: {"k": .., "q": ..}, okada: {"k": .., "q": ..},
 *   zagier: {"weight": .., "length_cap"?: ..}.
 * Emits the structured evidence report as JSON. */
zl_status zl_dimension(const char* space, const char* params_json, int64_t height_bound,
                       int64_t prec_bits, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* ZETALAB_H */
