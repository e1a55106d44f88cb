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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigreal.hpp"
#include "cyclotomic.hpp"
#include "periodic.hpp"

namespace zetalab {

/*
 * Outcome of one identity check.  Exact-mode checks pass only on a
 * structurally zero residual in the cyclotomic field; numeric checks pass
 * when the residual is below the tolerance derived from the requested
 * precision.
 */
struct IdentityReport {
    std::string name;
    std::map<std::string, std::string> params;
    bool exact_mode = false;
    bool exact_zero = false;            // exact mode only
    std::optional<BigReal> residual;    // numeric mode (absolute value)
    long tolerance_exp = 0;             // numeric mode: pass iff residual <= 2^tol
    bool pass = false;
    long precision_bits = 0;
    std::string detail;                 // human-readable extras (exact values etc.)
};

/* zeta(k) prod_{p|q}(1 - p^{-k}) = q^{-k} sum_{(a,q)=1} zeta(k, a/q) */
IdentityReport check_euler_factor(long k, long q, long precision_bits);

/* zeta(k,a/q) + (-1)^k zeta(k,1-a/q) against the cotangent-derivative
 * closed form; a = 0 sweeps all valid residues and reports the worst */
IdentityReport check_reflection(long k, long q, long a, long precision_bits);

/*
 * (zeta(k,a/q) - zeta(k,1-a/q)) / (2 pi i)^k
 *     = (q^{k-1} / 2 k!) sum_b (zeta_q^{ab} - zeta_q^{-ab}) B_k(b/q),
 * k odd; the right side is computed exactly in Q(zeta_q) and embedded.
 * a = 0 sweeps all valid residues.
 */
IdentityReport check_hecke_formula(long k, long q, long a, long precision_bits);

/* returns the exact right side of the Hecke formula */
CyclotomicNumber hecke_exact_value(long k, long q, long a);

/* |det(zeta(k, bh/q))| = prod_chi |q^k L(k,chi)|, both numeric */
IdentityReport check_dedekind_determinant(long q, long k, long precision_bits);

/*
 * Exact Dedekind determinant over a finite abelian group given as a list
 * of cyclic orders: det(F(x y^{-1})) = prod_chi sum_x chi(x) F(x).
 * F is indexed by mixed-radix rank of the tuple.
 */
IdentityReport check_dedekind_generic(const std::vector<long>& cyclic_orders,
                                      const std::vector<CyclotomicNumber>& F);

/* tau(chi_d)^2 = d, twisted factorization, odd-character folding; exact */
IdentityReport check_gauss_sum(long discriminant);

/* zeta(2d+1)^2 = 2 zeta(2d+1, 2d+1) + zeta(4d+2) */
IdentityReport check_stuffle(long d, long precision_bits);

/* zeta(s1) zeta(s2) = zeta(s1,s2) + zeta(s2,s1) + zeta(s1+s2) */
IdentityReport check_stuffle_pair(long s1, long s2, long precision_bits);

/*
 * The two computational ingredients behind the Bernoulli-weighted Gauss
 * sum argument: the exact identity
 *   sum_{a<=q/2} chi(a) sum_b (zeta^{ab}-zeta^{-ab}) B_{2d+1}(b/q)
 *       = tau(chi) sum_b chi(b) B_{2d+1}(b/q)
 * in Q(zeta_q), and the numeric link L(2d+1, chi) =
 * (2 pi i)^{2d+1} tau(chi) S_B / (2 q (2d+1)!).
 */
IdentityReport check_lemma19_ingredients(long discriminant, long d, long precision_bits);

/* every bracket of the degenerate function vanishes exactly and
 * L(k, f) = 0 numerically; for general admissible f the bracket
 * combination must reproduce l_value(f, k) */
IdentityReport check_eq1(const PeriodicFunction& f, long k, long precision_bits);

std::string identity_report_brief(const IdentityReport& r);

}  // namespace zetalab
