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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigreal.hpp"
#include "rational.hpp"

namespace zetalab {

/*
 * Lattice basis reduction (LLL, delta = 99/100) on integer row vectors,
 * all-integer arithmetic.  Rows are reduced in place.
 */
void lll_reduce(std::vector<std::vector<mpz_class>>& basis);

/*
 * A relation query: labeled real numbers with a way to re-evaluate them
 * at any precision.  The evaluator must return balls with absolute error
 * at most 2^(8-bits); the detector resolves the lattice at 2^(16-bits).
 */
struct RelationQuery {
    std::vector<std::string> labels;
    std::function<std::vector<BigReal>(long bits)> evaluate;
    long height_bound = 1000000;
    long precision_bits = 300;
};

struct RelationReport {
    bool relation_found = false;
    std::vector<mpz_class> coefficients;   // primitive, first nonzero positive
    std::optional<BigReal> verified_residual;
    long height_bound = 0;
    long precision_bits = 0;
    long confirmation_bits = 0;
    std::vector<std::string> labels;
    /* certificate wording for the no-relation outcome */
    std::string certificate;
};

/* minimal precision the detector will accept for n values at height H */
long relation_required_bits(size_t n_values, long height_bound);

/*
 * Integer-relation search: scaled-column lattice, LLL, candidates
 * re-verified at doubled precision (mandatory).  A candidate counts only
 * if max |m_i| <= H and the re-evaluated |sum m_i x_i| stays below 2^-P.
 * No candidate surviving yields a heuristic no-relation certificate.
 */
RelationReport find_relation(const RelationQuery& query);

/* all verified relations in the reduced basis, as rows; used to estimate
 * evidence dimensions */
std::vector<std::vector<mpz_class>> find_all_relations(const RelationQuery& query);

/* rank over Q of a set of integer vectors */
long integer_rank(std::vector<std::vector<mpz_class>> rows);

struct DimensionEvidence {
    std::string space;
    std::map<std::string, std::string> params;
    std::vector<std::string> labels;
    std::vector<RelationReport> searches;
    std::vector<std::vector<mpz_class>> relations;  // verified, on the main set
    long evidence_dimension = 0;
    long proven_lower_bound = 0;   // 0 when none applies
    long upper_bound = 0;          // 0 when none applies
    bool consistent = true;
    bool degenerate = false;       // too few values to search
    bool relation_in_theorem_set = false;  // okada only: must stay false
};

/* {1} u {zeta(k,a/q)} plus the plus/minus half-system splits */
DimensionEvidence strong_cm_dimension_evidence(long k, long q, long height_bound,
                                               long precision_bits);

/* {zeta(k,a/q)} alone (no constant adjoined) */
DimensionEvidence cm_dimension_evidence(long k, long q, long height_bound,
                                        long precision_bits);

/* cotangent-derivative values P_k(cot(pi a/q)) over the half system T */
DimensionEvidence okada_set_evidence(long k, long q, long height_bound,
                                     long precision_bits);

/* compositions of p with first part >= 2, descending-lex */
std::vector<std::vector<long>> zagier_span(long p);

/* weight-p MZVs up to a length cap, searched among themselves and
 * against pi^p */
DimensionEvidence zagier_dimension_evidence(long p, long height_bound,
                                            long precision_bits, long length_cap = 3);

}  // namespace zetalab
