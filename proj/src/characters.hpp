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

#include <memory>
#include <vector>

#include "bigreal.hpp"
#include "cyclotomic.hpp"

namespace zetalab {

/*
 * (Z/qZ)* decomposed into cyclic factors by CRT: one factor per odd prime
 * power, one or two for the power of two.  Generators are residues mod q;
 * the table maps every coprime residue to its exponent tuple.
 */
struct UnitGroup {
    long modulus;
    std::vector<long> generators;
    std::vector<long> orders;      // parallel to generators
    long exponent;                 // lcm of orders (1 for q = 1, 2)
    long order;                    // phi(q)

    /* exponent tuple of a residue coprime to q; throws DomainError else */
    const std::vector<long>& decompose(long a) const;

    static std::shared_ptr<const UnitGroup> get(long q);  // cached

    std::vector<std::vector<long>> tuples;   // indexed by residue position
    std::vector<long> residue_index;         // residue -> position or -1
    std::vector<long> coprimes;              // ascending coprime residues
};

/*
 * Dirichlet character mod q given by images of the unit-group generators:
 * chi(g_i) = zeta_m^{(m / orders[i]) * images[i]} with m the group
 * exponent.  Values live in Q(zeta_ord) where ord is the character order.
 */
class DirichletCharacter {
  public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<long> images);

    long modulus() const { return group_->modulus; }
    const UnitGroup& group() const { return *group_; }
    const std::vector<long>& images() const { return images_; }

    bool is_principal() const;
    /* multiplicative order of the character */
    long order() const;
    /* chi(-1) = +1 (even) or -1 (odd) */
    bool is_odd() const;
    /* smallest d | q through which chi factors */
    long conductor() const;
    bool is_primitive() const { return conductor() == modulus(); }

    /* exponent e with chi(a) = zeta_m^e, m the group exponent; no value for
     * residues sharing a factor with q */
    bool value_exponent(long a, long& e_out) const;
    /* chi(a) as an exact cyclotomic number (conductor = character order) */
    CyclotomicNumber value(long a) const;

    DirichletCharacter conjugate() const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus() == b.modulus() && a.images_ == b.images_;
    }

  private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<long> images_;
};

/* all phi(q) characters mod q, principal first, in lexicographic image order */
std::vector<DirichletCharacter> enumerate_characters(long q);

/* Kronecker symbol (d / n) for a fundamental discriminant d */
int kronecker_symbol(long discriminant, long n);

/* the quadratic character chi_d mod |d| attached to a fundamental
 * discriminant, realized as a DirichletCharacter */
DirichletCharacter kronecker_character(long discriminant);

/*
 * tau(chi, b) = sum_a chi(a) zeta_q^{ab}, exact in Q(zeta_lcm(q, ord chi)).
 */
CyclotomicNumber gauss_sum(const DirichletCharacter& chi, long b = 1);

/*
 * L(k, chi) = q^{-k} sum_a chi(a) zeta(k, a/q) for k >= 2; for k = 1 and
 * non-principal chi, evaluated through the Fourier expansion in
 * Li_1(zeta_q^a).  Error <= 2^(1-precision_bits).
 */
BigComplex dirichlet_l_value(const DirichletCharacter& chi, long k, long precision_bits);

}  // namespace zetalab
