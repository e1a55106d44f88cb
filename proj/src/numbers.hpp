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

#include <cstdint>
#include <vector>

namespace zetalab {

/* Elementary number theory on machine integers.  Everything here operates
 * at "desk scale" (moduli and discriminants comfortably below 2^31); the
 * arbitrary-precision work lives in Rational / CyclotomicNumber / BigReal. */

long gcd_long(long a, long b);

/* a^e mod m, m >= 1, e >= 0 */
long mod_pow(long a, long e, long m);

/* inverse of a mod m; throws DomainError if gcd(a,m) != 1 */
long mod_inverse(long a, long m);

/* least non-negative residue */
long mod_reduce(long a, long m);

/* prime factorization by trial division, ascending primes */
std::vector<std::pair<long, int>> factorize(long n);

bool is_prime(long n);
bool is_squarefree(long n);

/* Euler's totient; phi(1) = 1 */
long totient(long n);

/* all positive divisors, ascending */
std::vector<long> divisors(long n);

/* residues 1 <= a <= n with gcd(a,n) = 1, ascending (n itself for n = 1) */
std::vector<long> coprime_residues(long n);

/* smallest primitive root modulo p^e (p odd prime) */
long primitive_root(long p, int e);

/* Legendre symbol (a/p) for odd prime p */
int legendre_symbol(long a, long p);

/* true iff d is a fundamental discriminant: d = 1, or d ≡ 1 (mod 4)
 * squarefree, or d = 4m with m ≡ 2,3 (mod 4) squarefree */
bool is_fundamental_discriminant(long d);

}  // namespace zetalab
