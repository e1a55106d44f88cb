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

#include <vector>

#include "rational.hpp"

namespace zetalab {

/* B_n in the convention B_1 = -1/2.  Values are cached process-wide; the
 * cache is safe for concurrent callers. */
Rational bernoulli_number(long n);

/*
 * B_l(x) with dense coefficients in ascending degree.  Monic for l >= 1,
 * and B_l(0) is the l-th Bernoulli number.
 */
struct BernoulliPolynomial {
    long degree;
    std::vector<Rational> coefficients;  // coefficients[j] multiplies x^j

    Rational evaluate(const Rational& x) const;
};

BernoulliPolynomial bernoulli_polynomial(long l);

/* B_l(x) evaluated exactly at a rational point */
Rational bernoulli_polynomial_at(long l, const Rational& x);

}  // namespace zetalab
