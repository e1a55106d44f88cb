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

#include "bigreal.hpp"

namespace zetalab {

/*
 * zeta(s_1, ..., s_k) = sum_{n_1 > ... > n_k >= 1} prod n_i^{-s_i},
 * s_1 > 1, with absolute error <= 2^(1-precision_bits).
 *
 * Length 1 delegates to riemann_zeta.  Longer values go through the
 * iterated-integral representation over words in {dt/t, dt/(1-t)}: the
 * integral over [0,1] splits at 1/2 into a convolution of prefix and
 * suffix integrals, and both factors become multiple polylogarithms at
 * z = 1/2 whose series gain a bit per term.  That keeps every admissible
 * composition evaluable at hundreds of bits, independent of the stuffle
 * identities the checker verifies.
 */
BigReal mzv(const std::vector<long>& exponents, long precision_bits);

/* multiple polylog Li_{a_1,...,a_m}(1/2) used by the convolution;
 * exposed for tests */
BigReal multiple_polylog_half(const std::vector<long>& composition, long precision_bits);

}  // namespace zetalab
