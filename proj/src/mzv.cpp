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

#include "mzv.hpp"

#include <algorithm>

#include "errors.hpp"
#include "hurwitz.hpp"

namespace zetalab {

namespace {

long ceil_log2(long n) {
    long e = 0;
    while ((1L << e) < n) ++e;
    return e;
}

/* word over {0,1}: 0 = dt/t, 1 = dt/(1-t); leftmost letter outermost */
std::vector<int> word_of_composition(const std::vector<long>& s) {
    std::vector<int> w;
    for (long part : s) {
        for (long i = 1; i < part; ++i) w.push_back(0);
        w.push_back(1);
    }
    return w;
}

/* inverse of the above; requires the word to end in 1 */
std::vector<long> composition_of_word(const std::vector<int>& w) {
    std::vector<long> s;
    long zeros = 0;
    for (int c : w) {
        if (c == 0) {
            ++zeros;
        } else {
            s.push_back(zeros + 1);
            zeros = 0;
        }
    }
    return s;
}

/* Li at 1/2 with a rigorous geometric tail bound, at working precision W
 * targeting absolute error 2^{-target} */
BigReal li_half(const std::vector<long>& a, long W, long target) {
    long m = static_cast<long>(a.size());
    long N = std::max({32L, 8 * m, target + 16});
    while (-N + 2 + (m - 1) * ceil_log2(N + 1) > -target) N += 32;

    BigReal sum(0, W);
    BigReal half_pow(1, W);
    std::vector<BigReal> acc(m + 1, BigReal(0, W));  // acc[i] = B_i(n-1), 2-indexed
    for (long i = 2; i <= m; ++i) acc[i] = BigReal(0, W);
    for (long n = 1; n <= N; ++n) {
        half_pow = half_pow.mul_2exp(-1);
        BigReal inv_n = BigReal(1, W) / BigReal(n, W);
        BigReal term = half_pow * inv_n.pow_si(a[0]);
        if (m > 1) term = term * acc[2];
        sum = sum + term;
        // B_i(n) = B_i(n-1) + n^{-a_i} B_{i+1}(n-1), updated top-down so each
        // step still sees the previous row of the deeper level
        for (long i = 2; i <= m; ++i) {
            BigReal inner = (i == m) ? BigReal(1, W) : acc[i + 1];
            acc[i] = acc[i] + inv_n.pow_si(a[i - 1]) * inner;
        }
    }
    return sum.with_extra_error(-N + 2 + (m - 1) * ceil_log2(N + 1));
}

}  // namespace

BigReal multiple_polylog_half(const std::vector<long>& composition, long precision_bits) {
    if (composition.empty()) throw InvalidArgument("multiple_polylog_half: empty composition");
    for (long p : composition)
        if (p < 1) throw InvalidArgument("multiple_polylog_half: parts must be positive");
    for (long W = precision_bits + 64;; W *= 2) {
        BigReal v = li_half(composition, W, precision_bits + 8);
        if (v.error_exp() <= 1 - precision_bits) return v;
    }
}

BigReal mzv(const std::vector<long>& exponents, long precision_bits) {
    if (exponents.empty()) throw InvalidArgument("mzv: empty exponent list");
    for (long s : exponents)
        if (s < 1) throw InvalidArgument("mzv: exponents must be positive");
    if (exponents[0] < 2) throw DomainError("mzv: leading exponent must exceed 1 (divergent)");
    long weight = 0;
    for (long s : exponents) weight += s;
    if (weight > 64) throw InvalidArgument("mzv: weight too large");
    if (exponents.size() == 1) return riemann_zeta(exponents[0], precision_bits);

    std::vector<int> w = word_of_composition(exponents);
    long len = static_cast<long>(w.size());
    for (long W = precision_bits + 96;; W *= 2) {
        long target = precision_bits + 8 + ceil_log2(len + 2);
        BigReal total(0, W);
        for (long j = 0; j <= len; ++j) {
            BigReal left(1, W), right(1, W);
            if (j > 0) {
                std::vector<int> u(w.begin(), w.begin() + j);
                std::reverse(u.begin(), u.end());
                for (int& c : u) c ^= 1;
                left = li_half(composition_of_word(u), W, target);
            }
            if (j < len) {
                std::vector<int> v(w.begin() + j, w.end());
                right = li_half(composition_of_word(v), W, target);
            }
            total = total + left * right;
        }
        if (total.error_exp() <= 1 - precision_bits) return total;
    }
}

}  // namespace zetalab
