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

#include "bernoulli.hpp"

#include <mutex>

#include "errors.hpp"

namespace zetalab {

namespace {
std::mutex cache_mutex;
std::vector<Rational> cache;  // cache[n] = B_n once populated
}  // namespace

Rational bernoulli_number(long n) {
    if (n < 0) throw InvalidArgument("bernoulli_number: negative index");
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (cache.empty()) {
        cache.push_back(Rational(1));
        cache.push_back(Rational(-1, 2));
    }
    // B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        Rational s(0);
        for (long j = 0; j < m; ++j)
            s += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(s / Rational(-(m + 1)));
    }
    return cache[n];
}

BernoulliPolynomial bernoulli_polynomial(long l) {
    if (l < 0) throw InvalidArgument("bernoulli_polynomial: negative degree");
    // B_l(x) = sum_j C(l,j) B_j x^(l-j)
    BernoulliPolynomial p;
    p.degree = l;
    p.coefficients.assign(l + 1, Rational(0));
    for (long j = 0; j <= l; ++j)
        p.coefficients[l - j] = Rational(binomial(l, j)) * bernoulli_number(j);
    return p;
}

Rational BernoulliPolynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (long j = degree; j >= 0; --j) acc = acc * x + coefficients[j];
    return acc;
}

Rational bernoulli_polynomial_at(long l, const Rational& x) {
    return bernoulli_polynomial(l).evaluate(x);
}

}  // namespace zetalab
