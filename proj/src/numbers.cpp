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

#include "numbers.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace zetalab {

long gcd_long(long a, long b) { return std::gcd(a, b); }

long mod_reduce(long a, long m) {
    if (m < 1) throw InvalidArgument("mod_reduce: modulus must be positive");
    long r = a % m;
    return r < 0 ? r + m : r;
}

long mod_pow(long a, long e, long m) {
    if (m < 1) throw InvalidArgument("mod_pow: modulus must be positive");
    if (e < 0) throw InvalidArgument("mod_pow: negative exponent");
    unsigned long long r = 1;
    unsigned long long base = static_cast<unsigned long long>(mod_reduce(a, m));
    unsigned long long mm = static_cast<unsigned long long>(m);
    while (e > 0) {
        if (e & 1) r = r * base % mm;
        base = base * base % mm;
        e >>= 1;
    }
    return static_cast<long>(r);
}

long mod_inverse(long a, long m) {
    long r0 = m, r1 = mod_reduce(a, m);
    long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long rt = r0 - q * r1; r0 = r1; r1 = rt;
        long st = s0 - q * s1; s0 = s1; s1 = st;
    }
    if (r0 != 1) throw DomainError("mod_inverse: argument not coprime to modulus");
    return mod_reduce(s0, m);
}

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw InvalidArgument("factorize: argument must be positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

bool is_squarefree(long n) {
    if (n < 1) return false;
    for (auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

long totient(long n) {
    if (n < 1) throw InvalidArgument("totient: argument must be positive");
    long phi = n;
    for (auto& [p, e] : factorize(n)) phi -= phi / p;
    return phi;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> coprime_residues(long n) {
    std::vector<long> out;
    for (long a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) out.push_back(a);
    return out;
}

long primitive_root(long p, int e) {
    if (!is_prime(p) || p == 2) throw InvalidArgument("primitive_root: need an odd prime");
    auto qs = factorize(p - 1);
    long g = 0;
    for (long c = 2; c < p; ++c) {
        bool ok = true;
        for (auto& [q, _] : qs)
            if (mod_pow(c, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) { g = c; break; }
    }
    if (e == 1) return g;
    // lift to p^e: g works unless g^(p-1) ≡ 1 mod p^2, in which case g+p does
    long p2 = p * p;
    if (mod_pow(g, p - 1, p2) == 1) g += p;
    return g;
}

int legendre_symbol(long a, long p) {
    if (!is_prime(p) || p == 2) throw InvalidArgument("legendre_symbol: need an odd prime");
    long r = mod_pow(a, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

bool is_fundamental_discriminant(long d) {
    if (d == 0) return false;
    long r = mod_reduce(d, 4);
    if (r == 1) return is_squarefree(d < 0 ? -d : d);
    if (r != 0) return false;
    long m = d / 4;
    long rm = mod_reduce(m, 4);
    if (rm != 2 && rm != 3) return false;
    return is_squarefree(m < 0 ? -m : m);
}

}  // namespace zetalab
