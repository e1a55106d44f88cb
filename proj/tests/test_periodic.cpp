#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "hurwitz.hpp"
#include "numbers.hpp"
#include "periodic.hpp"

using namespace zetalab;

namespace {
PeriodicFunction random_function(std::mt19937_64& rng, long q) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    std::vector<Rational> vals(q);
    for (long i = 0; i < q; ++i) vals[i] = Rational(num(rng), den(rng));
    return PeriodicFunction(q, std::move(vals));
}
}  // namespace

TEST_CASE("indexing convention: f(q) is the residue-zero value") {
    PeriodicFunction f(3, {Rational(1), Rational(2), Rational(5)});
    CHECK(f.at(3) == Rational(5));
    CHECK(f.at(0) == Rational(5));
    CHECK(f.at(6) == Rational(5));
    CHECK(f.at(1) == Rational(1));
    CHECK(f.at(-1) == Rational(2));
}

TEST_CASE("fourier transform of the constant function") {
    auto f = PeriodicFunction::constant(3, Rational(1));
    auto fh = fourier_transform(f);
    CHECK(fh.coefficients[0].is_zero());
    CHECK(fh.coefficients[1].is_zero());
    CHECK(fh.coefficients[2] == CyclotomicNumber::one(3));
}

TEST_CASE("fourier of q=1 and of an indicator") {
    auto f1 = PeriodicFunction::constant(1, Rational(7, 2));
    auto fh1 = fourier_transform(f1);
    CHECK(fh1.coefficients[0] == CyclotomicNumber::from_rational(1, Rational(7, 2)));

    // indicator of residue 1 mod 4: fhat(n) = (1/4) zeta_4^{-n}
    auto ind = PeriodicFunction::indicator(4, 1);
    auto fih = fourier_transform(ind);
    for (long n = 1; n <= 4; ++n)
        CHECK(fih.coefficients[n - 1] == Rational(1, 4) * CyclotomicNumber::root(4, -n));
}

TEST_CASE("exact fourier round trip on random functions") {
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<long> qd(1, 24);
    for (int rep = 0; rep < 100; ++rep) {
        long q = qd(rng);
        auto f = random_function(rng, q);
        CHECK(fourier_inverse(fourier_transform(f)) == f);
    }
    // direct inverse example: coefficients (0,0,1) -> constant 1
    FourierCoefficients F;
    F.period = 3;
    F.coefficients = {CyclotomicNumber::zero(3), CyclotomicNumber::zero(3),
                      CyclotomicNumber::one(3)};
    CHECK(fourier_inverse(F) == PeriodicFunction::constant(3, Rational(1)));
}

TEST_CASE("fourier inverse rejects non-rational spectra") {
    FourierCoefficients F;
    F.period = 3;
    F.coefficients = {CyclotomicNumber::root(3, 1), CyclotomicNumber::zero(3),
                      CyclotomicNumber::zero(3)};
    CHECK_THROWS_AS(fourier_inverse(F), DomainError);
}

TEST_CASE("twists act as expected") {
    auto f = PeriodicFunction::indicator(5, 1);
    auto f2 = twist(f, 2);
    CHECK(f2 == PeriodicFunction::indicator(5, 2));
    CHECK(twist(f, 1) == f);
    std::mt19937_64 rng(8);
    for (long q : {5L, 8L, 12L}) {
        auto g = random_function(rng, q);
        for (long h = 1; h < q; ++h) {
            if (gcd_long(h, q) != 1) continue;
            CHECK(twist(twist(g, h), mod_inverse(h, q)) == g);
            CHECK(twist(g, h).at(q) == g.at(q));
        }
    }
    CHECK_THROWS_AS(twist(f, 5), DomainError);
}

TEST_CASE("twist is compatible with the Galois action on the spectrum") {
    std::mt19937_64 rng(2718);
    for (long q = 1; q <= 12; ++q) {
        auto f = random_function(rng, q);
        auto fh = fourier_transform(f);
        for (long h = 1; h <= q; ++h) {
            if (gcd_long(h, q) != 1) continue;
            auto gh = fourier_transform(twist(f, h));
            for (long n = 1; n <= q; ++n)
                CHECK(gh.coefficients[n - 1] == fh.coefficients[n - 1].galois(h));
        }
    }
}

TEST_CASE("degenerate function values") {
    auto f = degenerate_function(2, 2, Rational(1));
    CHECK(f.values[0] == Rational(-1, 3));
    CHECK(f.values[1] == Rational(1));

    auto f4 = degenerate_function(4, 2, Rational(0));
    for (long a = 1; a < 4; ++a) CHECK(f4.values[a - 1].is_zero());

    auto f6 = degenerate_function(6, 2, Rational(1));
    CHECK(f6.values[0] == Rational(-1, 24));
    CHECK(f6.values[4] == Rational(-1, 24));
    CHECK(f6.values[1].is_zero());
    CHECK(f6.values[2].is_zero());
    CHECK(f6.values[3].is_zero());
    CHECK(f6.values[5] == Rational(1));
}

TEST_CASE("l_value: hurwitz route on familiar functions") {
    // constant 1 with q=1 gives zeta(k)
    auto one = PeriodicFunction::constant(1, Rational(1));
    auto v = l_value(one, 2, 256);
    CHECK((v - BigReal::pi(320).pow_si(2) / BigReal(6, 320)).magnitude_at_most_exp(-246));

    // chi_{-4} as a periodic function at k=3: pi^3/32
    PeriodicFunction chi4(4, {Rational(1), Rational(0), Rational(-1), Rational(0)});
    auto b3 = l_value(chi4, 3, 256);
    CHECK((b3 - BigReal::pi(320).pow_si(3) / BigReal(32, 320)).magnitude_at_most_exp(-244));

    CHECK_THROWS_AS(l_value(one, 1, 128), DomainError);
}

TEST_CASE("degenerate functions have vanishing L values") {
    for (long q : {2L, 3L, 4L, 6L})
        for (long k : {2L, 3L}) {
            auto f = degenerate_function(q, k, Rational(1));
            auto v = l_value(f, k, 256);
            CHECK(v.magnitude_at_most_exp(4 - 256));
        }
    // and stay zero under every twist
    for (long h : {1L, 3L, 5L, 7L}) {
        auto f = twist(degenerate_function(8, 3, Rational(2)), h);
        CHECK(l_value(f, 3, 200).magnitude_at_most_exp(4 - 200));
    }
}

TEST_CASE("two evaluation methods agree") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<long> qd(1, 8);
    int done = 0;
    while (done < 50) {
        long q = qd(rng);
        long k = 2 + done % 3;
        long P = (k == 2) ? 8 : (k == 3 ? 16 : 24);
        auto f = random_function(rng, q);
        auto a = l_value(f, k, P, LValueMethod::kHurwitz);
        auto b = l_value(f, k, P, LValueMethod::kSeries);
        CHECK((a - b).magnitude_at_most_exp(4 - P));
        ++done;
    }
    // the series method refuses precision beyond desk scale at k=2
    auto g = PeriodicFunction::constant(3, Rational(1));
    CHECK_THROWS_AS(l_value(g, 2, 256, LValueMethod::kSeries), PrecisionError);
}

TEST_CASE("eq1 decomposition") {
    // degenerate function: every bracket is exactly zero
    for (long q : {2L, 4L, 6L}) {
        auto f = degenerate_function(q, 3, Rational(1));
        auto terms = eq1_decomposition(f, 3, 128);
        CHECK(terms.size() == static_cast<size_t>(totient(q)));
        for (const auto& t : terms) CHECK(t.bracket.is_zero());
    }

    // indicator of 1 mod 3 at k=2: f(3) = 0 so brackets equal f(a)
    auto ind = PeriodicFunction::indicator(3, 1);
    auto terms = eq1_decomposition(ind, 2, 128);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].bracket == Rational(1));
    CHECK(terms[1].bracket == Rational(0));

    // f = 1 on coprime residues mod 4, f(4) = 0, k = 2:
    // the combination equals (1/16)(zeta(2,1/4)+zeta(2,3/4)) = pi^2/8
    PeriodicFunction f4(4, {Rational(1), Rational(0), Rational(1), Rational(0)});
    auto t4 = eq1_decomposition(f4, 2, 256);
    BigReal acc(0, 288);
    for (const auto& t : t4)
        acc = acc + BigReal::from_rational(t.bracket, 288) * t.hurwitz;
    acc = acc.mul_2exp(-4);  // q^{-k} = 1/16
    CHECK((acc - BigReal::pi(320).pow_si(2) / BigReal(8, 320)).magnitude_at_most_exp(-245));

    // hypothesis violated: nonzero on an intermediate-gcd residue
    PeriodicFunction bad(4, {Rational(0), Rational(1), Rational(0), Rational(0)});
    CHECK_THROWS_AS(eq1_decomposition(bad, 2, 128), DomainError);
}
