#include "characters.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "numbers.hpp"
#include "oracles.hpp"

using namespace zetalab;

TEST_CASE("character counts and principal behaviour") {
    for (long q : {1L, 2L, 3L, 4L, 5L, 8L, 12L, 15L, 16L, 24L}) {
        auto chars = enumerate_characters(q);
        CHECK(static_cast<long>(chars.size()) == totient(q));
        CHECK(chars[0].is_principal());
    }
    // q=3: principal plus the quadratic character with chi(2) = -1
    auto c3 = enumerate_characters(3);
    REQUIRE(c3.size() == 2);
    CHECK(c3[1].value(2) == CyclotomicNumber::from_rational(2, Rational(-1)));
    // q=4: the non-principal character is odd
    auto c4 = enumerate_characters(4);
    REQUIRE(c4.size() == 2);
    CHECK(c4[1].is_odd());
    CHECK(!c4[0].is_odd());
    // q=1: identically 1
    auto c1 = enumerate_characters(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].value(7) == CyclotomicNumber::one(1));
}

TEST_CASE("complete multiplicativity on coprime residues") {
    for (long q = 1; q <= 24; ++q) {
        auto residues = coprime_residues(q);
        for (const auto& chi : enumerate_characters(q))
            for (long a : residues)
                for (long b : residues)
                    CHECK(chi.value(a) * chi.value(b) == chi.value(mod_reduce(a * b, q)));
    }
}

TEST_CASE("orthogonality of characters") {
    for (long q = 1; q <= 24; ++q) {
        auto residues = coprime_residues(q);
        auto chars = enumerate_characters(q);
        for (long a : residues)
            for (long b : residues) {
                CyclotomicNumber s = CyclotomicNumber::zero(1);
                for (const auto& chi : chars)
                    s = s + chi.value(a) * chi.value(b).conj();
                if (a == b)
                    CHECK(s == CyclotomicNumber::from_rational(1, Rational(totient(q))));
                else
                    CHECK(s.is_zero());
            }
    }
}

TEST_CASE("conductors and primitivity") {
    // mod 4: the odd character is primitive
    auto c4 = enumerate_characters(4);
    CHECK(c4[1].conductor() == 4);
    CHECK(c4[1].is_primitive());
    CHECK(c4[0].conductor() == 1);
    // mod 6: phi(6)=2; the non-principal character is induced from mod 3
    auto c6 = enumerate_characters(6);
    REQUIRE(c6.size() == 2);
    CHECK(c6[1].conductor() == 3);
    CHECK(!c6[1].is_primitive());
    // mod 8 characters: conductors divide 8
    for (const auto& chi : enumerate_characters(8))
        CHECK(8 % chi.conductor() == 0);
}

TEST_CASE("kronecker symbol rules") {
    CHECK(kronecker_symbol(-4, 3) == -1);
    CHECK(kronecker_symbol(-4, 2) == 0);
    CHECK(kronecker_symbol(5, 2) == -1);
    CHECK(kronecker_symbol(1, 0) == 1);
    CHECK(kronecker_symbol(-3, 0) == 0);
    CHECK(kronecker_symbol(-4, -1) == -1);
    CHECK(kronecker_symbol(8, -1) == 1);
    CHECK_THROWS_AS(kronecker_symbol(3, 5), DomainError);  // 3 not fundamental
    // complete multiplicativity spot check
    for (long d : {-4L, 5L, -8L, 12L, -3L})
        for (long m = 1; m <= 40; ++m)
            for (long n = 1; n <= 40; ++n)
                CHECK(kronecker_symbol(d, m * n) ==
                      kronecker_symbol(d, m) * kronecker_symbol(d, n));
}

TEST_CASE("kronecker character matches the symbol tables") {
    for (long d : {-3L, -4L, -7L, -8L, -11L, -15L, -19L, -20L, 5L, 8L, 12L, 13L}) {
        auto chi = kronecker_character(d);
        long q = d < 0 ? -d : d;
        CHECK(chi.modulus() == q);
        CHECK(chi.is_primitive());
        CHECK(chi.order() <= 2);
        CHECK(chi.is_odd() == (d < 0));
        for (long n = 1; n <= 1000; ++n) {
            int sym = kronecker_symbol(d, n);
            long e;
            bool coprime = chi.value_exponent(n, e);
            if (!coprime)
                CHECK(sym == 0);
            else
                CHECK(sym == (e == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("gauss sums for small discriminants") {
    // tau(chi_{-4}) = 2i
    auto chi4 = kronecker_character(-4);
    auto tau4 = gauss_sum(chi4, 1);
    CHECK(tau4 == Rational(2) * CyclotomicNumber::root(4, 1));
    CHECK(gauss_sum(chi4, 3) == Rational(-2) * CyclotomicNumber::root(4, 1));
    // tau(chi_{-3}) = zeta_3 - zeta_3^2 = i sqrt 3, represented in Q(zeta_3)
    auto chi3 = kronecker_character(-3);
    auto tau3 = gauss_sum(chi3, 1);
    CHECK(tau3.conductor() == 3);
    CHECK(tau3 == CyclotomicNumber::root(3, 1) - CyclotomicNumber::root(3, 2));
    // principal character mod 1
    auto c1 = enumerate_characters(1);
    CHECK(gauss_sum(c1[0], 1) == CyclotomicNumber::one(1));

    // tau^2 = d and twisted factorization, exactly
    for (long d : {-3L, -4L, -7L, -8L, -11L, -15L, -19L, -20L}) {
        auto chi = kronecker_character(d);
        auto tau = gauss_sum(chi, 1);
        CHECK(tau * tau == CyclotomicNumber::from_rational(1, Rational(d)));
        for (long b : chi.group().coprimes)
            CHECK(gauss_sum(chi, b) == chi.value(b).rational_value() * tau);
    }
}

TEST_CASE("dirichlet L values") {
    // beta(3) = L(3, chi_{-4}) = pi^3/32
    auto chi4 = kronecker_character(-4);
    auto L3 = dirichlet_l_value(chi4, 3, 256);
    auto pi3_32 = BigReal::pi(320).pow_si(3) / BigReal(32, 320);
    CHECK((L3.real() - pi3_32).magnitude_at_most_exp(-244));
    CHECK(L3.imag().magnitude_at_most_exp(-244));

    // principal mod 1, k=2: zeta(2)
    auto c1 = enumerate_characters(1)[0];
    auto L2 = dirichlet_l_value(c1, 2, 256);
    CHECK((L2.real() - BigReal::pi(320).pow_si(2) / BigReal(6, 320))
              .magnitude_at_most_exp(-244));

    // k=1: L(1, chi_{-4}) = pi/4 (Leibniz)
    auto L1 = dirichlet_l_value(chi4, 1, 192);
    CHECK((L1.real() - BigReal::pi(256).mul_2exp(-2)).magnitude_at_most_exp(-180));
    CHECK(L1.imag().magnitude_at_most_exp(-180));
    CHECK_THROWS_AS(dirichlet_l_value(enumerate_characters(4)[0], 1, 128), DomainError);

    // oracle cross-check: beta(3) from the alternating series
    auto beta = oracle::dirichlet_beta_alternating(3, 60000, 200);
    CHECK((L3.real() - beta).center_at_most_exp(beta.error_exp() + 1));
}

TEST_CASE("character serialization survives a round trip through images") {
    for (long q : {5L, 8L, 12L}) {
        for (const auto& chi : enumerate_characters(q)) {
            DirichletCharacter copy(UnitGroup::get(q), chi.images());
            CHECK(copy == chi);
        }
    }
}
