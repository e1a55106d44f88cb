#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "hurwitz.hpp"
#include "numbers.hpp"
#include "oracles.hpp"

using namespace zetalab;

TEST_CASE("hurwitz zeta special values") {
    // zeta(2, 1) = zeta(2) = pi^2/6
    auto z21 = hurwitz_zeta(2, Rational(1), 256);
    auto pi2_6 = BigReal::pi(320).pow_si(2) / BigReal(6, 320);
    CHECK((z21 - pi2_6).magnitude_at_most_exp(-248));

    // zeta(2, 1/2) = pi^2/2
    auto zhalf = hurwitz_zeta(2, Rational(1, 2), 256);
    auto pi2_2 = BigReal::pi(320).pow_si(2).mul_2exp(-1);
    CHECK((zhalf - pi2_2).magnitude_at_most_exp(-248));

    // zeta(3, 1/4) - zeta(3, 3/4) = 2 pi^3
    auto diff = hurwitz_zeta(3, Rational(1, 4), 256) - hurwitz_zeta(3, Rational(3, 4), 256);
    auto two_pi3 = BigReal::pi(320).pow_si(3).mul_2exp(1);
    CHECK((diff - two_pi3).magnitude_at_most_exp(-245));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(hurwitz_zeta(1, Rational(1, 2), 64), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(2, Rational(0), 64), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(2, Rational(5, 4), 64), DomainError);
    CHECK_THROWS_AS(riemann_zeta(1, 64), DomainError);
}

TEST_CASE("partial-sum oracle brackets the Euler-Maclaurin value") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> kd(2, 6), qd(2, 12);
    for (int rep = 0; rep < 12; ++rep) {
        long k = kd(rng), q = qd(rng);
        std::uniform_int_distribution<long> pd(1, q);
        Rational x(pd(rng), q);
        auto fast = hurwitz_zeta(k, x, 160);
        auto slow = oracle::hurwitz_partial_sum(k, x, 10000, 160);
        auto diff = fast - slow;
        CHECK(diff.center_at_most_exp(BigReal::eadd(fast.error_exp(), slow.error_exp()) + 1));
    }
}

TEST_CASE("beta(3) oracle confirms the quarter-point difference") {
    // (zeta(3,1/4) - zeta(3,3/4)) / 64 = beta(3)
    auto diff = hurwitz_zeta(3, Rational(1, 4), 192) - hurwitz_zeta(3, Rational(3, 4), 192);
    auto beta3 = oracle::dirichlet_beta_alternating(3, 60000, 192);
    auto resid = diff.mul_2exp(-6) - beta3;
    CHECK(resid.center_at_most_exp(beta3.error_exp() + 2));
}

TEST_CASE("riemann zeta values") {
    auto z2 = riemann_zeta(2, 256);
    CHECK((z2 - BigReal::pi(320).pow_si(2) / BigReal(6, 320)).magnitude_at_most_exp(-248));
    auto z4 = riemann_zeta(4, 256);
    CHECK((z4 - BigReal::pi(320).pow_si(4) / BigReal(90, 320)).magnitude_at_most_exp(-246));
    auto z3 = riemann_zeta(3, 192);
    auto z3_oracle = oracle::hurwitz_partial_sum(3, Rational(1), 40000, 192);
    CHECK((z3 - z3_oracle).center_at_most_exp(z3_oracle.error_exp() + 1));
    CHECK(z3.to_decimal().substr(0, 9) == "1.2020569");
}

TEST_CASE("precision soundness: doubled precision agrees within 2^(2-P)") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> kd(2, 8), qd(2, 24);
    int done = 0;
    while (done < 200) {
        long k = kd(rng), q = qd(rng);
        std::uniform_int_distribution<long> ad(1, q);
        long a = ad(rng);
        Rational x(a, q);
        long P = 96;
        auto lo = hurwitz_zeta(k, x, P);
        auto hi = hurwitz_zeta(k, x, 2 * P);
        CHECK((lo - hi).center_at_most_exp(2 - P));
        ++done;
    }
}

TEST_CASE("cot derivative polynomials") {
    auto p1 = cot_derivative(1);
    CHECK(p1.coefficients == std::vector<mpz_class>{0, 1});
    auto p2 = cot_derivative(2);
    CHECK(p2.coefficients == std::vector<mpz_class>{-1, 0, -1});
    auto p3 = cot_derivative(3);
    CHECK(p3.coefficients == std::vector<mpz_class>{0, 2, 0, 2});

    // degrees of nonzero terms share the parity of k
    for (long k = 1; k <= 12; ++k) {
        auto p = cot_derivative(k);
        CHECK(static_cast<long>(p.coefficients.size()) == k + 1);
        for (size_t j = 0; j < p.coefficients.size(); ++j)
            if (p.coefficients[j] != 0) CHECK((static_cast<long>(j) - k) % 2 == 0);
    }
}

TEST_CASE("reflection values at the quarter point") {
    auto r2 = reflection_value(2, 1, 4, 256);
    auto expect2 = BigReal::pi(320).pow_si(2).mul_2exp(1);  // 2 pi^2
    CHECK((r2 - expect2).magnitude_at_most_exp(-245));

    auto r3 = reflection_value(3, 1, 4, 256);
    auto expect3 = BigReal::pi(320).pow_si(3).mul_2exp(1);  // 2 pi^3
    CHECK((r3 - expect3).magnitude_at_most_exp(-245));

    CHECK_THROWS_AS(reflection_value(2, 1, 2, 128), DomainError);  // a/q = 1/2
    CHECK_THROWS_AS(reflection_value(2, 2, 4, 128), DomainError);  // not coprime
}

TEST_CASE("reflection formula against direct evaluation") {
    long P = 128;
    for (long q = 3; q <= 16; ++q)
        for (long k = 2; k <= 6; ++k)
            for (long a = 1; 2 * a < q; ++a) {
                if (gcd_long(a, q) != 1) continue;
                auto lhs = hurwitz_zeta(k, Rational(a, q), P);
                auto rhs = hurwitz_zeta(k, Rational(q - a, q), P);
                auto sum = (k % 2 == 0) ? lhs + rhs : lhs - rhs;
                auto resid = sum - reflection_value(k, a, q, P);
                CHECK(resid.magnitude_at_most_exp(4 - P));
            }
}

TEST_CASE("polylog at roots of unity") {
    // Li_1(-1) = -log 2
    auto li1 = polylog_at_root(1, 2, 1, 256);
    auto log2 = BigReal::from_rational(Rational(2), 320).log();
    CHECK((li1.real() + log2).magnitude_at_most_exp(-245));
    CHECK(li1.imag().magnitude_at_most_exp(-245));

    // Li_2(-1) = -pi^2/12
    auto li2 = polylog_at_root(2, 2, 1, 256);
    auto pi2_12 = BigReal::pi(320).pow_si(2) / BigReal(12, 320);
    CHECK((li2.real() + pi2_12).magnitude_at_most_exp(-245));

    // Li_2(1) = zeta(2)
    auto li21 = polylog_at_root(2, 1, 0, 256);
    CHECK((li21.real() - BigReal::pi(320).pow_si(2) / BigReal(6, 320))
              .magnitude_at_most_exp(-245));

    CHECK_THROWS_AS(polylog_at_root(1, 3, 0, 128), DomainError);
    CHECK_THROWS_AS(polylog_at_root(1, 3, 3, 128), DomainError);
}

TEST_CASE("polylog decomposition agrees with the direct series") {
    for (long q = 2; q <= 8; ++q)
        for (long m = 2; m <= 3; ++m)
            for (long a = 1; a < q; ++a) {
                auto fast = polylog_at_root(m, q, a, 128);
                auto slow = oracle::polylog_series(m, q, a, 100000, 160);
                auto dre = fast.real() - slow.real();
                auto dim = fast.imag() - slow.imag();
                long tol = BigReal::eadd(slow.error_exp(), fast.error_exp()) + 1;
                CHECK(dre.center_at_most_exp(tol));
                CHECK(dim.center_at_most_exp(tol));
            }
}

TEST_CASE("even zeta rationals") {
    CHECK(even_zeta_exact(1) == Rational(1, 6));
    CHECK(even_zeta_exact(2) == Rational(1, 90));
    CHECK(even_zeta_exact(3) == Rational(1, 945));
    for (long m = 1; m <= 10; ++m) {
        auto numeric = riemann_zeta(2 * m, 300) / BigReal::pi(360).pow_si(2 * m);
        auto exact = BigReal::from_rational(even_zeta_exact(m), 360);
        CHECK((numeric - exact).magnitude_at_most_exp(-260));
    }
}

TEST_CASE("cot of rational multiples of pi") {
    auto c = cot_pi_rational(1, 4, 256);
    CHECK((c - BigReal(1, 256)).magnitude_at_most_exp(-250));
    CHECK_THROWS_AS(cot_pi_rational(0, 4, 64), DomainError);
    CHECK_THROWS_AS(cot_pi_rational(4, 4, 64), DomainError);
}
