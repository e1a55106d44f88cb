#include "bigreal.hpp"
#include "doctest.h"
#include "errors.hpp"

using namespace zetalab;

TEST_CASE("exactness tracking") {
    BigReal three(3, 128);
    CHECK(three.is_exact());
    CHECK(BigReal::from_rational(Rational(1, 2), 128).is_exact());   // power of two
    CHECK(!BigReal::from_rational(Rational(1, 3), 128).is_exact());  // rounded
    CHECK(BigReal::from_rational(Rational(1, 3), 128).error_exp() < -125);
    CHECK(!BigReal::pi(128).is_exact());
}

TEST_CASE("sin(pi) is zero to within the tracked bound") {
    auto s = BigReal::pi(256).sin();
    CHECK(s.magnitude_at_most_exp(-250));
    CHECK(s.contains_zero());
}

TEST_CASE("sqrt squares back") {
    auto r = BigReal::from_rational(Rational(2), 256).sqrt();
    auto back = r * r - BigReal(2, 256);
    CHECK(back.magnitude_at_most_exp(-245));
    CHECK_THROWS_AS(BigReal(-1, 64).sqrt(), DomainError);
}

TEST_CASE("division guards") {
    BigReal one(1, 128);
    CHECK_THROWS_AS(one / BigReal(0, 128), DomainError);
    // a ball that straddles zero cannot be divided by
    auto tiny = BigReal::pi(64).sin();  // 0 +- 2^-60ish
    CHECK_THROWS_AS(one / tiny, PrecisionError);
}

TEST_CASE("pow and scaling") {
    auto x = BigReal::from_rational(Rational(3, 7), 192);
    auto y = x.pow_si(5) * x.pow_si(-5) - BigReal(1, 192);
    CHECK(y.magnitude_at_most_exp(-168));
    CHECK(BigReal::pow2(-10, 64).is_exact());
    CHECK(BigReal(3, 64).mul_2exp(4).to_double() == 48.0);
}

TEST_CASE("log and atan2") {
    auto l4 = BigReal::from_rational(Rational(4), 256).log();
    auto l2 = BigReal::from_rational(Rational(2), 256).log();
    CHECK((l4 - l2 - l2).magnitude_at_most_exp(-248));

    auto a = atan2_positive_x(BigReal(1, 256), BigReal(1, 256));
    auto quarter_pi = BigReal::pi(256).mul_2exp(-2);
    CHECK((a - quarter_pi).magnitude_at_most_exp(-248));
    CHECK_THROWS_AS(atan2_positive_x(BigReal(1, 64), BigReal(-1, 64)), DomainError);
}

TEST_CASE("cot by endpoint enclosure") {
    auto theta = BigReal::pi(256) * BigReal::from_rational(Rational(1, 4), 256);
    auto c = theta.cot();
    CHECK((c - BigReal(1, 256)).magnitude_at_most_exp(-245));
    CHECK_THROWS_AS(BigReal(4, 64).cot(), DomainError);  // 4 > pi
}

TEST_CASE("precision doubling tightens the bound, values agree") {
    for (long p : {64L, 128L, 256L}) {
        auto lo = (BigReal::pi(p) * BigReal::from_rational(Rational(2, 3), p)).sin();
        auto hi = (BigReal::pi(2 * p) * BigReal::from_rational(Rational(2, 3), 2 * p)).sin();
        auto diff = lo - hi;
        CHECK(diff.center_at_most_exp(BigReal::eadd(lo.error_exp(), hi.error_exp()) + 1));
        CHECK(hi.error_exp() < lo.error_exp());
    }
}

TEST_CASE("complex arithmetic basics") {
    auto z = BigComplex::unit_root(8, 1, 256);
    auto z7 = BigComplex::unit_root(8, 7, 256);
    auto prod = z * z7;  // = 1
    CHECK((prod.real() - BigReal(1, 256)).magnitude_at_most_exp(-244));
    CHECK(prod.imag().magnitude_at_most_exp(-244));

    auto q = z / z;  // = 1
    CHECK((q.real() - BigReal(1, 256)).magnitude_at_most_exp(-238));
    CHECK(q.imag().magnitude_at_most_exp(-238));

    CHECK((z.mul_i_pow(1) - BigComplex::unit_root(8, 3, 256)).abs().magnitude_at_most_exp(-240));
    CHECK((z.norm2() - BigReal(1, 256)).magnitude_at_most_exp(-244));
}

TEST_CASE("principal log of a complex ball") {
    // log(2) = (log 2, 0)
    auto two = BigComplex(BigReal(2, 256), BigReal(0, 256));
    auto l = two.log_principal();
    auto ref = BigReal::from_rational(Rational(2), 256).log();
    CHECK((l.real() - ref).magnitude_at_most_exp(-248));
    CHECK(l.imag().magnitude_at_most_exp(-248));
}

TEST_CASE("decimal rendering respects the error bound") {
    auto pi = BigReal::pi(64);
    std::string s = pi.to_decimal();
    CHECK(s.substr(0, 8) == "3.141592");
    // ~19 digits max at 64 bits
    CHECK(s.size() < 30);
    CHECK(BigReal(0, 64).to_decimal() == "0");
}
