#include <cmath>

#include "doctest.h"
#include "errors.hpp"
#include "hurwitz.hpp"
#include "mzv.hpp"
#include "oracles.hpp"

using namespace zetalab;

TEST_CASE("multiple polylog at one half: closed forms") {
    // Li_1(1/2) = log 2
    auto li1 = multiple_polylog_half({1}, 256);
    auto log2 = BigReal::from_rational(Rational(2), 320).log();
    CHECK((li1 - log2).magnitude_at_most_exp(-248));

    // Li_2(1/2) = pi^2/12 - log(2)^2/2
    auto li2 = multiple_polylog_half({2}, 256);
    auto expect = BigReal::pi(320).pow_si(2) / BigReal(12, 320) -
                  (log2 * log2).mul_2exp(-1);
    CHECK((li2 - expect).magnitude_at_most_exp(-245));
}

TEST_CASE("length-1 delegation") {
    auto z4 = mzv({4}, 256);
    auto pi4_90 = BigReal::pi(320).pow_si(4) / BigReal(90, 320);
    CHECK((z4 - pi4_90).magnitude_at_most_exp(-246));
}

TEST_CASE("classical duality instances") {
    // Euler: zeta(2,1) = zeta(3), fully independent of the stuffle path
    auto z21 = mzv({2, 1}, 256);
    auto z3 = riemann_zeta(3, 256);
    CHECK((z21 - z3).magnitude_at_most_exp(-245));
    // zeta(3,1,1) = zeta(4,1) (dual words)
    auto z41 = mzv({4, 1}, 200);
    auto z311 = mzv({3, 1, 1}, 200);
    CHECK((z41 - z311).magnitude_at_most_exp(-190));
}

TEST_CASE("known weight-4 values") {
    auto pi4 = BigReal::pi(320).pow_si(4);
    CHECK((mzv({2, 2}, 256) - pi4 / BigReal(120, 320)).magnitude_at_most_exp(-244));
    CHECK((mzv({3, 1}, 256) - pi4 / BigReal(360, 320)).magnitude_at_most_exp(-244));
    CHECK((mzv({2, 1, 1}, 256) - pi4 / BigReal(90, 320)).magnitude_at_most_exp(-244));
}

TEST_CASE("zeta(3,3) equals (zeta(3)^2 - zeta(6)) / 2") {
    auto z33 = mzv({3, 3}, 256);
    auto z3 = riemann_zeta(3, 300);
    auto z6 = riemann_zeta(6, 300);
    auto expect = (z3 * z3 - z6).mul_2exp(-1);
    CHECK((z33 - expect).magnitude_at_most_exp(-244));
}

TEST_CASE("double-precision oracles agree") {
    for (auto [s1, s2] : {std::pair<long, long>{2, 2}, {3, 2}, {2, 3}, {4, 3}}) {
        double fast = mzv({s1, s2}, 96).to_double();
        double slow = oracle::mzv2_inner_tail(s1, s2, 200000);
        CHECK(std::abs(fast - slow) < 1e-8);
    }
    double f3 = mzv({2, 1, 1}, 96).to_double();
    double s3 = oracle::mzv3_brute(2, 1, 1, 400);
    CHECK(std::abs(f3 - s3) < 1e-1);  // brute truncation ~ log(N)^2/(2N) dominates
    double f32 = mzv({3, 2, 1}, 96).to_double();
    double s32 = oracle::mzv3_brute(3, 2, 1, 400);
    CHECK(std::abs(f32 - s32) < 1e-4);
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(mzv({1, 2}, 128), DomainError);
    CHECK_THROWS_AS(mzv({}, 128), InvalidArgument);
    CHECK_THROWS_AS(mzv({2, 0}, 128), InvalidArgument);
}
