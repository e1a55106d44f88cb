#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "zetalab.h"

using nlohmann::json;

namespace {
std::string take(char* s) {
    std::string out = s ? s : "";
    zl_free_string(s);
    return out;
}
}  // namespace

TEST_CASE("c api: hurwitz zeta round trip") {
    zl_real* v = nullptr;
    REQUIRE(zl_hurwitz_zeta(2, "1/2", 128, &v) == ZL_OK);
    std::string dec = zl_real_decimal(v);
    CHECK(dec.substr(0, 9) == "4.9348022");
    CHECK(zl_real_error_log2(v) <= -127);
    CHECK(zl_real_approx(v) == doctest::Approx(4.934802200544679));
    zl_real_free(v);
}

TEST_CASE("c api: domain and argument errors carry codes and messages") {
    zl_real* v = nullptr;
    CHECK(zl_hurwitz_zeta(1, "1/2", 128, &v) == ZL_ERR_DOMAIN);
    CHECK(std::strlen(zl_last_error()) > 0);
    CHECK(zl_hurwitz_zeta(2, "junk", 128, &v) == ZL_ERR_INVALID);
    CHECK(zl_hurwitz_zeta(2, "1/2", 4, &v) == ZL_ERR_INVALID);
    CHECK(zl_riemann_zeta(1, 128, &v) == ZL_ERR_DOMAIN);
    int64_t s[] = {1, 2};
    CHECK(zl_mzv(s, 2, 128, &v) == ZL_ERR_DOMAIN);
}

TEST_CASE("c api: polylog and mzv") {
    zl_real *re = nullptr, *im = nullptr;
    REQUIRE(zl_polylog_at_root(1, 2, 1, 128, &re, &im) == ZL_OK);
    CHECK(zl_real_approx(re) == doctest::Approx(-0.6931471805599453));
    zl_real_free(re);
    zl_real_free(im);

    int64_t s[] = {3, 3};
    zl_real* v = nullptr;
    REQUIRE(zl_mzv(s, 2, 200, &v) == ZL_OK);
    // (zeta(3)^2 - zeta(6)) / 2 = (1.4449406716...- 1.0173430619...) / 2
    CHECK(zl_real_approx(v) == doctest::Approx(0.21379886822459255).epsilon(1e-12));
    zl_real_free(v);
}

TEST_CASE("c api: exact even zeta rationals") {
    char* s = nullptr;
    REQUIRE(zl_even_zeta_exact(3, &s) == ZL_OK);
    CHECK(take(s) == "1/945");
}

TEST_CASE("c api: periodic L values via JSON") {
    const char* f = R"({"period": 4, "values": ["1", "0", "-1", "0"]})";
    zl_real* v = nullptr;
    REQUIRE(zl_l_value(f, 3, 160, 0, &v) == ZL_OK);
    CHECK(zl_real_approx(v) == doctest::Approx(0.9689461462593693));  // pi^3/32
    zl_real_free(v);
    CHECK(zl_l_value("{\"period\": 2}", 3, 160, 0, &v) == ZL_ERR_INVALID);
    CHECK(zl_l_value("not json", 3, 160, 0, &v) == ZL_ERR_INVALID);
}

TEST_CASE("c api: character enumeration schema and L values") {
    char* s = nullptr;
    REQUIRE(zl_enumerate_characters(5, &s) == ZL_OK);
    json chars = json::parse(take(s));
    REQUIRE(chars.size() == 4);
    for (const auto& c : chars) {
        CHECK(c.contains("modulus"));
        CHECK(c.contains("generators"));
        CHECK(c.contains("images"));
        CHECK(c.contains("primitive"));
        CHECK(c.contains("odd"));
    }
    CHECK(chars[0]["principal"] == true);

    // use a non-principal character back through the L-value entry point
    zl_real *re = nullptr, *im = nullptr;
    REQUIRE(zl_dirichlet_l_value(chars[1].dump().c_str(), 2, 160, &re, &im) == ZL_OK);
    CHECK(zl_real_error_log2(re) <= -159);
    zl_real_free(re);
    zl_real_free(im);
}

TEST_CASE("c api: kronecker and gauss sums") {
    int out = 0;
    REQUIRE(zl_kronecker_symbol(-4, 3, &out) == ZL_OK);
    CHECK(out == -1);
    CHECK(zl_kronecker_symbol(3, 2, &out) == ZL_ERR_DOMAIN);

    char* exact = nullptr;
    zl_real *re = nullptr, *im = nullptr;
    REQUIRE(zl_gauss_sum(-4, 1, 128, &exact, &re, &im) == ZL_OK);
    json ex = json::parse(take(exact));
    CHECK(ex["pretty"] == "2*i");
    CHECK(ex["conductor"] == 4);
    CHECK(zl_real_approx(im) == doctest::Approx(2.0));
    zl_real_free(re);
    zl_real_free(im);
}

TEST_CASE("c api: verify reports and pass flags") {
    char* rep = nullptr;
    int pass = 0;
    REQUIRE(zl_verify("hecke", R"({"k": 3, "q": 4, "a": 1})", 256, &rep, &pass) == ZL_OK);
    json r = json::parse(take(rep));
    CHECK(pass == 1);
    CHECK(r["verdict"] == "pass");
    CHECK(r["name"] == "hecke");
    CHECK(r["detail"].get<std::string>().find("1/4*i") != std::string::npos);

    REQUIRE(zl_verify("gauss", R"({"disc": -7})", 64, &rep, &pass) == ZL_OK);
    r = json::parse(take(rep));
    CHECK(r["mode"] == "exact");
    CHECK(r["residual_log2"].is_null());
    CHECK(pass == 1);

    CHECK(zl_verify("no-such-identity", "{}", 128, &rep, &pass) == ZL_ERR_INVALID);
}

TEST_CASE("c api: dimension evidence and precision refusal") {
    char* rep = nullptr;
    REQUIRE(zl_dimension("okada", R"({"k": 1, "q": 5})", 100000, 300, &rep) == ZL_OK);
    json r = json::parse(take(rep));
    CHECK(r["relation_in_theorem_set"] == false);
    CHECK(r["evidence_dimension"] == 2);

    zl_status s = zl_dimension("strong-cm", R"({"k": 3, "q": 16})", 1000000000L, 100, &rep);
    CHECK(s == ZL_ERR_PRECISION);
    CHECK(zl_last_required_bits() > 100);
}
