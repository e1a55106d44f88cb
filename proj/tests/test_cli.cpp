/* End-to-end checks of the installed command line: spawns the real binary
 * (path injected by the build) and inspects exit codes and JSON output. */

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

#ifndef ZETALAB_CLI_PATH
#error "build must define ZETALAB_CLI_PATH"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ZETALAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string temp_path(const std::string& name) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("cli: eval prints a guaranteed value") {
    auto r = run_cli("eval hurwitz --k 2 --x 1/2 --prec 128 --no-cache");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["value"]["decimal"].get<std::string>().substr(0, 9) == "4.9348022");
    CHECK(j["value"]["error_log2"].get<long>() <= -127);
    CHECK(j["value"]["precision_bits"] == 128);
}

TEST_CASE("cli: eval gauss exposes the exact element") {
    auto r = run_cli("eval gauss --disc -4 --no-cache");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["exact"]["pretty"] == "2*i");
}

TEST_CASE("cli: invalid parameters exit 2") {
    CHECK(run_cli("eval hurwitz --k 2 --x nonsense --prec 128 --no-cache").exit_code == 2);
    CHECK(run_cli("eval hurwitz --k 1 --x 1/2 --no-cache").exit_code == 2);
    CHECK(run_cli("verify --identity bogus").exit_code == 2);
}

TEST_CASE("cli: verify pass/fail exit codes") {
    auto r = run_cli("verify --identity euler-factor --k 2 --q 2 --prec 128");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["verdict"] == "pass");

    auto h = run_cli("verify --identity hecke --k 3 --q 4 --a 1 --prec 256");
    CHECK(h.exit_code == 0);
    CHECK(json::parse(h.output)["detail"].get<std::string>().find("1/4*i") !=
          std::string::npos);
}

TEST_CASE("cli: dimension evidence completes with exit 0, refusal exits 3") {
    auto r = run_cli("dimension --space zagier --weight 6 --height 1e6 --prec 300");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.output);
    bool saw_pair = false;
    for (const auto& s : j["searches"])
        if (s["labels"] == json::array({"zeta(6)", "zeta(3,3)"})) {
            saw_pair = true;
            CHECK(s["outcome"] == "no_relation_certificate");
        }
    CHECK(saw_pair);

    CHECK(run_cli("dimension --space strong-cm --k 3 --q 16 --height 1e9 --prec 100")
              .exit_code == 3);
}

TEST_CASE("cli: cache replays are byte identical") {
    std::string cache = temp_path("zetalab-test-cache.jsonl");
    std::remove(cache.c_str());
    std::string env = "ZETALAB_CACHE=" + cache + " ";
    std::string cmd = std::string(ZETALAB_CLI_PATH) +
                      " eval zeta --k 3 --prec 192 2>/dev/null";
    auto run_env = [&](const std::string& c) {
        FILE* p = popen((env + c).c_str(), "r");
        REQUIRE(p != nullptr);
        std::string out;
        std::array<char, 4096> buf;
        size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
        pclose(p);
        return out;
    };
    std::string first = run_env(cmd);
    std::string second = run_env(cmd);
    json a = json::parse(first), b = json::parse(second);
    CHECK(a["cache"] == "miss");
    CHECK(b["cache"] == "hit");
    CHECK(a["value"] == b["value"]);
    // and identical to the uncached run
    auto plain = run_cli("eval zeta --k 3 --prec 192 --no-cache");
    CHECK(json::parse(plain.output)["value"] == a["value"]);
    std::remove(cache.c_str());
}

TEST_CASE("cli: sweep aggregates atomically and reports exit classes") {
    std::string cfg = temp_path("zetalab-sweep-cfg.json");
    std::string out = temp_path("zetalab-sweep-out.json");
    {
        std::ofstream f(cfg);
        f << R"([{"command":"verify","identity":"euler-factor","prec":128,
                 "params":{"k":{"range":[2,3]},"q":{"list":[2,4]}}},
                {"command":"dimension","space":"okada","height":1000,"prec":200,
                 "params":{"k":1,"q":5}}])";
    }
    auto r = run_cli("sweep --config " + cfg + " --jobs 2 --out " + out);
    CHECK(r.exit_code == 0);
    std::ifstream f(out);
    REQUIRE(f.good());
    json results = json::parse(f);
    CHECK(results.size() == 5);
    for (const auto& task : results) {
        CHECK(task["status"] == "ok");
        CHECK(task["pass"] == true);
    }
    // malformed config exits 2
    std::string bad = temp_path("zetalab-bad-cfg.json");
    {
        std::ofstream g(bad);
        g << "{ not json";
    }
    CHECK(run_cli("sweep --config " + bad + " --out " + out).exit_code == 2);
    std::remove(cfg.c_str());
    std::remove(out.c_str());
    std::remove(bad.c_str());
}
