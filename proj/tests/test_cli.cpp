#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// run the pfmm binary with the given arguments, capturing stdout (stderr is
// folded in so error objects are visible too)
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PFMM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("derive k5 json") {
    RunResult r = run_cli("derive --family k5 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["lambda"] == "1");
    CHECK(j["k"] == 5);
    CHECK(j["unipotent"] == true);
    CHECK(j["epsilons"].size() == 4);
}

TEST_CASE("invalid weights exit with config error") {
    RunResult r = run_cli("derive --weights 3,1,1,1,1");
    CHECK(r.exit_code == 2);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["error"] == "InvalidFamily");
}

TEST_CASE("depth/order guard") {
    RunResult r = run_cli("curves --family k5 --order 12 --depth 10");
    CHECK(r.exit_code == 2);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["error"] == "ConfigError");
}

TEST_CASE("curves k5 tsv") {
    RunResult r = run_cli("curves --family k5 --order 12 --depth 4 --format tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "k\tn0\tn1\tn2\tn3\tn4\n"
          "5\t5\t2875\t609250\t317206375\t242467530000\n");
}

TEST_CASE("perturbed c2 fails integrality") {
    RunResult r = run_cli("curves --family k5 --order 12 --depth 4 --c2 1/3126");
    CHECK(r.exit_code == 3);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["error"] == "NonIntegralInstanton");
}

TEST_CASE("verify passes at reduced order") {
    RunResult r = run_cli("verify --family k5 --order 14 --depth 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    const std::string args = "derive --family k6 --format json";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}
