#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run(const std::string& args) {
    const std::string cmd = std::string(WERNER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("classify: depolarization vertex at d=2") {
    const auto result = run("classify --lambda 0.25,0,0,0.75 --dim 2");
    CHECK(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["member"] == true);
    CHECK(report["trace_preserving"] == true);
    CHECK(report["ppt"] == true);
    const auto& tight = report["on_facets"];
    CHECK(std::find(tight.begin(), tight.end(), "mu2") != tight.end());
    CHECK(std::find(tight.begin(), tight.end(), "mu3") != tight.end());
    REQUIRE(report.contains("decomposition"));
    CHECK(report["decomposition"][4].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("classify: antisymmetric corner at d=3") {
    const auto result = run("classify --lambda 1,0,0,0 --dim 3");
    CHECK(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["member"] == false);
    CHECK(report["ppt"] == false);
    CHECK(report["violated_facet"] == "mu2");
}

TEST_CASE("classify: uniform vertex decomposes onto itself") {
    const auto result = run("classify --lambda 0.25,0.25,0.25,0.25 --dim 2");
    CHECK(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["member"] == true);
    CHECK(report["decomposition"][3].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("classify: negative lambda rejected") {
    CHECK(run("classify --lambda -0.5,0.5,0.5,0.5 --dim 2").exit_code == 2);
}

TEST_CASE("apply: depolarization fixes nu") {
    const auto result = run("apply --lambda 0.25,0,0,0.75 --nu 0.8 --dim 2");
    CHECK(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["nu_prime"].get<double>() == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(report["monotone"] == true);
    CHECK(report["separable_map"] == true);
}

TEST_CASE("apply: non-separable map pumps nu to 1") {
    const auto result = run("apply --lambda 1,0,0,0 --nu 0.6 --dim 2");
    CHECK(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["nu_prime"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report["separable_map"] == false);
    CHECK(report["monotone"] == false);
}

TEST_CASE("apply: constant symmetric map and annihilation") {
    const auto zero = run("apply --lambda 0,0,0,1 --nu 0.9 --dim 2");
    CHECK(json::parse(zero.output)["nu_prime"].get<double>() == 0.0);

    const auto annihilated = run("apply --lambda 0,0,0,1 --nu 1 --dim 2");
    CHECK(annihilated.exit_code == 0);
    CHECK(json::parse(annihilated.output)["annihilating"] == true);
}

TEST_CASE("verify: bad dimension exits 2") {
    CHECK(run("verify --dim 1").exit_code == 2);
}

TEST_CASE("verify: same seed gives byte-identical JSON") {
    const std::string args = "verify --dim 2 --samples 200 --seed 7";
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
    const json report = json::parse(a.output);
    CHECK(report["command"] == "verify");
    CHECK(report["seed"] == 7);
}

TEST_CASE("csv format lists the checks") {
    const auto result = run("classify --lambda 0.25,0,0,0.75 --dim 2 --format csv");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("member,true") != std::string::npos);
}
