#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

// Runs hecke-typer with the given arguments; stderr is discarded.
Run typer(const std::string& args)
{
    const std::string cmd = std::string(HECKE_TYPER_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("classify")
{
    const Run d4 = typer("classify --spec D4 --e 3");
    CHECK(d4.code == 0);
    CHECK(d4.out.find("overall         FiniteNotSemisimple") != std::string::npos);

    const Run b2 = typer("classify --spec B2 --q1 --char 2 --json");
    CHECK(b2.code == 0);
    CHECK(nlohmann::json::parse(b2.out).at("overall").at("status") == "Infinite");

    const Run a3 = typer("classify --spec A3 --e 2 --json");
    CHECK(a3.code == 0);
    const auto j = nlohmann::json::parse(a3.out);
    CHECK(j.at("factors")[0].at("multiplicity") == 2);
    CHECK(j.at("overall").at("status") == "Infinite");

    const Run mp = typer("classify --spec B3 --e 5 --bq minus-power --f 2 --json");
    CHECK(mp.code == 0);
    CHECK(nlohmann::json::parse(mp.out).at("input").at("B_Q").at("f") == 2);
}

TEST_CASE("JSON output is byte-stable")
{
    for (const char* args : {"classify --spec E6xB3 --e 4 --bq generic --json",
                             "classify --spec A2xA2 --e 3 --json", "poincare --spec D4 --json"}) {
        const Run a = typer(args);
        const Run b = typer(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("poincare and group-info")
{
    const Run p = typer("poincare --spec A2");
    CHECK(p.code == 0);
    CHECK(p.out == "1 + 2x + 2x^2 + x^3\n");
    const auto j = nlohmann::json::parse(typer("poincare --spec E8 --json").out);
    CHECK(j.at("order") == "696729600");
    CHECK(j.at("coefficients").size() == 121);

    const Run g = typer("group-info --type F4 --primes 3 --json");
    CHECK(g.code == 0);
    const auto f4 = nlohmann::json::parse(g.out);
    CHECK(f4.at("order") == 1152);
    CHECK(f4.at("sylow")[0].at("cyclic") == false);
    CHECK(f4.at("sylow")[0].at("max_l_order") == 3);

    CHECK(typer("group-info --type A3 --max-elements 10").code == 2);
    CHECK(typer("group-info --type A3 --primes 4").code == 2);
    CHECK(typer("group-info --type A3xA1").code == 2);
}

TEST_CASE("environment cap")
{
    const std::string env = "HECKE_TYPER_MAX_ELEMENTS=10 ";
    const std::string cmd = env + HECKE_TYPER_PATH + " group-info --type A3 >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
    const std::string ok = env + HECKE_TYPER_PATH + " group-info --type A2 >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(ok.c_str())) == 0);
}

TEST_CASE("exit codes for malformed input")
{
    const char* invalid[] = {
        "",
        "frobnicate",
        "classify",
        "classify --spec E9 --e 3",
        "classify --spec A2",
        "classify --spec A2 --q1 --e 3",
        "classify --spec A2 --e 1",
        "classify --spec A2 --e 3 --char 4",
        "classify --spec A2 --e 3 --char 3",
        "classify --spec A2 --e 3 --bq generic",
        "classify --spec B2 --e 3 --bq minus-power",
        "classify --spec B2 --e 3 --bq minus-power --f 3",
        "classify --spec B2 --e 3 --f 1",
        "classify --spec B2 --e 3 --bq sideways",
        "classify --spec 'I2(5)' --q1 --char 5",
        "classify --spec A2 --e abc",
        "poincare",
        "poincare --spec X1",
        "group-info --type 'I2(200)'",
        "verify",
        "verify no-such-suite",
    };
    for (const char* args : invalid) {
        INFO(args);
        CHECK(typer(args).code == 2);
    }
}
