#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <json.hpp>

#include "reference_tables.hpp"
#include "subprocess.hpp"

namespace {

const std::string bin = STIRLING_POWERS_BIN;

std::string quiet(const std::string& args)
{
    return bin + " " + args + " 2>/dev/null";
}

std::string stderr_only(const std::string& args)
{
    return bin + " " + args + " 2>&1 1>/dev/null";
}

} // namespace

TEST_CASE("bell table json matches the reference values and is byte-stable")
{
    const auto first = subprocess::run(quiet("table --family bell -p 5 --n-max 7"));
    REQUIRE(first.exit_code == 0);

    const auto second = subprocess::run(quiet("table --family bell -p 5 --n-max 7"));
    CHECK(first.output == second.output);

    const nlohmann::json j = nlohmann::json::parse(first.output);
    CHECK(j["family"] == "bell");
    CHECK(j["p"] == 5);
    REQUIRE(j["rows"].size() == 5);
    for (unsigned p = 1; p <= 5; ++p)
        for (unsigned n = 1; n <= 7; ++n)
            CHECK(j["rows"][p - 1][n - 1].get<std::string>() ==
                  std::to_string(reference::bell_table[p - 1][n - 1]));
}

TEST_CASE("fubini table csv")
{
    const auto r = subprocess::run(quiet("table --family fubini -p 2 --n-max 7 --format csv"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "1,3,13,75,541,4683,47293\n"
                      "1,4,23,175,1662,18937,251729\n");
}

TEST_CASE("eigenseq csv row")
{
    const auto r = subprocess::run(quiet("table --family eigenseq --n-max 7 --format csv"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "0,1,1,2,6,26,152,1144\n");
}

TEST_CASE("stirling rectangle with explicit zeros, negative power")
{
    const auto r = subprocess::run(quiet("table --family stirling -p -1 --n-max 3 --format csv"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "1,0,0,0\n0,1,0,0\n0,-1,1,0\n0,2,-3,1\n");
}

TEST_CASE("markdown layout has p rows and n columns")
{
    const auto r = subprocess::run(quiet("table --family bell -p 2 --n-max 3 --format markdown"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "| bell | n=1 | n=2 | n=3 |\n"
                      "| --- | --- | --- | --- |\n"
                      "| p=1 | 1 | 2 | 5 |\n"
                      "| p=2 | 1 | 3 | 12 |\n");
}

TEST_CASE("rational evaluation point")
{
    const auto r =
        subprocess::run(quiet("table --family bell -p 1 --n-max 3 --x 1/2 --format csv"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "1/2,3/4,11/8\n");
}

TEST_CASE("usage errors exit with 2 and explain on stderr")
{
    CHECK(subprocess::run(quiet("table --family nosuch")).exit_code == 2);
    CHECK(subprocess::run(quiet("table")).exit_code == 2);          // missing --family
    CHECK(subprocess::run(quiet("nosuchcommand")).exit_code == 2);  // unknown subcommand
    CHECK(subprocess::run(quiet("table --family bell --x 1.5")).exit_code == 2);
    CHECK(subprocess::run(quiet("table --family eigenseq --x 2")).exit_code == 2);
    CHECK(subprocess::run(quiet("table --family bell -p -1")).exit_code == 2);
    CHECK(subprocess::run(quiet("table --family fubini -p 0")).exit_code == 2);

    const auto cap = subprocess::run(stderr_only("table --family stirling --n-max 250"));
    CHECK(cap.exit_code == 2);
    CHECK(cap.output.find("250") != std::string::npos);
    CHECK(cap.output.find("200") != std::string::npos);

    // the cap override admits the request
    const auto raised =
        subprocess::run(quiet("table --family stirling --n-max 250 --seed-cap 250 --format csv"));
    CHECK(raised.exit_code == 0);
}

TEST_CASE("data goes to stdout, diagnostics to stderr")
{
    const auto data = subprocess::run(quiet("table --family bell -p 1 --n-max 2 --format csv"));
    CHECK(data.output == "1,2\n");

    const auto errs = subprocess::run(stderr_only("table --family bell -p 1 --n-max 2 --format csv"));
    CHECK(errs.output.empty());

    const auto usage = subprocess::run(quiet("table --family nosuch"));
    CHECK(usage.output.empty()); // the explanation goes to stderr only
}

TEST_CASE("verify subcommand passes and reports one line per check")
{
    const auto r = subprocess::run(quiet("verify --max-n 6 --max-p 2"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("PASS  matrix-inverse-law") != std::string::npos);
    CHECK(r.output.find("PASS  eigenseq-egf-ode") != std::string::npos);
    CHECK(r.output.find("unshifted form rel residual") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("all checks passed") != std::string::npos);

    const auto again = subprocess::run(quiet("verify --max-n 6 --max-p 2"));
    CHECK(again.output == r.output);
}

TEST_CASE("help exits zero")
{
    CHECK(subprocess::run(quiet("--help")).exit_code == 0);
    CHECK(subprocess::run(quiet("table --help")).exit_code == 0);
}
