#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "taxdist/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "taxdist");
    std::ostringstream out, err;
    const int code = taxdist::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(TAXDIST_FIXTURES_DIR) + "/" + name; }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("distance matrix as CSV") {
    const auto r = run({"distmat", "--c", "p2", "--x", fixture("triangle_with_center.csv")});
    CHECK(r.code == 0);
    CHECK(r.out == "0,2,2,2\n2,0,3.46410162,3.46410162\n2,3.46410162,0,3.46410162\n2,3.46410162,3.46410162,0\n");
}

TEST_CASE("correlation as JSON") {
    const auto r = run({"corr", "--m", "p1", "--l", "L", "--x", fixture("line_three_lifted.csv"), "--conv", "grid",
                        "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rho"].get<double>() == doctest::Approx(0.959264).epsilon(1e-6));
    CHECK(j["convention"] == "grid");
}

TEST_CASE("every subcommand runs") {
    const auto x = fixture("triangle.csv");
    const std::vector<std::vector<std::string>> commands{
        {"near", "--c", "p2", "--x", x},
        {"near", "--c", "p1", "--x", x, "--exact"},
        {"rob-plus", "--c", "pinf", "--x", fixture("flipping_pair_first_column.csv"), "--xp", fixture("flipping_pair.csv")},
        {"rob-minus", "--c", "pinf", "--x", fixture("unit_corner.csv")},
        {"concord", "--m", "p1", "--n", "p2", "--x", x},
        {"corr", "--m", "p1", "--n", "pinf", "--x", x, "--conv", "upper"},
        {"adversarial", "--c", "p2", "--x", x},
        {"explore-near", "--c", "p1", "--rows", "3", "--levels", "3", "--samples", "20"},
        {"mc-nn", "--points", "3", "--samples", "1000", "--seed", "5"},
        {"delta-cf", "--digits", "20"},
    };
    for (auto args : commands) {
        for (const char* format : {"text", "json"}) {
            auto with_format = args;
            with_format.insert(with_format.end(), {"--format", format});
            const auto r = run(with_format);
            CAPTURE(args[0]);
            CAPTURE(r.err);
            CHECK(r.code == 0);
            CHECK_FALSE(r.out.empty());
            if (std::string(format) == "json") {
                CHECK(nlohmann::json::accept(r.out));
            }
        }
    }
}

TEST_CASE("text reports") {
    CHECK(run({"rob-plus", "--c", "pinf", "--x", fixture("flipping_pair_first_column.csv"), "--xp",
               fixture("flipping_pair.csv")})
              .out == "rob_plus: 0/3 (0)\n");
    CHECK(run({"near", "--c", "p1", "--x", fixture("flipping_pair_first_column.csv")}).out ==
          "NEAR(1): 3\nNEAR(2): 1\nNEAR(3): 1\ntotal: 3\n");
    CHECK(run({"concord", "--m", "p1", "--n", "p2", "--x", fixture("triangle.csv")}).out ==
          "concordance: 1/3 (0.333333333)\n");
    const auto mc = run({"mc-nn", "--points", "3", "--half-width", "4", "--samples", "10"});
    CHECK(mc.out.find("conjecture L/(n+1): 1\n") != std::string::npos);
}

TEST_CASE("identical invocations give identical output") {
    const std::vector<std::string> args{"mc-nn", "--points", "2", "--samples", "5000", "--seed", "9", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> adv{"adversarial", "--c", "p3", "--x", fixture("square_with_center.csv"), "--format",
                                       "json"};
    CHECK(run(adv).out == run(adv).out);
}

TEST_CASE("verify passes") {
    const auto r = run({"verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"distmat"}).code == 2);
    CHECK(run({"distmat", "--x", fixture("triangle.csv"), "--bogus"}).code == 2);
    CHECK(run({"corr", "--x", fixture("triangle.csv"), "--conv", "diag"}).code == 2);
    CHECK(run({"distmat", "--x", fixture("triangle.csv"), "--format", "xml"}).code == 2);
    CHECK(run({"mc-nn", "--points", "0"}).code == 2);
    CHECK(run({"delta-cf", "--digits", "21"}).code == 2);
}

TEST_CASE("help exits 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("distmat") != std::string::npos);
    CHECK(run({"near", "--help"}).code == 0);
}

TEST_CASE("domain errors exit 1 with one line") {
    const auto missing = run({"distmat", "--x", "/nonexistent.csv"});
    CHECK(missing.code == 1);
    CHECK(std::count(missing.err.begin(), missing.err.end(), '\n') == 1);
    CHECK(run({"distmat", "--c", "p0.5", "--x", fixture("triangle.csv")}).code == 1);
    CHECK(run({"adversarial", "--c", "L", "--x", fixture("triangle.csv")}).code == 1);
    CHECK(run({"rob-minus", "--x", fixture("line_three.csv")}).code == 1);
    CHECK(run({"rob-plus", "--x", fixture("triangle.csv"), "--xp", fixture("line_three.csv")}).code == 1);
    CHECK(run({"near", "--x", fixture("triangle.csv"), "--rel-tol", "-1"}).code == 1);
}

}
