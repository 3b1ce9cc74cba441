#include "qzeta/cli.hpp"
#include "qzeta/json_io.hpp"

#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace qzeta;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("bernoulli n = 0 is L/(q-1)") {
    const auto r = run({"bernoulli", "--h", "1", "--n", "0"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    const auto b0 = log_scalar_from_json(j["values"][0]["value"]);
    CHECK(b0 == LogScalar(RationalFunction(), RationalFunction(QPoly::constant(1), QPoly({Rational(-1), Rational(1)}))));
}

TEST_CASE("numeric bernoulli table as csv") {
    const auto r = run({"--format", "csv", "bernoulli", "--h", "0", "--n", "2", "--q", "0.5"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "n,re,im\n0,1,0\n1,-0.5,0\n2,0.16666666666666666,0\n");
}

TEST_CASE("distribution verification passes") {
    const auto r = run({"verify", "distribution", "--h", "1", "--n", "8", "--m", "2"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["identity"] == "distribution");
    CHECK(j["pass"] == true);
    for (const auto& w : j["witnesses"])
        CHECK(w["ok"] == true);
}

TEST_CASE("exit codes") {
    auto pole = run({"zeta", "--h", "1", "--q", "0.5", "--s", "1"});
    CHECK(pole.code == exit_usage);
    CHECK(pole.err.find("pole") != std::string::npos);
    CHECK(run({"nonsense"}).code == exit_usage);
    CHECK(run({}).code == exit_usage);
    CHECK(run({"bernoulli", "--h", "1"}).code == exit_usage);
    CHECK(run({"verify", "bogus"}).code == exit_usage);
    CHECK(run({"--max-terms", "5", "zeta", "--h", "1", "--q", "0.99", "--s", "2"}).code == exit_precision);
    CHECK(run({"verify", "interp-l", "--h", "1", "--q", "0.5", "--n", "1", "--modulus", "1"}).code ==
          exit_verification_failed);
    CHECK(run({"verify", "interp-l", "--h", "1", "--q", "0.5", "--n", "2", "--modulus", "1"}).code == exit_ok);
    CHECK(run({"generalized", "--modulus", "5", "--char-index", "1", "--h", "1", "--n", "2"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"verify", "witt", "--p", "5", "--h", "1", "--n", "3", "--levels", "3..5"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Json j = Json::parse(a.out);
    CHECK(j["levels"].size() == 3);
    CHECK(j["params"]["precision"] == "35");
}

TEST_CASE("precision knob from the environment") {
    setenv("QZK_DEFAULT_PRECISION", "12", 1);
    const auto r = run({"verify", "witt", "--h", "1", "--n", "2", "--levels", "3,4"});
    unsetenv("QZK_DEFAULT_PRECISION");
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["params"]["precision"] == "26");
    const auto flag = run({"--precision", "15", "verify", "witt", "--h", "1", "--n", "2", "--levels", "3,4"});
    CHECK(Json::parse(flag.out)["params"]["precision"] == "29");
}

TEST_CASE("characters listing") {
    const auto r = run({"characters", "--modulus", "5"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    REQUIRE(j.size() == 4);
    CHECK(j[1]["values"][0].is_null());
    CHECK(j[1]["values"][2] == "1/4");
    CHECK(j[2]["conductor"] == 5);
}

TEST_CASE("zeta and lfunction outputs") {
    const auto z = run({"--format", "csv", "zeta", "--h", "1", "--q", "0.3+0.4i", "--s", "-2", "--x", "1/2"});
    REQUIRE(z.code == 0);
    CHECK(z.out.rfind("h,q,s,x,re,im,tail_bound\n", 0) == 0);
    const auto l = run({"lfunction", "--modulus", "4", "--char-index", "1", "--h", "2", "--q", "0.5", "--s", "2"});
    REQUIRE(l.code == 0);
    CHECK(Json::parse(l.out).contains("tail_bound"));
}

TEST_CASE("output file") {
    const std::string path = "qzk_cli_test_output.json";
    const auto r = run({"--output", path, "polynomial", "--h", "2", "--n", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const Json j = Json::parse(in);
    CHECK(j["coefficients"].size() == 4);
    std::remove(path.c_str());
}

TEST_CASE("every verify target runs") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"verify", "witt", "--h", "2", "--n", "2", "--levels", "3..5"},
             {"verify", "shift", "--h", "1", "--n", "2", "--b", "2", "--levels", "3..5"},
             {"verify", "closedform", "--p", "7", "--h", "1", "--levels", "3,4"},
             {"verify", "genfunction", "--h", "2", "--n", "6"},
             {"verify", "interp-zeta", "--h", "2", "--q", "0.2", "--n", "3", "--x", "1/2"},
             {"verify", "eq9", "--p", "7", "--modulus", "4", "--char-index", "1", "--h", "1", "--n", "2",
              "--levels", "3,4"}}) {
        const auto r = run(args);
        CHECK_MESSAGE(r.code == 0, args[1] << ": " << r.err);
    }
}
