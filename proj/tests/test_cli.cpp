#include "../tools/cli.hpp"

#include "qclaw/golden.hpp"
#include "qclaw/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace qclaw;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Result r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

TEST_CASE("golden suites succeed") {
    for (const char* suite : {"sl3", "a1", "a2"}) {
        const Result r = call({"golden", suite});
        CHECK(r.code == 0);
        CHECK(r.json().contains("checks"));
    }
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"seed"}).code == 2);
    CHECK(call({"seed", "mutate", "--seed", "A2f", "--at", "1", "--bogus"}).code == 2);
    CHECK(call({"seed", "mutate", "--seed", "{\"labels\": [1,", "--at", "1"}).code == 2);
    CHECK(call({"seed", "mutate", "--seed", "A2f", "--at", "3"}).code == 2);
    CHECK(call({"word", "flip", "--cartan", "A1", "--word", "1,1", "--at", "1"}).code == 2);
    CHECK(call({"bz", "build", "--cartan", "A1", "--word", "1,1"}).code == 2);
    CHECK(call({"bases", "kl", "--cartan", "A1", "--zeta", "1", "--eta", "1", "--c", "1", "--order", "x"}).code == 2);
}

TEST_CASE("mutating twice at the same vertex returns the seed") {
    const Result r = call({"seed", "mutate", "--seed", "A2f", "--at", "1", "--at", "1"});
    REQUIRE(r.code == 0);
    const QuantumSeed s = named_seed("A2f");
    const QuantumSeed t = seed_from_json(r.json());
    CHECK(t.B == s.B);
    CHECK(t.Lambda == s.Lambda);
    CHECK(t.vars == s.vars);
}

TEST_CASE("exchange matrix of a word") {
    const Result r = call({"word", "bmatrix", "--cartan", "A1", "--word", "1,1", "--dotted"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["B"] == Json::parse("[[0], [-1]]"));
    CHECK(r.json()["frozen"] == Json::parse("[2]"));
}

TEST_CASE("flip q-powers are printed as exponents") {
    const Result r = call({"bz", "verify-qpowers", "--cartan", "A2", "--word", "1,2,1,-1,-2,-1"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    REQUIRE(j.size() == 1);
    CHECK(j[0]["k"] == 3);
    CHECK(j[0]["alpha"] == -1);
    CHECK(j[0]["beta"] == 0);
    CHECK(j[0]["pass"] == true);
}

TEST_CASE("KL element of sl2") {
    const Result r = call({"bases", "kl", "--cartan", "A1", "--zeta", "1", "--eta", "1", "--c", "1,1"});
    REQUIRE(r.code == 0);
    CHECK(r.json() == Json::parse(R"([{"m": [0, 1], "c": [[0, 1]]}])"));
}

TEST_CASE("membership check") {
    const Result in = call({"compact", "check", "--seed", "A2f", "--element", R"([{"m": [1, 0, 0], "c": 1}])"});
    REQUIRE(in.code == 0);
    CHECK(in.json()["inBarU"] == true);
    const Result inv = call({"compact", "check", "--seed", "A2f", "--element", R"([{"m": [0, 0, -1], "c": 1}])"});
    REQUIRE(inv.code == 0);
    CHECK(inv.json()["inU"] == true);
    CHECK(inv.json()["inBarU"] == false);
}

TEST_CASE("fixed random seeds give identical output") {
    const std::vector<std::string> args{"--rng-seed", "7", "compact", "harness", "--seed", "A2f", "--samples", "5"};
    const Result a = call(args);
    const Result b = call(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.json()["pass"] == true);
}

TEST_CASE("output file") {
    const std::string path = "qclaw_cli_test_output.json";
    const Result r = call({"--output", path, "golden", "a1"});
    REQUIRE(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in);
    CHECK(Json::parse(in).contains("checks"));
    std::remove(path.c_str());
}
