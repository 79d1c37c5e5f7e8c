#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "suptor_cli/cli.hpp"

using suptor::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("plain subcommands") {
    CHECK(invoke({"eps", "--ell", "11", "--r", "8"}).out == "-1\n");
    CHECK(invoke({"eps", "--ell", "11", "--r", "8"}).code == 0);
    CHECK(invoke({"h-minus", "--ell", "23"}).out == "3\n");
    CHECK(invoke({"su-order", "--ell", "11", "--d", "7", "--n", "10", "--k", "1"}).out == "11^219\n");
    CHECK(invoke({"kappa", "--ell", "11", "--r", "8"}).code == 0);
    CHECK(invoke({"lattice-index", "--ell", "5", "--r", "4"}).code == 0);
}

TEST_CASE("json output") {
    const auto r = invoke({"eps", "--ell", "11", "--r", "8", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.dump().find("-1") != std::string::npos);

    const auto h = invoke({"h-minus", "--ell", "29", "--json"});
    CHECK(nlohmann::json::parse(h.out).dump().find('8') != std::string::npos);
}

TEST_CASE("argument errors exit 1") {
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"eps", "--ell", "11"}).code == 1);
    CHECK(invoke({"eps", "--ell", "11", "--r", "8", "--bogus"}).code == 1);
    CHECK(invoke({"eps", "--ell", "9", "--r", "8"}).code == 1);
    CHECK(invoke({"eps", "--ell", "eleven", "--r", "8"}).code == 1);

    const auto p = invoke({"check-curve", "--ell", "11", "--poly", "x^8+x+", "--json"});
    CHECK(p.code == 1);
    const auto j = nlohmann::json::parse(p.out);
    CHECK(j["error"]["kind"] == "parse");
    CHECK(j["error"]["position"] == 6);

    const auto a = invoke({"frobnicate", "--json"});
    CHECK(nlohmann::json::parse(a.out)["error"]["kind"] == "argument");
}

TEST_CASE("hypothesis failures exit 3") {
    CHECK(invoke({"check-curve", "--ell", "11", "--poly", "x^8+x+1"}).code == 3);
    const auto d = invoke({"division-degree", "--ell", "11", "--poly", "x^8+x+1", "--json"});
    CHECK(d.code == 3);
    CHECK(nlohmann::json::parse(d.out)["error"]["kind"] == "hypothesis");

    const auto forced =
        invoke({"division-degree", "--ell", "11", "--poly", "x^8+x+1", "--override-hypotheses", "--json"});
    CHECK(forced.code == 0);
    CHECK(nlohmann::json::parse(forced.out).is_object());

    CHECK(invoke({"check-curve", "--ell", "3", "--poly", "x^5-x-1"}).code == 0);
}

TEST_CASE("inseparable input is a computation error") {
    const auto r = invoke({"check-curve", "--ell", "3", "--poly", "x^4+2x^2+1", "--json"});
    CHECK(r.code == 2);
    CHECK(nlohmann::json::parse(r.out)["error"]["kind"] == "computation");
}

TEST_CASE("help") {
    const auto r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("check-curve") != std::string::npos);
}

TEST_CASE("selftest is deterministic") {
    const auto a = invoke({"selftest", "--seed", "7"});
    const auto b = invoke({"selftest", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["passed"] == true);
}
