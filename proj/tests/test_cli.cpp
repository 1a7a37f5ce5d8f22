#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "moishezon/cli.hpp"

using moishezon::cli::run;
using nlohmann::json;

TEST_CASE("verify-thesis succeeds and is byte-stable") {
    const auto a = run({"verify-thesis", "--json"});
    const auto b = run({"verify-thesis", "--json"});
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_payload == b.stdout_payload);
    const auto j = json::parse(a.stdout_payload);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(run({"verify-thesis"}).exit_code == 0);
}

TEST_CASE("verify-thesis exits 1 on claim failures") {
    const auto r = run({"verify-thesis", "--inject-nu", "7", "--filter", "kollar"});
    CHECK(r.exit_code == 1);
    CHECK(r.stdout_payload.find("FAIL") != std::string::npos);
}

TEST_CASE("verify-thesis filter") {
    const auto r = run({"verify-thesis", "--json", "--filter", "oguiso"});
    CHECK(json::parse(r.stdout_payload)["reports"].size() == 3);
}

TEST_CASE("multiplier monomial") {
    const auto r = run({"multiplier", "monomial", "--alpha", "2,3", "--k", "2", "--json"});
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.stdout_payload);
    CHECK(j["generators"] == json::parse("[[3,0],[2,1],[1,3],[0,4]]"));
    CHECK(j["alphas"] == json::parse(R"(["2/1","3/1"])"));
}

TEST_CASE("floats and malformed flags are usage errors") {
    CHECK(run({"multiplier", "monomial", "--alpha", "2.5", "--k", "2"}).exit_code == 2);
    CHECK(run({"multiplier", "monomial", "--alpha", "2"}).exit_code == 2);
    CHECK(run({"no-such-command"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"mori", "divisorial", "n=4"}).exit_code == 2);
    CHECK(run({"mori", "divisorial", "n=4", "r=2", "x=1"}).exit_code == 2);
    CHECK(run({"mori", "sideways", "n=4"}).exit_code == 2);
    CHECK(run({"oracle", "--alpha", "1", "--beta", "0", "--k", "1", "--samples", "10"}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("mori subcommands") {
    auto j = json::parse(run({"mori", "divisorial", "n=4", "r=2", "--json"}).stdout_payload);
    CHECK(j["min_dim_y"] == 2);
    CHECK(j["feasible"] == true);
    j = json::parse(run({"mori", "divisorial", "n=3", "r=2", "--json"}).stdout_payload);
    CHECK(j["feasible"] == false);
    j = json::parse(run({"mori", "small", "n=4", "--json"}).stdout_payload);
    CHECK(j["min_dim_y"] == 3);
    j = json::parse(run({"mori", "wisniewski", "n=4", "dim_f=2", "dim_a=3", "length=2", "--json"}).stdout_payload);
    CHECK(j["holds"] == true);
    j = json::parse(run({"mori", "chi", "n=4", "g=0", "kx=0", "--json"}).stdout_payload);
    CHECK(j["chi"] == "1");
    j = json::parse(run({"mori", "balance", "n=5", "kz=2", "kline=-2", "--json"}).stdout_payload);
    CHECK(j["ruling_e_degree"] == "-1");
    CHECK(j["split_degree"] == "-1");
    CHECK(run({"mori", "divisorial", "n=4", "r=2"}).stdout_payload.find("min_dim_y=2") != std::string::npos);
}

TEST_CASE("blowup then intersect end to end") {
    for (int m = 1; m <= 10; ++m) {
        const std::string curve = "g=" + std::to_string(2 * m - 2) + ",d=" + std::to_string(m + 3);
        const auto b = run({"blowup", "--base", "p3", "--curve", curve});
        REQUIRE(b.exit_code == 0);
        const std::string path = "cli_tower.json";
        {
            std::ofstream out(path);
            out << b.stdout_payload;
        }
        const auto r = run({"intersect", "--space", path, "--class", "3,-1", "--json"});
        CHECK(json::parse(r.stdout_payload)["value"] == std::to_string(6 - m));
        const auto pair = run({"intersect", "--space", path, "--class", "0,1", "--curve", "ell", "--json"});
        CHECK(json::parse(pair.stdout_payload)["value"] == "-1");
        const auto triple = run({"intersect", "--space", path, "--class", "1,0", "--class", "0,1", "--class", "0,1",
                                 "--json"});
        CHECK(json::parse(triple.stdout_payload)["value"] == std::to_string(-(m + 3)));
        std::remove(path.c_str());
    }
}

TEST_CASE("blowup rejects an inconsistent nu and bad bases") {
    CHECK(run({"blowup", "--base", "p3", "--curve", "g=0,d=3,nu=10"}).exit_code == 0);
    CHECK(run({"blowup", "--base", "p3", "--curve", "g=0,d=3,nu=9"}).exit_code == 2);
    CHECK(run({"blowup", "--base", "q3", "--curve", "g=0,d=3"}).exit_code == 2);
    CHECK(run({"blowup", "--base", "rank1:3,8,0", "--curve", "g=0,d=2"}).exit_code == 0);
}

TEST_CASE("intersect reports schema errors") {
    const std::string path = "cli_bad.json";
    {
        std::ofstream out(path);
        out << R"({"name":"P3","dim":3,"basis":["H"],"top_form":{"3":"3/0"},"canonical":[-4],"curves":[]})";
    }
    const auto r = run({"intersect", "--space", path, "--class", "1"});
    CHECK(r.exit_code == 2);
    CHECK(r.stderr_payload.find("top_form") != std::string::npos);
    std::remove(path.c_str());
    CHECK(run({"intersect", "--space", "missing.json", "--class", "1"}).exit_code == 2);
}

TEST_CASE("logres, snc, oracle, matrix") {
    auto j = json::parse(run({"logres", "--alpha", "4", "--json"}).stdout_payload);
    CHECK(j["multiplicities"] == json::parse("[1,2,3,4]"));
    j = json::parse(run({"multiplier", "snc", "--coeff", "3/2,2,1/3", "--json"}).stdout_payload);
    CHECK(j["floors"] == json::parse("[1,2,0]"));
    j = json::parse(
        run({"oracle", "--alpha", "1,1", "--beta", "0,0", "--k", "1", "--samples", "20000", "--seed", "4", "--json"})
            .stdout_payload);
    CHECK(j["verdict"] == "member");
    CHECK(j["e"] == "1");
    j = json::parse(run({"matrix", "--n", "4", "--json"}).stdout_payload);
    CHECK(j["nonzero"] == true);
    CHECK(j["instance"] == "structured");
    const auto a = run({"matrix", "--n", "4", "--seed", "2", "--json"});
    CHECK(a.stdout_payload == run({"matrix", "--n", "4", "--seed", "2", "--json"}).stdout_payload);
}
