#include "sqlab/cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = sqlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli_frontend")
{
    TEST_CASE("adem")
    {
        CHECK(run({"adem", "Sq2 Sq2"}).out == "Sq3 Sq1\n");
        CHECK(run({"adem", "Sq2", "Sq2"}).out == "Sq3 Sq1\n");
        CHECK(run({"adem", "Sq2 Sq4 + Sq5 Sq1 + Sq6"}).out == "0\n");
        CHECK(run({"adem", "1"}).out == "1\n");
        const auto bad = run({"adem", "Sq2 *"});
        CHECK(bad.code == 2);
        CHECK(bad.out.empty());
        CHECK(bad.err.find("parse error") != std::string::npos);
        const auto cap = run({"adem", "Sq600"});
        CHECK(cap.code == 3);
        CHECK(cap.err.find("degree cap 512") != std::string::npos);
        CHECK(run({"--degree-cap", "8", "adem", "Sq4 Sq8"}).code == 3);
    }

    TEST_CASE("thin wrappers")
    {
        CHECK(run({"ffunc", "18"}).out == "15\n");
        CHECK(run({"ideal", "10", "2"}).out == "true\n");
        CHECK(run({"ideal", "10", "1"}).out == "false\n");
        CHECK(run({"ideal", "--expr", "Sq5 Sq1 + Sq4 Sq2", "1"}).out == "true\n");
        CHECK(run({"binom", "4", "9"}).out == "1\n");
        CHECK(run({"binom", "2", "10"}).out == "0\n");
        CHECK(run({"ffunc", "0"}).code == 2);
        CHECK(run({"ideal", "10"}).code == 2);
        CHECK(run({"ideal", "10", "-1"}).code == 2);
        CHECK(run({"binom", "x", "1"}).code == 2);
    }

    TEST_CASE("table1")
    {
        const auto r = run({"table1"});
        CHECK(r.code == 0);
        for (const char* row : {"S^5: k >= 3", "S^9: k >= 7", "S^17: k >= 15", "S^11: k >= 5", "S^13: k >= 7"})
            CHECK(r.out.find(row) != std::string::npos);
        const auto only = run({"table1", "--only", "S5"});
        CHECK(only.out == "S^5: k >= 3  [Sq6 = Sq2 Sq4 + Sq5 Sq1]\n");
        CHECK(run({"table1", "--only", "S7"}).code == 2);

        const auto j = nlohmann::json::parse(run({"--format", "json", "table1"}).out);
        CHECK(j["schema"] == 1);
        REQUIRE(j["rows"].is_array());
        std::vector<int> bounds;
        for (const auto& row : j["rows"])
            bounds.push_back(row["bound"]);
        CHECK(bounds == std::vector<int>{3, 7, 15, 5, 7});
    }

    TEST_CASE("bound")
    {
        const auto r = run({"bound", "9"});
        CHECK(r.code == 0);
        CHECK(r.out.find("bound: k >= 7") != std::string::npos);
        CHECK(run({"bound", "9", "--relation", "sq10-short"}).out.find("bound: k >= 3") != std::string::npos);
        CHECK(run({"bound", "5", "--expr", "Sq2 Sq4 + Sq5 Sq1"}).out.find("bound: k >= 3") != std::string::npos);
        CHECK(run({"bound", "8"}).code == 2);
        CHECK(run({"bound", "7"}).code == 2);
        CHECK(run({"bound", "9", "--relation", "sq6"}).code == 2);
        CHECK(run({"bound", "9", "--relation", "sq10", "--expr", "Sq2 Sq8 + Sq9 Sq1"}).code == 2);
        CHECK(run({"bound", "9", "--expr", "Sq2 Sq8"}).code == 2);
        const auto j = nlohmann::json::parse(run({"--format", "json", "bound", "17"}).out);
        CHECK(j["schema"] == 1);
        CHECK(j["report"]["bound"] == 15);
    }

    TEST_CASE("distinguish and theorem1")
    {
        const auto d = run({"distinguish", "2", "1"});
        CHECK(d.code == 0);
        CHECK(d.out.find("distinguished degree: 29") != std::string::npos);
        CHECK(d.out.find("verdict: modules differ") != std::string::npos);
        CHECK(run({"distinguish", "4", "1"}).out.find("verdict: modules differ") != std::string::npos);
        const auto refused = run({"distinguish", "1", "1"});
        CHECK(refused.code == 2);
        CHECK(refused.err.find("n>1 and q>=1") != std::string::npos);
        const auto t = run({"theorem1", "2"});
        CHECK(t.code == 0);
        CHECK(t.out.find("holds") != std::string::npos);
        CHECK(run({"theorem1", "0"}).code == 2);
        const auto j = nlohmann::json::parse(run({"--format", "json", "distinguish", "3", "2"}).out);
        CHECK(j["schema"] == 1);
        CHECK(j["report"]["verdict"] == "differ");
    }

    TEST_CASE("usage errors")
    {
        CHECK(run({}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({"--bogus", "adem", "1"}).code == 2);
        CHECK(run({"--format", "xml", "adem", "1"}).code == 2);
        const auto help = run({"--help"});
        CHECK(help.code == 0);
        CHECK(help.out.find("table1") != std::string::npos);
    }

    TEST_CASE("degree cap from the environment")
    {
        ::setenv(sqlab::cli::degree_cap_env, "8", 1);
        CHECK(run({"adem", "Sq4 Sq8"}).code == 3);
        CHECK(run({"--degree-cap", "64", "adem", "Sq4 Sq8"}).code == 0);
        ::setenv(sqlab::cli::degree_cap_env, "many", 1);
        CHECK(run({"adem", "Sq1"}).code == 2);
        ::unsetenv(sqlab::cli::degree_cap_env);
        CHECK(run({"adem", "Sq4 Sq8"}).code == 0);
    }

    TEST_CASE("repeatable output")
    {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {"table1"}, {"--format", "json", "table1"}, {"--jobs", "4", "bound", "17"}, {"distinguish", "3", "3"}}) {
            const auto a = run(args);
            const auto b = run(args);
            CHECK(a.out == b.out);
        }
        CHECK(run({"bound", "17"}).out == run({"--jobs", "4", "bound", "17"}).out);
    }
}
