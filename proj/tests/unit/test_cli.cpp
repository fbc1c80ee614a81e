#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace apollonite;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "apollonite");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("circle arguments") {
    CHECK(cli::parse_circle("153,17,120") == Circle{153, {17, 120}});
    CHECK(cli::parse_circle("4,-1,-4") == Circle{4, {-1, -4}});
    CHECK_THROWS(cli::parse_circle("4,1"));
    CHECK_THROWS(cli::parse_circle("4,1,x"));
    CHECK_THROWS(cli::parse_circle("4,1,4,5"));
}

TEST_CASE("circles") {
    Run r = run({"circles", "--max-curv", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    r = run({"circles", "--max-curv", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(4,1,4)") != std::string::npos);
}

TEST_CASE("tile and vectors") {
    Run r = run({"tile", "--circle", "4,1,4", "--ascii"});
    CHECK(r.code == 0);
    CHECK(r.out == "##\n##\n");
    r = run({"vectors", "--circle", "4,1,4"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["to_child"][0]["v"] == nlohmann::json::array({2, 1}));
    CHECK(j["to_child"][0]["a"] == nlohmann::json::array({1, 1}));
    CHECK(j["to_child"][2]["v"] == nlohmann::json::array({0, -2}));
}

TEST_CASE("cache round trip") {
    auto dir = std::filesystem::temp_directory_path() / "apollonite-cli-test-cache";
    std::filesystem::remove_all(dir);
    setenv("APOLLONITE_CACHE", dir.c_str(), 1);
    Run first = run({"tile", "--circle", "25,1,20", "--json"});
    CHECK(std::filesystem::exists(dir / "v1" / "25_1_20.json"));
    Run second = run({"tile", "--circle", "25,1,20", "--json"});
    CHECK(first.out == second.out);
    unsetenv("APOLLONITE_CACHE");
    Run plain = run({"tile", "--circle", "25,1,20", "--json"});
    CHECK(plain.out == first.out);
    std::filesystem::remove_all(dir);
}

TEST_CASE("verification commands") {
    CHECK(run({"verify", "--max-curv", "100"}).code == 0);
    CHECK(run({"verify", "--circle", "153,17,120", "--maximality", "4"}).code == 0);
    CHECK(run({"ford", "--p", "3", "--q", "8"}).code == 0);
    CHECK(run({"diamond", "--k", "3"}).code == 0);
    CHECK(run({"sandpile", "--chips", "100"}).code == 0);
    CHECK(run({"sandpile-compare", "--chips", "500", "--max-curv", "9"}).code == 0);
    Run p = run({"pattern", "--circle", "9,1,6", "--window", "4x3", "--ascii"});
    CHECK(p.code == 0);
    CHECK(p.out.size() == 15);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    Run r = run({"tile", "--circle", "4,1,4", "--nope"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"tile", "--circle", "5,1,4"}).code == 2);
    CHECK(run({"tile"}).code == 2);
    CHECK(run({"ford", "--p", "2", "--q", "4"}).code == 2);
    CHECK(run({"pattern", "--circle", "4,1,4"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
