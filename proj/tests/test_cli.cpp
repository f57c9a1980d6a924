#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "singline/counter.hpp"

using namespace singline;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "singline");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST_CASE("count as json") {
    const Run r = run({"count", "--d", "4", "--k", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 8);
    for (const char* key : {"d", "k", "u", "rank", "delta", "n", "phi", "warnings"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["d"] == 4);
    CHECK(j["k"] == 2);
    CHECK(j["u"] == 2);
    CHECK(j["n"].is_string());
    CHECK(j["n"] == count_via_pipeline(SurfaceQuery(4, 2)).n.get_str());
    CHECK(j["phi"] == "6/1");
    CHECK(j["delta"] == j["rank"].get<long>() + 3);
}

TEST_CASE("count on the quadric warns about infinitely many lines") {
    const Run r = run({"count", "--d", "2", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("infinitely many lines") != std::string::npos);
    CHECK(r.out.find("| 2 | 1 | 1 | 7 | 10 | 0 | 1/1 |") != std::string::npos);
}

TEST_CASE("count on the cubic mentions dividing by 27") {
    const Run r = run({"count", "--d", "3", "--k", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == "27");
    CHECK(j["delta"] == 19);
    REQUIRE(j["warnings"].size() == 1);
    CHECK(j["warnings"][0].get<std::string>().find("divide by 27 for distinct surfaces") != std::string::npos);
}

TEST_CASE("count rejects bad queries with exit 2") {
    Run r = run({"count", "--d", "1", "--k", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("d >= k") != std::string::npos);
    r = run({"count", "--d", "3", "--k", "0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("k >= 1") != std::string::npos);
    CHECK(run({"count", "--d", "x", "--k", "1"}).code == 2);
    CHECK(run({"count", "--d", "3"}).code == 2);
    CHECK(run({"count", "--d", "3", "--k", "1", "--format", "xml"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("large counts survive the decimal string") {
    const Run r = run({"count", "--d", "150", "--k", "75", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const Integer n(j["n"].get<std::string>());
    CHECK(n == count_via_pipeline(SurfaceQuery(150, 75)).n);
    CHECK(n > Integer("18446744073709551615"));
}

TEST_CASE("table as csv") {
    const Run r = run({"table", "--dmax", "2", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "d,k,u,rank,delta,n,phi,warnings");
    CHECK(rows[1] == "1,1,0,2,5,0,1/3,");
    CHECK(rows[2].rfind("2,1,1,7,10,0,1/1,\"INFINITE_LINES_D2K1", 0) == 0);
    CHECK(rows[3] == "2,2,0,3,6,10,1/1,");
}

TEST_CASE("table as json lines") {
    const Run r = run({"table", "--dmax", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    CHECK(rows.size() == 10);
    for (const auto& row : rows) {
        const auto j = nlohmann::json::parse(row);
        CHECK(j["n"] == count_via_pipeline(SurfaceQuery(j["d"], j["k"])).n.get_str());
    }
}

TEST_CASE("table as markdown grid") {
    const Run r = run({"table", "--dmax", "7"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    CHECK(rows[0] == "| k \\ d | 1 | 2 | 3 | 4 | 5 | 6 | 7 |");
    CHECK(rows[2] == "| 1 | 0 | 0 | 27 | 320 | 1990 | 8680 | 29960 |");
    CHECK(rows[8] == "| 7 |  |  |  |  |  |  | 73920 |");
    CHECK(r.out.find("NONUNIQUE_LINE_D3K1") != std::string::npos);
}

TEST_CASE("table rejects dmax below 2") {
    CHECK(run({"table", "--dmax", "1"}).code == 2);
    CHECK(run({"table", "--dmax", "two"}).code == 2);
}

TEST_CASE("verify") {
    Run r = run({"verify", "--suite", "ring"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS ring") != std::string::npos);
    CHECK(r.out.find("table") == std::string::npos);

    r = run({"verify", "--suite", "table"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL table") != std::string::npos);

    CHECK(run({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("verify reports a perturbed table") {
    ProductTable broken = ProductTable::standard();
    ProductTable::Row top{};
    top[index(Schubert::S22)] = 1;
    broken.set_product(Schubert::S11, Schubert::S2, top);
    VerifyOptions o;
    o.table = &broken;
    std::ostringstream out, err;
    CHECK(cli::cmd_verify(std::string("ring"), out, err, o) == 1);
    CHECK(out.str().find("FAIL ring") != std::string::npos);
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }
