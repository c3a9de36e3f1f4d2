#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "polypol/cli.hpp"
#include "polypol/polypol.hpp"

using namespace polypol;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "polypol");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json result(const Run& r) { return nlohmann::json::parse(r.out).at("result"); }

}  // namespace

TEST_CASE("area of the triangle") {
    auto r = run({"area", "--shape", "triangle"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["result"]["area"] == "1/2");
    CHECK(doc["config"]["seed"].is_number());
    CHECK(doc["config"]["tier"] == "exact");
}

TEST_CASE("transform eval at the origin of the disk") {
    auto r = run({"transform", "eval", "--shape", "disk", "--u", "0", "--v", "0"});
    REQUIRE(r.code == 0);
    CHECK(std::abs(result(r)["value"].get<double>() - 2 * std::numbers::pi) < 1e-12);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"area", "--shape", "blob"}).code == 2);
    CHECK(run({"area"}).code == 2);
    CHECK(run({"area", "--shape", "triangle", "--quad-rtol", "-1"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    auto r = run({"transform", "eval", "--shape", "triangle", "--u", "1", "--v", "0.2"});
    CHECK(r.code == 1);
    auto e = nlohmann::json::parse(r.err);
    CHECK(e["error"]["type"] == "kernel_on_boundary");
    CHECK(e.contains("config"));

    CHECK(run({"canonical", "--shape", "disk"}).code == 1);
}

TEST_CASE("seed and tolerances reach the header") {
    auto r = run({"--seed", "7", "--quad-rtol", "1e-10", "area", "--shape", "square"});
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["config"]["seed"] == 7);
    CHECK(doc["config"]["tolerances"]["quad_rel_tol"] == 1e-10);
    CHECK(doc["result"]["area"] == "4");
    // options may also follow the subcommand
    auto r2 = run({"area", "--shape", "square", "--seed", "9"});
    CHECK(nlohmann::json::parse(r2.out)["config"]["seed"] == 9);
}

TEST_CASE("repeated runs are identical") {
    auto a = run({"moments", "--shape", "hexagon", "--order", "4"});
    auto b = run({"moments", "--shape", "hexagon", "--order", "4"});
    CHECK(a.out == b.out);
    auto c = run({"transform", "eval", "--shape", "half-disk", "--u", "0.1", "--v", "0.2"});
    auto d = run({"transform", "eval", "--shape", "half-disk", "--u", "0.1", "--v", "0.2"});
    CHECK(c.out == d.out);
}

TEST_CASE("moments as csv") {
    auto r = run({"moments", "--shape", "triangle", "--order", "1", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# config ", 0) == 0);
    CHECK(r.out.find("i,j,value\n0,0,1/2\n0,1,1/6\n1,0,1/6\n") != std::string::npos);
}

TEST_CASE("region file input") {
    const std::string path = "cli_test_region.json";
    {
        std::ofstream f(path);
        f << to_json(rectangle(Rational(3), Rational(1, 2))).dump();
    }
    auto r = run({"area", "--region", path});
    std::remove(path.c_str());
    REQUIRE(r.code == 0);
    CHECK(result(r)["area"] == "3/2");
    CHECK(run({"area", "--region", "does-not-exist.json"}).code == 2);
    CHECK(run({"area", "--region", "x.json", "--shape", "disk"}).code == 2);
}

TEST_CASE("transform grid and series") {
    auto g = run({"transform", "grid", "--shape", "triangle", "--umin", "-0.5", "--umax", "1", "--n", "4"});
    REQUIRE(g.code == 0);
    std::istringstream in(g.out);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("# config", 0) == 0);
    std::getline(in, line);
    CHECK(line == "u,v,F,status");
    int rows = 0, refused = 0;
    while (std::getline(in, line)) {
        ++rows;
        if (line.find("refused") != std::string::npos) ++refused;
    }
    CHECK(rows == 16);
    CHECK(refused == 7);  // u = 1 or v = 1

    auto s = run({"transform", "series", "--shape", "triangle", "--order", "2"});
    REQUIRE(s.code == 0);
    CHECK(result(s).dump().find("\"1\"") != std::string::npos);
}

TEST_CASE("polygon-polar, canonical, residues, adjoint") {
    auto p = run({"polygon-polar", "--vertices", "1,0;0,1;-1,0;0,-1"});
    REQUIRE(p.code == 0);
    CHECK(result(p)["degree_ok"] == true);
    CHECK(run({"polygon-polar", "--vertices", "1,0;0"}).code == 2);

    auto c = run({"canonical", "--shape", "square"});
    REQUIRE(c.code == 0);
    CHECK(result(c)["kappa"] == "4");

    auto r = run({"residues", "--shape", "half-disk"});
    REQUIRE(r.code == 0);
    for (const auto& row : result(r)) CHECK((row["residue"] == "1" || row["residue"] == "-1"));

    auto a = run({"adjoint", "--shape", "hexagon"});
    REQUIRE(a.code == 0);
    CHECK(result(a)["degree"] == 3);
}

TEST_CASE("harmonic, dual locus, probe, scan") {
    auto h = run({"harmonic", "--shape", "triangle", "--order", "2"});
    REQUIRE(h.code == 0);
    CHECK(result(h)["mu"][0][0] == "1/2");

    auto c = run({"harmonic", "check-restriction", "--shape", "rectangle:1,2", "--order", "6"});
    CHECK(c.code == 0);
    CHECK(result(c)["passed"] == true);

    auto d = run({"dual-locus", "--shape", "half-disk"});
    REQUIRE(d.code == 0);
    CHECK(result(d).contains("dual_curves"));

    auto p = run({"probe", "--shape", "disk", "--component", "0", "--base", "1,0", "--dir=-1,0"});
    REQUIRE(p.code == 0);
    CHECK(std::abs(result(p)["exponent"].get<double>() + 1.5) < 0.05);
    CHECK(run({"probe", "--shape", "disk", "--component", "3", "--base", "1,0", "--dir=-1,0"}).code == 2);
    CHECK(run({"probe", "--shape", "disk", "--base", "1,0", "--dir", "1,0"}).code == 1);

    auto s = run({"scan", "--shape", "triangle", "--grid", "11", "--window=-2,2"});
    REQUIRE(s.code == 0);
    CHECK(s.out.rfind("# summary ", 0) == 0);
    CHECK(s.out.find("u,v,abs_F,flagged,nearest_component,distance,status\n") != std::string::npos);
}

TEST_CASE("verify subset") {
    auto v = run({"verify", "--suite", "paper-examples", "--criteria", "1,6,11"});
    CHECK(v.code == 0);
    CHECK(v.out.find("criterion 1: PASS") != std::string::npos);
    CHECK(v.out.find("criterion 6: PASS") != std::string::npos);
    CHECK(v.out.find("criterion 11: PASS") != std::string::npos);
    CHECK(run({"verify", "--suite", "other"}).code == 2);
    CHECK(run({"verify", "--criteria", "15"}).code == 2);
}
