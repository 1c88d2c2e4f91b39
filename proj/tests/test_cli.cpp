#include "doctest.h"

#include "wcurve/error.hpp"
#include "wcurve/spec.hpp"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace wcurve;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(WCURVE_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch_dir() {
    fs::path d = fs::temp_directory_path() / ("wcurve_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& body) {
    fs::path p = dir / name;
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST_CASE("semigroup subcommand") {
    auto r = run("semigroup 3 7 8");
    CHECK(r.code == 0);
    CHECK(r.out.find("gaps: {1, 2, 4, 5}") != std::string::npos);

    auto j = run("semigroup 5 7 11 13 --json");
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["minimal_trace_degree"] == 24);
    CHECK(doc["note"].get<std::string>().find("25") != std::string::npos);

    auto d = run("semigroup 5 7 11 13 --dh 25 --json");
    REQUIRE(d.code == 0);
    auto mon = nlohmann::json::parse(d.out)["trace"]["monomials"];
    CHECK(mon[2] == "Z7^2 (x) Z11'");
    CHECK(mon[4] == "Z11 (x) Z7'^2");

    CHECK(run("semigroup 4 6").code == 2);
    CHECK(run("semigroup 3 5 8").code == 2);
    CHECK(run("semigroup 3 7 8 --dh 9").code == 2);
    CHECK(run("semigroup").code == 2);
    CHECK(run("bogus").code == 2);
}

TEST_CASE("fixtures emit round-trips through the spec parser") {
    auto dir = scratch_dir();
    auto list = run("fixtures list");
    CHECK(list.code == 0);
    for (const auto& name : fixture_names()) {
        CHECK(list.out.find(name) != std::string::npos);
        auto e = run("fixtures emit " + name);
        REQUIRE(e.code == 0);
        CurveSpec s = parse_spec(e.out);
        CHECK(s == fixture_spec(name));
        CHECK(parse_spec(emit_spec(s)) == s);
        auto path = write_file(dir, name + ".json", e.out);
        CHECK(run("curve " + path.string() + " check").code == 0);
        CHECK(run("curve " + path.string() + " trace --json").code == 0);
    }
    CHECK(run("fixtures emit nothing").code == 2);
    fs::remove_all(dir);
}

TEST_CASE("curve subcommand on plane and table specs") {
    auto dir = scratch_dir();
    auto ell = write_file(dir, "ell.json", R"J({"kind": "plane", "plane": {"r": 2, "s": 3, "A": ["0", "-(x^3+1)"]}})J");
    auto v = run("curve " + ell.string() + " verify --seed 4");
    CHECK(v.code == 0);
    auto t = run("curve " + ell.string() + " trace --json");
    REQUIRE(t.code == 0);
    CHECK(nlohmann::json::parse(t.out)["d_h"] == 3);
    CHECK(run("curve " + ell.string() + " expand --order 8").code == 0);
    CHECK(run("curve " + ell.string() + " differentials").code == 0);

    // Same curve given as a table.
    auto tab = write_file(dir, "tab.json", R"J({"kind": "table", "semigroup": {"generators": [2, 3]},
        "table": {"basis": ["1", "y"], "products": {"1,1": ["x^3+1", "0"]}}})J");
    CHECK(run("curve " + tab.string() + " verify").code == 0);

    // Weight violation: y^2 = x^2 + 1.
    auto bad = write_file(dir, "bad.json", R"J({"kind": "table", "semigroup": {"generators": [2, 3]},
        "table": {"basis": ["1", "y"], "products": {"1,1": ["x^2+1", "0"]}}})J");
    CHECK(run("curve " + bad.string() + " check").code == 1);

    auto junk = write_file(dir, "junk.json", "{ not json");
    CHECK(run("curve " + junk.string() + " check").code == 2);
    CHECK(run("curve " + (dir / "missing.json").string() + " check").code == 2);
    CHECK(run("curve " + ell.string() + " fly").code == 2);
    CHECK(run("curve " + ell.string() + " trace --dh 4").code == 2);
    fs::remove_all(dir);
}

TEST_CASE("polynomial strings") {
    CHECK(parse_poly("3x^2 - 1/2*x + 0.25") == Poly({Rat(1, 4), Rat(-1, 2), 3}));
    CHECK(parse_poly("-(x-1)*(x-2)^2") == -(Poly::from_roots({1, 2, 2})));
    CHECK(parse_poly("2(x+1)x") == Poly({0, 2, 2}));
    CHECK(parse_poly("x/2") == Poly({0, Rat(1, 2)}));
    CHECK_THROWS_AS(parse_poly("x^"), Error);
    CHECK_THROWS_AS(parse_poly("y+1"), Error);
}
