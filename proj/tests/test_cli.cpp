#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "edgereg/cache.hpp"
#include "edgereg/cli.hpp"
#include "edgereg/io.hpp"

using namespace edgereg;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("edgereg-test-" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("reg outputs") {
    CHECK(run({"reg", "cycle:9@2", "--no-cache"}).out.find("reg(R/I) = 2") != std::string::npos);
    CHECK(run({"reg", "path:6@2", "--no-cache"}).out.find("reg(R/I) = 2") != std::string::npos);
    CHECK(run({"reg", "sunflower6@2", "--no-cache"}).out.find("reg(R/I) = 2") != std::string::npos);
    const Run r = run({"reg", "cycle:9@2", "--json", "--no-cache"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"reg_quotient\": 2") != std::string::npos);
    CHECK(r.out.find("\"reg_ideal\": 3") != std::string::npos);
}

TEST_CASE("im, chordal and betti outputs") {
    CHECK(run({"im", "path:13@3"}).out.rfind("im = 3", 0) == 0);
    CHECK(run({"chordal", "sunflower6"}).out.rfind("true", 0) == 0);
    CHECK(run({"chordal", "cycle:6"}).out.rfind("false", 0) == 0);
    const Run b = run({"betti", "cycle:5", "--no-cache"});
    CHECK(b.out.find("entries: (0,0,1) (1,2,5) (2,3,5) (3,5,1)") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"reg", "hexagon:4"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const Run unknown = run({"verify", "nonsense"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("sunflower") != std::string::npos);
    CHECK(run({"verify", "sunflower"}).code == 0);
    CHECK(run({"reg", "/nonexistent/graph.txt"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    const fs::path dir = scratch("exit");
    const std::string file = (dir / "double_star.txt").string();
    write_file(file, "6 5\n1 2\n2 4\n2 5\n3 4\n4 6\n");
    CHECK(run({"verify", "conjecture", "--graph", file}).code == 1);

    write_file((dir / "bad.txt").string(), "3 2\n1 2\n2 2\n");
    const Run bad = run({"reg", (dir / "bad.txt").string()});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 3") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("power file round trip") {
    const fs::path dir = scratch("power");
    const std::string file = (dir / "c9_2.txt").string();
    CHECK(run({"power", "cycle:9", "--d", "2", "--out", file}).code == 0);
    CHECK(parse_graph(read_file(file)) == power(cycle(9), 2));
    CHECK(run({"reg", file, "--no-cache"}).out.find("reg(R/I) = 2") != std::string::npos);

    const std::string ideal = (dir / "ideal.txt").string();
    write_file(ideal, format_ideal(edge_ideal(cycle(5))));
    CHECK(run({"betti", ideal, "--no-cache"}).out.find("(3,5,1)") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("export-m2 script") {
    const std::string s = run({"export-m2", "cycle:9@2"}).out;
    CHECK(s.find("[x_1..x_9]") != std::string::npos);
    CHECK(s.find("18 generators in 9 variables") != std::string::npos);
    std::size_t quadrics = 0;
    for (char c : s)
        if (c == '*') ++quadrics;
    CHECK(quadrics == 18);
    CHECK(run({"export-m2", "cycle:5", "--field", "GF2"}).out.find("ZZ/2") != std::string::npos);
}

TEST_CASE("cache is transparent") {
    const fs::path dir = scratch("cache");
    ::setenv("EDGEREG_CACHE", dir.string().c_str(), 1);
    std::vector<std::string> specs;
    for (int n = 4; n <= 13; ++n)
        for (int d = 1; d <= 5; ++d) specs.push_back("cycle:" + std::to_string(n) + "@" + std::to_string(d));
    REQUIRE(specs.size() == 50);
    for (const auto& s : specs) {
        const std::string direct = run({"betti", s, "--no-cache"}).out;
        const std::string cold = run({"betti", s}).out;
        const std::string warm = run({"betti", s}).out;
        CHECK(cold == direct);
        CHECK(warm == direct);
    }
    CHECK_FALSE(fs::is_empty(dir));

    const MonomialIdeal a = edge_ideal(cycle(7));
    const ResultCache cache(dir.string());
    CHECK(cache.load(a, Field::gf2(), "lcm") == std::nullopt);
    CHECK(ResultCache::key(a, Field::rationals(), "hochster") != ResultCache::key(a, Field::gf2(), "hochster"));
    ::unsetenv("EDGEREG_CACHE");
    fs::remove_all(dir);
}

TEST_CASE("verify JSON is reproducible") {
    const Run a = run({"verify", "forest-theorem", "--trials", "10", "--json", "--threads", "1"});
    const Run b = run({"verify", "forest-theorem", "--trials", "10", "--json", "--threads", "3"});
    CHECK(a.out == b.out);
    CHECK(a.out.find("elapsed_ms") == std::string::npos);
}
