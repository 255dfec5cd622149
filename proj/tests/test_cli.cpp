#include <commands.hpp>

#include <minrank/canon.hpp>
#include <minrank/forbidden.hpp>
#include <minrank/graph.hpp>
#include <minrank/named.hpp>

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = mrank::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "mrank-cli-test";
    std::filesystem::create_directories(dir);
    auto p = dir / name;
    std::filesystem::remove(p);
    return p;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("mr examples")
{
    auto r = run({"mr", "--named", "full_house", "--field", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("mr = 3", 0) == 0);
    r = run({"mr", "--named", "full_house", "--field", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("mr = 2", 0) == 0);
    r = run({"mr", "Bg", "--field", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("mr = 2", 0) == 0);
    CHECK(r.out.find("brute-force") != std::string::npos);
}

TEST_CASE("mr with the cut-vertex method and json")
{
    auto r = run({"mr", "--named", "graph38", "--cut-vertex", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["mr"] == 4);
    CHECK(j["method"] == "cut-vertex");
}

TEST_CASE("exit codes")
{
    CHECK(run({"mr", "B!"}).code == mrank::exit_parse);
    CHECK(run({"mr", "--named", "nonsense"}).code == mrank::exit_parse);
    CHECK(run({"mr", "Bg", "--field", "4"}).code == mrank::exit_parse);
    CHECK(run({"frobnicate"}).code == mrank::exit_parse);
    CHECK(run({"mr", "--named", "P9", "--budget", "10"}).code == mrank::exit_budget);
    CHECK(run({"search", "--field", "3", "--k", "2", "--max-n", "5", "--budget", "4", "--quiet"}).code
          == mrank::exit_budget);
}

TEST_CASE("budget from the environment")
{
    ::setenv("MRANK_BUDGET", "10", 1);
    CHECK(run({"mr", "--named", "P9"}).code == mrank::exit_budget);
    CHECK(run({"mr", "--named", "P9", "--budget", "1000"}).code == 0);
    ::unsetenv("MRANK_BUDGET");
    CHECK(run({"mr", "--named", "P9"}).code == 0);
}

TEST_CASE("mrset listings")
{
    auto r = run({"mrset", "Bg"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3 matrices in 2 column-space classes") != std::string::npos);
    r = run({"mrset", "--named", "dart"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2 matrices in 2 column-space classes") != std::string::npos);
    r = run({"mrset", "A_", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["mr"] == 1);
    CHECK(j["classes"].size() >= 1);
}

TEST_CASE("cache hits and recomputation")
{
    const auto path = scratch("cache.tsv").string();
    auto first = run({"mr", "--named", "full_house", "--cache", path});
    CHECK(first.code == 0);
    CHECK(first.out.find("brute-force") != std::string::npos);
    auto second = run({"mr", "--named", "full_house", "--cache", path});
    CHECK(second.code == 0);
    CHECK(second.out.find("cache") != std::string::npos);
    CHECK(second.out.rfind("mr = 3", 0) == 0);
    auto fresh = run({"mr", "--named", "full_house", "--cache", path, "--no-cache"});
    CHECK(fresh.code == 0);
    CHECK(fresh.out.rfind("mr = 3", 0) == 0);

    // a tampered record is caught by the comparison mode
    std::ofstream(path, std::ios::app) << minrank::graph6_encode(minrank::canonical_graph(minrank::named::full_house()))
                                       << "\t2\t1\t0\t" << minrank::engine_version() << "\n";
    auto tampered = run({"mr", "--named", "full_house", "--cache", path, "--no-cache"});
    CHECK(tampered.code == mrank::exit_failure);
    CHECK(tampered.err.find("disagreement") != std::string::npos);
}

TEST_CASE("search examples and determinism")
{
    auto r = run({"search", "--field", "2", "--k", "0", "--max-n", "3", "--quiet"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\nA_\n") != std::string::npos);

    const auto a = scratch("f3a.txt"), b = scratch("f3b.txt");
    r = run({"search", "--field", "2", "--k", "2", "--max-n", "6", "--out", a.string(), "--quiet"});
    CHECK(r.code == 0);
    r = run({"search", "--field", "2", "--k", "2", "--max-n", "6", "--jobs", "3", "--out", b.string(), "--quiet"});
    CHECK(r.code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).find("# members 7") != std::string::npos);

    r = run({"report", "--catalog", a.string(), "--json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["summary"]["members"] == 7);
}

TEST_CASE("check streams verdicts")
{
    const auto cat = scratch("f4.txt");
    auto r = run({"search", "--field", "2", "--k", "3", "--max-n", "8", "--out", cat.string(), "--quiet"});
    REQUIRE(r.code == 0);
    const std::string input = minrank::graph6_encode(minrank::path(5)) + "\n"
                            + minrank::graph6_encode(minrank::complete(8)) + "\n" + "oops\n"
                            + minrank::graph6_encode(minrank::named::ladder_p3xp2()) + "\n";
    r = run({"check", "--catalog", cat.string(), "--verify", "4"}, input);
    CHECK(r.code == mrank::exit_parse);
    std::istringstream lines(r.out);
    std::vector<std::string> got;
    for (std::string line; std::getline(lines, line);)
        got.push_back(line);
    REQUIRE(got.size() == 4);
    CHECK(got[0].find("mr>=4") != std::string::npos);
    CHECK(got[1].find("mr<=3") != std::string::npos);
    CHECK(got[2].find("error") != std::string::npos);
    CHECK(got[3].find("mr>=4") != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);

    r = run({"check", "--catalog", cat.string()}, minrank::graph6_encode(minrank::complete(8)) + "\n");
    CHECK(r.code == 0);
}

TEST_CASE("triples output")
{
    auto r = run({"triples", "--named", "ladder", "--pattern", "P4", "--map", "2,0,1,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("optimal triple") != std::string::npos);
    CHECK(r.out.find("FAILS") == std::string::npos);

    r = run({"triples", "--named", "example_a", "--pattern", "P4", "--map", "0,1,2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("no optimal triple") != std::string::npos);

    r = run({"triples", "--named", "P4", "--pattern", "P4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("no optimal triple") != std::string::npos);

    r = run({"triples", "--named", "K5", "--pattern", "P4"});
    CHECK(r.code == mrank::exit_failure);
    CHECK(r.err.find("no induced copy") != std::string::npos);

    r = run({"triples", "--named", "ladder", "--pattern", "P4", "--json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["schema"] == 1);
}

TEST_CASE("certify, generate and names")
{
    auto r = run({"certify", "--named", "P5", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("minimal for k = 3") != std::string::npos);
    r = run({"generate", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
    r = run({"names"});
    CHECK(r.out.find("full_house") != std::string::npos);
}
