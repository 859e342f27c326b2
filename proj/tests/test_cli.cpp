#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mcb/cli.hpp"
#include "mcb/graph.hpp"

using namespace mcb;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (std::filesystem::path(MCB_FIXTURE_DIR) / name).string(); }

std::string temp_file(const std::string& name, const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p.string();
}

} // namespace

TEST_CASE("mcb json on K4") {
    const auto r = run({"mcb", "--engine", "earliest", fixture("k4.grf"), "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["engine"] == "earliest");
    CHECK(j["nu"] == 3);
    CHECK(j["total_weight"] == 9);
    CHECK(j["cycles"].size() == 3);

    // Re-summing edge weights from the input reproduces every reported weight.
    const auto g = parse_graph_file(fixture("k4.grf"));
    Weight total = 0;
    for (const auto& c : j["cycles"]) {
        Weight w = 0;
        std::size_t prev = 0;
        bool first = true;
        for (const auto& e : c["edges"]) {
            const auto id = e.get<std::size_t>();
            if (!first) CHECK(id > prev);
            prev = id;
            first = false;
            w += g.edge(id).w;
        }
        CHECK(w == c["weight"].get<Weight>());
        total += w;
    }
    CHECK(total == 9);
}

TEST_CASE("every mcb engine from the command line") {
    for (const char* e : {"earliest", "depina", "kavitha"}) {
        const auto r = run({"mcb", fixture("petersen.grf"), "--engine", e, "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["engine"] == e);
        CHECK(j["total_weight"] == 30);
    }
}

TEST_CASE("mcb text output on a tree") {
    const auto r = run({"mcb", fixture("tree.grf")});
    CHECK(r.code == 0);
    CHECK(r.out.find("nu: 0") != std::string::npos);
    CHECK(r.out.find("total_weight: 0") != std::string::npos);
}

TEST_CASE("text output truncates long listings") {
    std::ostringstream text;
    const std::size_t k = 60;
    text << "graph " << 2 * k << ' ' << 3 * k << '\n';
    for (std::size_t i = 0; i < k; ++i)
        text << "e " << 2 * i << ' ' << 2 * i + 1 << " 1\ne " << 2 * i << ' ' << 2 * i + 1 << " 2\n";
    for (std::size_t i = 0; i + 1 < k; ++i) text << "e " << 2 * i + 1 << ' ' << 2 * i + 2 << " 1\n";
    text << "e 0 1 3\n";
    const auto path = temp_file("mcb_cli_long.grf", text.str());
    const auto r = run({"mcb", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("[49]") != std::string::npos);
    CHECK(r.out.find("[50]") == std::string::npos);
    CHECK(r.out.find("more cycles not shown") != std::string::npos);
    const auto j = nlohmann::json::parse(run({"mcb", path, "--format", "json"}).out);
    CHECK(j["cycles"].size() == j["nu"].get<std::size_t>());
    CHECK(j["nu"] == k + 1);
}

TEST_CASE("mhb and betti") {
    const auto b = run({"betti", fixture("torus.scx")});
    CHECK(b.code == 0);
    CHECK(b.out == "beta0=1 beta1=2\n");

    for (const char* e : {"tight", "via-mcb"}) {
        const auto r = run({"mhb", fixture("torus.scx"), "--engine", e, "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["engine"] == e);
        CHECK(j["beta1"] == 2);
        CHECK(j["total_weight"] == 6);
    }
    const auto via = run({"mhb", fixture("mobius.scx"), "--engine", "via-mcb", "--mcb-engine", "kavitha",
                          "--format", "json"});
    CHECK(nlohmann::json::parse(via.out)["total_weight"] == 3);

    const auto graph_betti = run({"betti", fixture("two_triangles.grf")});
    CHECK(graph_betti.out == "beta0=2 beta1=2\n");
}

TEST_CASE("tight-cycles defaults to json") {
    const auto r = run({"tight-cycles", fixture("k4.grf")});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 4);
    CHECK(j["total_length"] == 12);
    CHECK(run({"tight-cycles", fixture("k4.grf"), "--format", "text"}).out.starts_with("count: 4\n"));
}

TEST_CASE("input errors exit 1") {
    const auto missing = run({"mcb", "/nonexistent/x.grf"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    const auto bad = run({"mcb", temp_file("mcb_cli_bad.grf", "graph 3 1\n\ne 0 7 1\n")});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("line 3") != std::string::npos);

    const auto open = temp_file("mcb_cli_open.scx", "complex 3\ns 1 0 1 1\ns 2 0 1 2\n");
    const auto unclosed = run({"mhb", open});
    CHECK(unclosed.code == 1);
    CHECK(unclosed.err.find("(0,2)") != std::string::npos);
    CHECK(unclosed.err.find("(1,2)") != std::string::npos);
    const auto closed = run({"betti", open, "--auto-close"});
    CHECK(closed.code == 0);
    CHECK(closed.out == "beta0=1 beta1=0\n");

    CHECK(run({"mcb", fixture("k4.grf"), "--engine", "nope"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"mcb", temp_file("mcb_cli_3d.scx", "complex 4\ns 3 0 1 2 3\n")}).code == 1);
}

TEST_CASE("oracle subcommand") {
    const auto r = run({"oracle", "mcb", fixture("petersen.grf"), "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["total_weight"] == 30);
    CHECK(run({"oracle", "mhb", fixture("torus.scx")}).code == 0);
    CHECK(run({"oracle", "tight", fixture("k23.grf")}).code == 0);

    std::ostringstream big;
    big << "graph 8 28\n";
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) big << "e " << u << ' ' << v << " 1\n";
    const auto refused = run({"oracle", "mcb", temp_file("mcb_cli_k8.grf", big.str())});
    CHECK(refused.code == 1);
    CHECK(refused.err.find("budget") != std::string::npos);

    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("oracle") == std::string::npos);
}

TEST_CASE("bench") {
    const auto a = run({"bench", "--seed", "1"});
    CHECK(a.code == 0);
    CHECK(a.out.find("DISAGREE") == std::string::npos);
    CHECK(a.out.find("summary: 30 instances, 0 disagreements") != std::string::npos);
    CHECK(run({"bench", "--seed", "1"}).out == a.out);
    CHECK(run({"bench", "--seed", "2"}).out != a.out);

    const auto empty = run({"bench", "--graphs", "0", "--complexes", "0"});
    CHECK(empty.code == 0);
    CHECK(empty.out.find("summary: 0 instances, 0 disagreements") != std::string::npos);
}

TEST_CASE("repeated runs are byte identical") {
    for (const char* name : {"k4.grf", "petersen.grf", "torus.scx", "random_graph_07.grf", "random_complex_03.scx"}) {
        for (std::vector<std::string> args : {std::vector<std::string>{"mcb", "--format", "json"},
                                              {"mhb"},
                                              {"tight-cycles"},
                                              {"betti"}}) {
            args.push_back(fixture(name));
            const auto first = run(args);
            const auto second = run(args);
            CHECK(first.code == second.code);
            CHECK(first.out == second.out);
        }
    }
}
