#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mcb/fixtures.hpp"

using namespace mcb;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const fixtures::Fixture& find(const std::vector<fixtures::Fixture>& all, const std::string& name) {
    for (const auto& f : all)
        if (f.name == name) return f;
    FAIL("missing fixture " << name);
    return all.front();
}

} // namespace

TEST_CASE("named instances have the advertised shape") {
    CHECK(fixtures::petersen().m() == 15);
    CHECK(fixtures::complete_bipartite(2, 3).m() == 6);
    CHECK(fixtures::mobius_strip().m() == 10);
    CHECK(fixtures::mobius_strip().triangle_count() == 5);
    CHECK(fixtures::annulus().m() == 12);
    CHECK(fixtures::annulus().triangle_count() == 6);
    for (const auto& k : {fixtures::hollow_triangle(), fixtures::filled_triangle(), fixtures::mobius_strip(),
                          fixtures::torus7(), fixtures::annulus()})
        CHECK(validate(k).empty());
}

TEST_CASE("random generators respect their bounds") {
    fixtures::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto g = fixtures::random_connected_graph(rng, {});
        CHECK(g.n() >= 3);
        CHECK(g.n() <= 10);
        CHECK(connected_components(g) == 1);
        for (const auto& e : g.edges()) {
            CHECK(e.w >= 1);
            CHECK(e.w <= 8);
        }
        const auto k = fixtures::random_complex(rng);
        CHECK(k.n() <= 8);
        CHECK(validate(k).empty());
    }
}

TEST_CASE("generation is deterministic") {
    const auto a = fixtures::generate_fixtures(1);
    const auto b = fixtures::generate_fixtures(1);
    REQUIRE(a.size() == b.size());
    CHECK(a.size() == 41);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].input_text == b[i].input_text);
        CHECK(a[i].manifest.dump() == b[i].manifest.dump());
    }
    const auto c = fixtures::generate_fixtures(2);
    CHECK(c.back().input_text != a.back().input_text);
}

TEST_CASE("expected values of named fixtures") {
    const auto all = fixtures::generate_fixtures(1);
    CHECK(find(all, "k4").manifest["expected"]["mcb_total_weight"] == 9);
    const auto& p = find(all, "petersen").manifest["expected"];
    CHECK(p["nu"] == 6);
    CHECK(p["mcb_total_weight"] == 30);
    CHECK(p["mcb_weights"] == nlohmann::ordered_json::array({5, 5, 5, 5, 5, 5}));
    const auto& t = find(all, "torus").manifest["expected"];
    CHECK(t["beta1"] == 2);
    CHECK(t["mhb_total_weight"] == 6);
    const auto& m = find(all, "mobius").manifest["expected"];
    CHECK(m["beta1"] == 1);
    CHECK(m["mhb_total_weight"] == 3);
    CHECK(find(all, "annulus").manifest["expected"]["beta1"] == 1);
    CHECK(find(all, "annulus").manifest["expected"]["mhb_total_weight"] == 3);
    CHECK(find(all, "filled_triangle").manifest["expected"]["beta1"] == 0);
    CHECK(find(all, "two_triangles").manifest["expected"]["mcb_total_weight"] == 6);
    CHECK(find(all, "tree").manifest["expected"]["nu"] == 0);
}

TEST_CASE("shipped fixture files match regeneration") {
    const std::filesystem::path dir = MCB_FIXTURE_DIR;
    for (const auto& f : fixtures::generate_fixtures(1)) {
        CAPTURE(f.name);
        CHECK(slurp(dir / f.input_file) == f.input_text);
        CHECK(slurp(dir / (f.name + ".json")) == f.manifest.dump(2) + "\n");
    }
}

TEST_CASE("write_fixtures round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "mcb_fixture_roundtrip";
    std::filesystem::remove_all(dir);
    const auto all = fixtures::generate_fixtures(3);
    fixtures::write_fixtures(dir, all);
    for (const auto& f : all) {
        CHECK(slurp(dir / f.input_file) == f.input_text);
        CHECK(nlohmann::ordered_json::parse(slurp(dir / (f.name + ".json"))) == f.manifest);
    }
    std::filesystem::remove_all(dir);
}
