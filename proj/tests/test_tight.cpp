#include <doctest.h>

#include <algorithm>
#include <set>

#include "mcb/error.hpp"
#include "mcb/fixtures.hpp"
#include "mcb/oracle.hpp"
#include "mcb/tight.hpp"
#include "test_util.hpp"

using namespace mcb;

namespace {

// Edge sets of every simple cycle, by depth-first search from each smallest vertex.
std::set<std::vector<EdgeId>> simple_cycle_sets(const Graph& g) {
    std::set<std::vector<EdgeId>> out;
    std::vector<bool> on(g.n(), false);
    std::vector<EdgeId> path;
    auto go = [&](auto&& self, Vertex start, Vertex x) -> void {
        for (const auto& [e, y] : g.incident(x)) {
            if (!path.empty() && path.back() == e) continue;
            if (y == start) {
                auto s = path;
                s.push_back(e);
                std::sort(s.begin(), s.end());
                out.insert(s);
            } else if (y > start && !on[y]) {
                on[y] = true;
                path.push_back(e);
                self(self, start, y);
                path.pop_back();
                on[y] = false;
            }
        }
    };
    for (Vertex s = 0; s < g.n(); ++s) {
        on[s] = true;
        go(go, s, s);
        on[s] = false;
    }
    return out;
}

// Tightness judged on base weights alone, ties allowed.
bool tight_by_base_weight(const Graph& g, const Gf2Vector& edges) {
    const auto walk = walk_cycle(g, edges);
    const auto d = apsp(g);
    const std::size_t k = walk.edges.size();
    Weight total = 0;
    for (auto e : walk.edges) total += g.edge(e).w;
    for (std::size_t i = 0; i < k; ++i) {
        Weight arc = 0;
        for (std::size_t j = i + 1; j < k; ++j) {
            arc += g.edge(walk.edges[j - 1]).w;
            if (std::min(arc, total - arc) != d.dist(walk.vertices[i], walk.vertices[j])->base) return false;
        }
    }
    return true;
}

Cycle cycle_of(const Graph& g, std::initializer_list<EdgeId> edges) {
    return Cycle::from_edges(g, Gf2Vector::from_indices(g.m(), edges));
}

} // namespace

TEST_CASE("walk_cycle and simplicity") {
    const auto g = fixtures::complete_graph(4);  // 01 02 03 12 13 23
    const auto w = walk_cycle(g, Gf2Vector::from_indices(6, {0, 1, 3}));
    CHECK(w.vertices.size() == 3);
    CHECK(w.edges.size() == 3);
    CHECK(is_simple_cycle(g, Gf2Vector::from_indices(6, {0, 2, 3, 5})));
    CHECK_FALSE(is_simple_cycle(g, Gf2Vector::from_indices(6, {0, 1})));
    CHECK_FALSE(is_simple_cycle(g, Gf2Vector(6)));
    CHECK_THROWS_AS(walk_cycle(g, Gf2Vector::from_indices(6, {0})), PreconditionError);

    const auto two = fixtures::two_disjoint_triangles();
    CHECK_FALSE(is_simple_cycle(two, Gf2Vector::from_indices(6, {0, 1, 2, 3, 4, 5})));
}

TEST_CASE("horton candidates examples") {
    const auto tri = fixtures::complete_graph(3);
    CHECK(horton_candidates(tri, apsp(tri)).size() == 1);

    const auto tree = fixtures::small_tree();
    CHECK(horton_candidates(tree, apsp(tree)).empty());

    const auto k4 = fixtures::complete_graph(4);
    const auto cands = test::edge_lists(horton_candidates(k4, apsp(k4)));
    for (const auto& t : {std::vector<EdgeId>{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}})
        CHECK(std::find(cands.begin(), cands.end(), t) != cands.end());
    const auto all = simple_cycle_sets(k4);
    for (const auto& c : cands) CHECK(all.count(c) == 1);
}

TEST_CASE("is_tight examples") {
    const auto k4 = fixtures::complete_graph(4);
    const auto d = apsp(k4);
    CHECK(is_tight(k4, cycle_of(k4, {0, 1, 3}), d));
    CHECK_FALSE(is_tight(k4, cycle_of(k4, {0, 2, 3, 5}), d));

    const auto c5 = fixtures::cycle_graph(5);
    CHECK(is_tight(c5, cycle_of(c5, {0, 1, 2, 3, 4}), apsp(c5)));

    // A heavy chord leaves the outer square tight.
    const Graph sq(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {0, 2, 5}});
    CHECK(is_tight(sq, cycle_of(sq, {0, 1, 2, 3}), apsp(sq)));
    CHECK_FALSE(is_tight(sq, cycle_of(sq, {0, 1, 4}), apsp(sq)));
}

TEST_CASE("enumeration examples") {
    const auto c5 = enumerate_tight_cycles(fixtures::cycle_graph(5));
    CHECK(c5.size() == 1);
    CHECK(c5.total_length == 5);

    const auto k4 = enumerate_tight_cycles(fixtures::complete_graph(4));
    CHECK(test::edge_lists(k4.cycles) ==
          std::vector<std::vector<EdgeId>>{{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}});

    const auto pg = fixtures::petersen();
    const auto pt = enumerate_tight_cycles(pg);
    for (const auto& c : pt.cycles) CHECK(c.length() == 5);
    CHECK(pt.size() == 12);
    CHECK(pt.total_length <= 10 * 6);

    CHECK(enumerate_tight_cycles(fixtures::small_tree()).size() == 0);

    // K_{2,3}: with plain distances all three 4-cycles are tight, but only
    // one 0-1 path is shortest under the perturbation, so two survive.
    const auto k23 = fixtures::complete_bipartite(2, 3);
    const auto kt = enumerate_tight_cycles(k23);
    CHECK(kt.size() == 2);
    CHECK(kt.total_length <= k23.n() * cyclomatic_number(k23));
    std::size_t plain = 0;
    for (const auto& edges : simple_cycle_sets(k23))
        plain += tight_by_base_weight(k23, Gf2Vector::from_indices(k23.m(), edges));
    CHECK(plain == 3);
}

TEST_CASE("parallel edges give tight 2-cycles") {
    const Graph g(3, {{0, 1, 1}, {0, 1, 2}, {1, 2, 1}, {2, 0, 1}});
    const auto t = enumerate_tight_cycles(g);
    const auto lists = test::edge_lists(t.cycles);
    CHECK(std::find(lists.begin(), lists.end(), std::vector<EdgeId>{0, 1}) != lists.end());
    CHECK(test::edge_lists(t.cycles) == test::edge_lists(oracle::brute_tight_cycles(g).cycles));
}

TEST_CASE("tight matrix has cycles as columns") {
    const auto g = fixtures::complete_graph(4);
    const auto t = enumerate_tight_cycles(g);
    const auto m = tight_matrix(g, t);
    CHECK(m.rows() == 6);
    CHECK(m.cols() == 4);
    CHECK(rank(m) == 3);
}

TEST_CASE("property: enumeration is complete against exhaustive search") {
    fixtures::Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = fixtures::random_connected_graph(rng, {3, 10, 0, 10, 1, 4});
        const auto d = apsp(g);
        const auto tight = enumerate_tight_cycles(g, d);

        std::vector<std::vector<EdgeId>> expected;
        for (const auto& edges : simple_cycle_sets(g))
            if (is_tight(g, Cycle::from_edges(g, Gf2Vector::from_indices(g.m(), edges)), d)) expected.push_back(edges);
        std::sort(expected.begin(), expected.end());
        CHECK(test::edge_lists(tight.cycles) == expected);
        CHECK(test::edge_lists(tight.cycles) == test::edge_lists(oracle::brute_tight_cycles(g).cycles));
    }
}

TEST_CASE("property: tight set invariants") {
    fixtures::Rng rng(202);
    for (int trial = 0; trial < 80; ++trial) {
        const auto g = fixtures::random_connected_graph(rng, {3, 14, 0, 25, 0, 6});
        const auto t = enumerate_tight_cycles(g);
        std::size_t len = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            CHECK(is_simple_cycle(g, t.cycles[i].edges));
            CHECK(t.cycles[i].weight == g.weight_of(t.cycles[i].edges));
            len += t.cycles[i].length();
            if (i > 0) {
                CHECK(t.cycles[i - 1] < t.cycles[i]);
                CHECK(oracle::perturbed_less(t.cycles[i - 1], t.cycles[i]));
            }
        }
        CHECK(len == t.total_length);
        CHECK(t.total_length <= g.n() * cyclomatic_number(g));
        CHECK(rank(tight_matrix(g, t)) == cyclomatic_number(g));
    }
}
