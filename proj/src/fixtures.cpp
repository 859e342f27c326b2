#include "mcb/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "mcb/error.hpp"

namespace mcb::fixtures {

namespace {

template <class T>
void shuffle(Rng& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

std::vector<Edge> unit_edges(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v, 1});
    return edges;
}

// Edges of every listed triangle, each once, in first-seen order.
std::vector<Edge> closure_edges(const std::vector<Triangle>& triangles) {
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto t : triangles) {
        std::sort(t.begin(), t.end());
        for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}})
            if (seen.insert({a, b}).second) edges.push_back({a, b, 1});
    }
    return edges;
}

std::vector<Weight> sorted_weights(const std::vector<Cycle>& cycles) {
    std::vector<Weight> w;
    for (const auto& c : cycles) w.push_back(c.weight);
    std::sort(w.begin(), w.end());
    return w;
}

// Random simple graph on n vertices: spanning forest over `parts` blocks plus extra edges.
std::vector<Edge> random_edges(Rng& rng, std::size_t n, std::size_t parts, std::size_t extra, Weight min_w,
                               Weight max_w) {
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), 0);
    shuffle(rng, label);

    // Block b holds positions [start[b], start[b+1]).
    std::vector<std::size_t> start{0};
    if (parts == 2) start.push_back(n / 2);
    start.push_back(n);

    std::set<std::pair<Vertex, Vertex>> present;
    std::vector<Edge> edges;
    auto add = [&](Vertex a, Vertex b) {
        if (a == b || !present.insert({std::min(a, b), std::max(a, b)}).second) return false;
        edges.push_back({a, b, rng.between(min_w, max_w)});
        return true;
    };
    for (std::size_t b = 0; b + 1 < start.size(); ++b)
        for (std::size_t i = start[b] + 1; i < start[b + 1]; ++i)
            add(label[i], label[start[b] + rng.below(i - start[b])]);

    std::size_t possible = 0;
    for (std::size_t b = 0; b + 1 < start.size(); ++b) {
        const auto size = start[b + 1] - start[b];
        possible += size * (size - 1) / 2 - (size - 1);
    }
    extra = std::min(extra, possible);
    while (extra > 0) {
        const std::size_t b = rng.below(start.size() - 1);
        const auto size = start[b + 1] - start[b];
        if (size < 2) continue;
        if (add(label[start[b] + rng.below(size)], label[start[b] + rng.below(size)])) --extra;
    }
    shuffle(rng, edges);
    return edges;
}

} // namespace

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n, 1});
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) edges.push_back({u, a + v, 1});
    return Graph(a + b, std::move(edges));
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5, 1});
    for (Vertex i = 0; i < 5; ++i) edges.push_back({i, i + 5, 1});
    for (Vertex i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5, 1});
    return Graph(10, std::move(edges));
}

Graph two_disjoint_triangles() { return Graph(6, unit_edges({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})); }

Graph small_tree() { return Graph(5, unit_edges({{0, 1}, {1, 2}, {2, 3}, {1, 4}})); }

SimplicialComplex hollow_triangle() { return SimplicialComplex(3, unit_edges({{0, 1}, {1, 2}, {0, 2}}), {}); }

SimplicialComplex filled_triangle() {
    return SimplicialComplex(3, unit_edges({{0, 1}, {1, 2}, {0, 2}}), {Triangle{0, 1, 2}});
}

SimplicialComplex mobius_strip() {
    std::vector<Triangle> t;
    for (Vertex i = 0; i < 5; ++i) t.push_back({i, (i + 1) % 5, (i + 2) % 5});
    auto edges = closure_edges(t);
    return SimplicialComplex(5, std::move(edges), std::move(t));
}

SimplicialComplex torus7() {
    std::vector<Triangle> t;
    for (Vertex i = 0; i < 7; ++i) {
        t.push_back({i, (i + 1) % 7, (i + 3) % 7});
        t.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    auto edges = closure_edges(t);
    return SimplicialComplex(7, std::move(edges), std::move(t));
}

SimplicialComplex annulus() {
    std::vector<Triangle> t;
    for (Vertex i = 0; i < 3; ++i) {
        const Vertex j = (i + 1) % 3;
        t.push_back({i, j, 3 + i});
        t.push_back({j, 3 + i, 3 + j});
    }
    auto edges = unit_edges({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    for (const auto& e : closure_edges(t)) {
        const bool known = std::any_of(edges.begin(), edges.end(), [&](const Edge& f) {
            return std::min(f.u, f.v) == std::min(e.u, e.v) && std::max(f.u, f.v) == std::max(e.u, e.v);
        });
        if (!known) edges.push_back(e);
    }
    return SimplicialComplex(6, std::move(edges), std::move(t));
}

Graph random_connected_graph(Rng& rng, const RandomGraphSpec& spec) {
    const auto n = static_cast<std::size_t>(rng.between(spec.min_n, spec.max_n));
    const auto extra = static_cast<std::size_t>(rng.between(spec.min_extra, spec.max_extra));
    return Graph(n, random_edges(rng, n, 1, extra, spec.min_w, spec.max_w));
}

SimplicialComplex random_complex(Rng& rng, std::size_t max_n, std::size_t max_extra) {
    const auto n = static_cast<std::size_t>(rng.between(3, max_n));
    const std::size_t parts = n >= 6 && rng.chance(1, 5) ? 2 : 1;
    const auto extra = static_cast<std::size_t>(rng.between(0, max_extra));
    auto edges = random_edges(rng, n, parts, extra, 1, 8);

    std::set<std::pair<Vertex, Vertex>> present;
    for (const auto& e : edges) present.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    auto has = [&](Vertex a, Vertex b) { return present.count({a, b}) > 0; };

    std::vector<Triangle> triangles;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (has(a, b) && has(a, c) && has(b, c) && rng.chance(1, 2)) triangles.push_back({a, b, c});
    shuffle(rng, triangles);
    return SimplicialComplex(n, std::move(edges), std::move(triangles));
}

// ---------------------------------------------------------------------------

nlohmann::ordered_json expected_for(const Graph& g, const oracle::OracleBudget& budget) {
    const auto mcb = oracle::brute_mcb(g, budget);
    nlohmann::ordered_json j;
    j["kind"] = "graph";
    j["n"] = g.n();
    j["m"] = g.m();
    j["components"] = connected_components(g);
    j["nu"] = mcb.cycles.size();
    j["mcb_total_weight"] = mcb.total_weight;
    j["mcb_weights"] = sorted_weights(mcb.cycles);
    if (g.n() <= budget.max_vertices) {
        const auto tight = oracle::brute_tight_cycles(g, budget);
        j["tight_cycle_count"] = tight.size();
        j["tight_total_length"] = tight.total_length;
    }
    return j;
}

nlohmann::ordered_json expected_for(const SimplicialComplex& k, const oracle::OracleBudget& budget) {
    const auto g = skeleton(k);
    const auto mhb = oracle::brute_mhb(k, budget);
    const auto mcb = oracle::brute_mcb(g, budget);
    nlohmann::ordered_json j;
    j["kind"] = "complex";
    j["n"] = k.n();
    j["m"] = k.m();
    j["triangles"] = k.triangle_count();
    j["beta0"] = connected_components(g);
    j["cycle_rank"] = mcb.cycles.size();
    j["boundary_rank"] = mhb.boundary_profile.size();
    j["beta1"] = mhb.cycles.size();
    j["mhb_total_weight"] = mhb.total_weight;
    j["mhb_weights"] = sorted_weights(mhb.cycles);
    j["mcb_total_weight"] = mcb.total_weight;
    return j;
}

namespace {

Fixture make(const std::string& name, const Graph& g, const oracle::OracleBudget& budget) {
    std::ostringstream text;
    write_graph(text, g);
    Fixture f{name, name + ".grf", text.str(), {}};
    f.manifest["name"] = name;
    f.manifest["input"] = f.input_file;
    f.manifest["oracle_version"] = oracle::kVersion;
    f.manifest["expected"] = expected_for(g, budget);
    return f;
}

Fixture make(const std::string& name, const SimplicialComplex& k, const oracle::OracleBudget& budget) {
    std::ostringstream text;
    write_complex(text, k);
    Fixture f{name, name + ".scx", text.str(), {}};
    f.manifest["name"] = name;
    f.manifest["input"] = f.input_file;
    f.manifest["oracle_version"] = oracle::kVersion;
    f.manifest["expected"] = expected_for(k, budget);
    return f;
}

std::string numbered(const char* stem, std::size_t i) {
    std::string digits = std::to_string(i);
    if (digits.size() < 2) digits.insert(0, "0");
    return std::string(stem) + digits;
}

} // namespace

std::vector<Fixture> generate_fixtures(std::uint64_t seed, const oracle::OracleBudget& budget) {
    std::vector<Fixture> out;
    out.push_back(make("k4", complete_graph(4), budget));
    out.push_back(make("c5", cycle_graph(5), budget));
    out.push_back(make("petersen", petersen(), budget));
    out.push_back(make("k23", complete_bipartite(2, 3), budget));
    out.push_back(make("two_triangles", two_disjoint_triangles(), budget));
    out.push_back(make("tree", small_tree(), budget));
    out.push_back(make("hollow_triangle", hollow_triangle(), budget));
    out.push_back(make("filled_triangle", filled_triangle(), budget));
    out.push_back(make("mobius", mobius_strip(), budget));
    out.push_back(make("torus", torus7(), budget));
    out.push_back(make("annulus", annulus(), budget));

    Rng rng(seed);
    for (std::size_t i = 0; i < 20; ++i) out.push_back(make(numbered("random_graph_", i), random_connected_graph(rng, {}), budget));
    for (std::size_t i = 0; i < 10; ++i) out.push_back(make(numbered("random_complex_", i), random_complex(rng), budget));
    return out;
}

void write_fixtures(const std::filesystem::path& dir, const std::vector<Fixture>& fixtures) {
    std::filesystem::create_directories(dir);
    for (const auto& f : fixtures) {
        std::ofstream(dir / f.input_file, std::ios::binary) << f.input_text;
        std::ofstream(dir / (f.name + ".json"), std::ios::binary) << f.manifest.dump(2) << '\n';
    }
}

} // namespace mcb::fixtures
