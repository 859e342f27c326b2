#include "mcb/tight.hpp"

#include <algorithm>
#include <unordered_map>

#include "mcb/error.hpp"

namespace mcb {

CycleWalk walk_cycle(const Graph& g, const Gf2Vector& edge_set) {
    if (edge_set.size() != g.m()) throw DimensionError("walk_cycle: vector length differs from edge count");
    const auto edges = edge_set.ones();
    if (edges.size() < 2) throw PreconditionError("walk_cycle: fewer than two edges");

    std::unordered_map<Vertex, std::vector<EdgeId>> around;
    for (auto e : edges) {
        around[g.edge(e).u].push_back(e);
        around[g.edge(e).v].push_back(e);
    }
    for (const auto& [v, inc] : around)
        if (inc.size() != 2) throw PreconditionError("walk_cycle: vertex " + std::to_string(v) + " does not have degree 2");

    CycleWalk walk;
    EdgeId e = edges.front();
    Vertex v = std::min(g.edge(e).u, g.edge(e).v);
    const Vertex start = v;
    do {
        walk.vertices.push_back(v);
        walk.edges.push_back(e);
        v = g.edge(e).other(v);
        const auto& inc = around[v];
        e = inc[0] == e ? inc[1] : inc[0];
    } while (v != start);

    if (walk.edges.size() != edges.size()) throw PreconditionError("walk_cycle: edge set is not connected");
    return walk;
}

bool is_simple_cycle(const Graph& g, const Gf2Vector& edge_set) {
    try {
        walk_cycle(g, edge_set);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

namespace {

// For each reachable vertex, the child of the root its tree path passes through.
// The root maps to itself.
std::vector<Vertex> root_branches(const Graph& g, const SpTree& tree) {
    constexpr auto unset = Gf2Vector::npos;
    std::vector<Vertex> branch(g.n(), unset);
    branch[tree.root] = tree.root;
    std::vector<Vertex> chain;
    for (Vertex x = 0; x < g.n(); ++x) {
        if (!tree.reachable(x) || branch[x] != unset) continue;
        chain.clear();
        Vertex k = x;
        while (branch[k] == unset) {
            chain.push_back(k);
            k = g.edge(*tree.parent_edge[k]).other(k);
        }
        const Vertex value = k == tree.root ? chain.back() : branch[k];
        for (auto c : chain) branch[c] = value;
    }
    return branch;
}

} // namespace

std::vector<Cycle> horton_candidates(const Graph& g, const AllPairs& trees) {
    std::vector<Cycle> out;
    for (const auto& tree : trees.trees) {
        const auto branch = root_branches(g, tree);
        const Vertex v = tree.root;
        for (EdgeId e = 0; e < g.m(); ++e) {
            const auto& [x, y, w] = g.edge(e);
            if (!tree.reachable(x) || !tree.reachable(y)) continue;
            if (tree.parent_edge[x] == e || tree.parent_edge[y] == e) continue;
            // Tree paths from a common root meet exactly along the path to their
            // lowest common ancestor, which is the root iff the branches differ.
            if (x != v && y != v && branch[x] == branch[y]) continue;

            const auto& dx = *tree.dist[x];
            const auto& dy = *tree.dist[y];
            Cycle c{dx.tie, checked_add(checked_add(dx.base, dy.base), w)};
            c.edges |= dy.tie;
            c.edges.set(e);
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_tight(const Graph& g, const Cycle& c, const AllPairs& dist) {
    const auto walk = walk_cycle(g, c.edges);
    const std::size_t k = walk.vertices.size();
    for (std::size_t i = 0; i < k; ++i) {
        auto arc = PerturbedWeight::zero(g.m());
        for (std::size_t j = i + 1; j < k; ++j) {
            const EdgeId e = walk.edges[j - 1];
            arc = arc.plus_edge(e, g.edge(e).w);
            const auto& d = dist.dist(walk.vertices[i], walk.vertices[j]);
            if (!d) return false;
            // d never exceeds either arc, so tightness means it equals one of them.
            if (*d == arc) continue;
            const PerturbedWeight other{c.weight - arc.base, c.edges ^ arc.tie};
            if (*d != other) return false;
        }
    }
    return true;
}

TightCycleSet enumerate_tight_cycles(const Graph& g, const AllPairs& trees) {
    TightCycleSet set;
    for (auto& c : horton_candidates(g, trees)) {
        if (!is_tight(g, c, trees)) continue;
        set.total_length += c.length();
        set.cycles.push_back(std::move(c));
    }
    return set;
}

TightCycleSet enumerate_tight_cycles(const Graph& g) { return enumerate_tight_cycles(g, apsp(g)); }

Gf2Matrix tight_matrix(const Graph& g, const TightCycleSet& tight) {
    Gf2Matrix t(g.m(), 0);
    for (const auto& c : tight.cycles) t.push_back(c.edges);
    return t;
}

} // namespace mcb
