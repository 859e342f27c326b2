#include "mcb/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <utility>

#include "mcb/error.hpp"
#include "text_io.hpp"

namespace mcb {

Weight checked_add(Weight a, Weight b) {
    if (a > std::numeric_limits<Weight>::max() - b) throw OverflowError("edge weight sum overflows 64 bits");
    return a + b;
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adjacency_(n) {
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const auto& [u, v, w] = edges_[e];
        if (u >= n_ || v >= n_)
            throw PreconditionError("edge " + std::to_string(e) + " has an endpoint outside 0.." + std::to_string(n_));
        if (u == v) throw PreconditionError("edge " + std::to_string(e) + " is a self-loop");
        adjacency_[u].push_back({e, v});
        adjacency_[v].push_back({e, u});
    }
}

Weight Graph::weight_of(const Gf2Vector& edge_set) const {
    if (edge_set.size() != m()) throw DimensionError("weight_of: vector length differs from edge count");
    Weight total = 0;
    for (auto e : edge_set.ones()) total = checked_add(total, edges_[e].w);
    return total;
}

// ---------------------------------------------------------------------------

PerturbedWeight PerturbedWeight::plus_edge(EdgeId e, Weight w) const {
    PerturbedWeight out{checked_add(base, w), tie};
    out.tie.set(e);
    return out;
}

std::strong_ordering operator<=>(const PerturbedWeight& a, const PerturbedWeight& b) {
    if (auto c = a.base <=> b.base; c != 0) return c;
    return lex_compare(a.tie, b.tie);
}

Cycle Cycle::from_edges(const Graph& g, Gf2Vector edge_set) {
    const Weight w = g.weight_of(edge_set);
    return Cycle{std::move(edge_set), w};
}

std::strong_ordering operator<=>(const Cycle& a, const Cycle& b) {
    if (auto c = a.weight <=> b.weight; c != 0) return c;
    return lex_compare(a.edges, b.edges);
}

bool is_even_subgraph(const Graph& g, const Gf2Vector& edge_set) {
    if (edge_set.size() != g.m()) return false;
    std::vector<bool> odd(g.n(), false);
    for (auto e : edge_set.ones()) {
        odd[g.edge(e).u] = !odd[g.edge(e).u];
        odd[g.edge(e).v] = !odd[g.edge(e).v];
    }
    return std::none_of(odd.begin(), odd.end(), [](bool b) { return b; });
}

// ---------------------------------------------------------------------------

std::vector<EdgeId> SpTree::path_edges(const Graph& g, Vertex v) const {
    std::vector<EdgeId> out;
    for (Vertex x = v; parent_edge.at(x); x = g.edge(*parent_edge[x]).other(x)) out.push_back(*parent_edge[x]);
    return out;
}

std::vector<Vertex> SpTree::path_vertices(const Graph& g, Vertex v) const {
    std::vector<Vertex> out{v};
    for (Vertex x = v; parent_edge.at(x);) {
        x = g.edge(*parent_edge[x]).other(x);
        out.push_back(x);
    }
    return out;
}

SpTree dijkstra(const Graph& g, Vertex root) {
    if (root >= g.n()) throw PreconditionError("dijkstra: root out of range");

    SpTree tree;
    tree.root = root;
    tree.dist.assign(g.n(), std::nullopt);
    tree.parent_edge.assign(g.n(), std::nullopt);

    struct Entry {
        PerturbedWeight key;
        Vertex v;
        EdgeId via;
    };
    auto later = [](const Entry& a, const Entry& b) { return a.key > b.key; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);

    std::vector<bool> settled(g.n(), false);
    tree.dist[root] = PerturbedWeight::zero(g.m());
    queue.push({*tree.dist[root], root, 0});

    while (!queue.empty()) {
        Entry top = queue.top();
        queue.pop();
        if (settled[top.v]) continue;
        settled[top.v] = true;
        if (top.v != root) {
            tree.dist[top.v] = std::move(top.key);
            tree.parent_edge[top.v] = top.via;
        }
        const auto& here = *tree.dist[top.v];
        for (const auto& [e, next] : g.incident(top.v)) {
            if (settled[next]) continue;
            // e cannot already lie on the path to top.v: that would make next an
            // ancestor of top.v and thus settled.
            auto candidate = here.plus_edge(e, g.edge(e).w);
            if (tree.dist[next] && !(candidate < *tree.dist[next])) continue;
            tree.dist[next] = candidate;
            queue.push({std::move(candidate), next, e});
        }
    }
    return tree;
}

AllPairs apsp(const Graph& g) {
    AllPairs all;
    all.trees.reserve(g.n());
    for (Vertex r = 0; r < g.n(); ++r) all.trees.push_back(dijkstra(g, r));
    return all;
}

// ---------------------------------------------------------------------------

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

} // namespace

std::size_t connected_components(const Graph& g) {
    DisjointSets sets(g.n());
    std::size_t components = g.n();
    for (const auto& e : g.edges())
        if (sets.unite(e.u, e.v)) --components;
    return components;
}

std::size_t cyclomatic_number(const Graph& g) { return g.m() + connected_components(g) - g.n(); }

std::vector<bool> spanning_forest(const Graph& g) {
    std::vector<bool> in_tree(g.m(), false);
    std::vector<bool> seen(g.n(), false);
    std::queue<Vertex> frontier;
    for (Vertex r = 0; r < g.n(); ++r) {
        if (seen[r]) continue;
        seen[r] = true;
        frontier.push(r);
        while (!frontier.empty()) {
            const Vertex x = frontier.front();
            frontier.pop();
            for (const auto& [e, y] : g.incident(x)) {
                if (seen[y]) continue;
                seen[y] = true;
                in_tree[e] = true;
                frontier.push(y);
            }
        }
    }
    return in_tree;
}

// ---------------------------------------------------------------------------

Graph parse_graph(std::istream& in) {
    const auto lines = detail::tokenize(in);
    if (lines.empty()) throw ParseError(1, "empty input, expected header 'graph <n> <m>'");

    const auto& header = lines.front();
    if (header.tokens.front() != "graph") throw ParseError(header.number, "expected header 'graph <n> <m>'");
    detail::expect_arity(header, 3);
    const auto n = detail::parse_uint(header, 1, "vertex count");
    const auto m = detail::parse_uint(header, 2, "edge count");

    std::vector<Edge> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        if (line.tokens.front() != "e") throw ParseError(line.number, "expected edge line 'e <u> <v> <w>'");
        detail::expect_arity(line, 4);
        const auto u = detail::parse_uint(line, 1, "vertex id");
        const auto v = detail::parse_uint(line, 2, "vertex id");
        const auto w = detail::parse_uint(line, 3, "weight");
        if (u >= n || v >= n) throw ParseError(line.number, "vertex id out of range 0.." + std::to_string(n - 1));
        if (u == v) throw ParseError(line.number, "self-loop on vertex " + std::to_string(u));
        edges.push_back({u, v, w});
    }
    if (edges.size() != m) {
        throw ParseError(header.number, "header declares " + std::to_string(m) + " edges, found " +
                                            std::to_string(edges.size()));
    }
    return Graph(n, std::move(edges));
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.n() << ' ' << g.m() << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

} // namespace mcb
