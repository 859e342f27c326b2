#ifndef MCB_GRAPH_HPP_
#define MCB_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcb/gf2.hpp"

namespace mcb {

using Vertex = std::size_t;
using EdgeId = std::size_t;
using Weight = std::uint64_t;

/// a + b, throwing OverflowError instead of wrapping.
Weight checked_add(Weight a, Weight b);

struct Edge {
    Vertex u;
    Vertex v;
    Weight w;

    Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    EdgeId edge;
    Vertex neighbor;
};

/**
 * Weighted undirected multigraph. Edge ids are positions in the construction
 * list and never change; parallel edges are allowed, self-loops are not.
 */
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Incidence> incident(Vertex v) const { return adjacency_.at(v); }

    /// Sum of w over the set edges of an m-length incidence vector.
    Weight weight_of(const Gf2Vector& edge_set) const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/**
 * Weight with an infinitesimal tie-breaker. The tie is the edge set of the
 * path or cycle; comparing it with lex_compare amounts to giving edge i the
 * extra weight 2^-(i+1) * eps, so distinct edge sets never compare equal and
 * the order is additive over disjoint unions.
 */
struct PerturbedWeight {
    Weight base = 0;
    Gf2Vector tie;

    static PerturbedWeight zero(std::size_t m) { return {0, Gf2Vector(m)}; }

    /// Extends by an edge not already present in tie.
    PerturbedWeight plus_edge(EdgeId e, Weight w) const;

    friend std::strong_ordering operator<=>(const PerturbedWeight& a, const PerturbedWeight& b);
    friend bool operator==(const PerturbedWeight&, const PerturbedWeight&) = default;
};

/// Edge-incidence vector of an even subgraph, with its base weight cached.
struct Cycle {
    Gf2Vector edges;
    Weight weight = 0;

    static Cycle from_edges(const Graph& g, Gf2Vector edge_set);

    std::size_t length() const noexcept { return edges.count(); }
    std::vector<EdgeId> edge_list() const { return edges.ones(); }
    PerturbedWeight perturbed() const { return {weight, edges}; }

    /// Perturbed order: base weight first, then edge set as a bit string.
    friend std::strong_ordering operator<=>(const Cycle& a, const Cycle& b);
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// True when every vertex touched by edge_set has even degree in it.
bool is_even_subgraph(const Graph& g, const Gf2Vector& edge_set);

/// Shortest-path tree rooted at one vertex under the perturbed order.
struct SpTree {
    Vertex root = 0;
    std::vector<std::optional<PerturbedWeight>> dist;
    std::vector<std::optional<EdgeId>> parent_edge;

    bool reachable(Vertex v) const { return dist.at(v).has_value(); }
    /// Edges on the tree path from v back to the root, starting at v.
    std::vector<EdgeId> path_edges(const Graph& g, Vertex v) const;
    /// Vertices on the tree path from v back to the root, v first.
    std::vector<Vertex> path_vertices(const Graph& g, Vertex v) const;
};

SpTree dijkstra(const Graph& g, Vertex root);

/// One shortest-path tree per root; dist(u, v) reads tree u.
struct AllPairs {
    std::vector<SpTree> trees;

    const std::optional<PerturbedWeight>& dist(Vertex u, Vertex v) const { return trees.at(u).dist.at(v); }
};

AllPairs apsp(const Graph& g);

std::size_t connected_components(const Graph& g);
std::size_t cyclomatic_number(const Graph& g);

/// Marks the edges of a BFS spanning forest (lowest vertex roots first).
std::vector<bool> spanning_forest(const Graph& g);

/// Text format: "graph <n> <m>" then m lines "e <u> <v> <w>"; '#' starts a comment line.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

} // namespace mcb

#endif // MCB_GRAPH_HPP_
