#ifndef MCB_TIGHT_HPP_
#define MCB_TIGHT_HPP_

#include <cstddef>
#include <vector>

#include "mcb/gf2.hpp"
#include "mcb/graph.hpp"

namespace mcb {

/// Tight cycles of a graph in strictly increasing perturbed order.
struct TightCycleSet {
    std::vector<Cycle> cycles;
    std::size_t total_length = 0;

    std::size_t size() const noexcept { return cycles.size(); }
};

/// Cyclic traversal of a simple cycle: edges[i] joins vertices[i] and vertices[i+1 mod k].
struct CycleWalk {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
};

/// Throws PreconditionError unless the edge set is one connected cycle with all degrees 2.
CycleWalk walk_cycle(const Graph& g, const Gf2Vector& edge_set);
bool is_simple_cycle(const Graph& g, const Gf2Vector& edge_set);

/**
 * Cycles SP(v,x) + (x,y) + SP(y,v) over every root v and edge (x,y) whose two
 * tree paths meet only at v. Deduplicated and sorted in perturbed order.
 */
std::vector<Cycle> horton_candidates(const Graph& g, const AllPairs& trees);

/// True iff one of the two arcs between every vertex pair is the shortest path.
bool is_tight(const Graph& g, const Cycle& c, const AllPairs& dist);

TightCycleSet enumerate_tight_cycles(const Graph& g);
TightCycleSet enumerate_tight_cycles(const Graph& g, const AllPairs& trees);

/// The m x |T| matrix with the tight cycles as columns, in list order.
Gf2Matrix tight_matrix(const Graph& g, const TightCycleSet& tight);

} // namespace mcb

#endif // MCB_TIGHT_HPP_
