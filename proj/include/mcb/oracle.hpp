#ifndef MCB_ORACLE_HPP_
#define MCB_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "mcb/complex.hpp"
#include "mcb/graph.hpp"
#include "mcb/mcb.hpp"
#include "mcb/mhb.hpp"
#include "mcb/tight.hpp"

// Brute-force references for small instances. Nothing here calls into the
// tight-cycle, cycle-basis or homology-basis engines: spanning trees, path
// lengths, cycle enumeration and the perturbed order are all re-derived.
// Column elimination (ColumnEchelon) is the one shared primitive.
namespace mcb::oracle {

/// Bumped whenever oracle output for a fixed input could change.
inline constexpr int kVersion = 1;

struct OracleBudget {
    std::size_t max_cycle_rank = 16;
    std::size_t max_vertices = 12;
};

/// All 2^nu - 1 nonzero elements of the cycle space.
std::vector<Cycle> all_cycle_vectors(const Graph& g, const OracleBudget& budget = {});

/// Matroid greedy over the whole cycle space in perturbed order.
BasisReport brute_mcb(const Graph& g, const OracleBudget& budget = {});

/// Greedy over the cycle space, keeping cycles independent modulo boundaries.
HomologyBasisReport brute_mhb(const SimplicialComplex& k, const OracleBudget& budget = {});

/// Every simple cycle found by backtracking, filtered by the pairwise definition.
TightCycleSet brute_tight_cycles(const Graph& g, const OracleBudget& budget = {});

/// Orders two cycles the way the production perturbed order should, via exact
/// big-integer perturbations. Exposed for cross-checking.
bool perturbed_less(const Cycle& a, const Cycle& b);

} // namespace mcb::oracle

#endif // MCB_ORACLE_HPP_
