#ifndef MCB_MCB_HPP_
#define MCB_MCB_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "mcb/gf2.hpp"
#include "mcb/graph.hpp"
#include "mcb/tight.hpp"

namespace mcb {

/// `oracle` tags brute-force reference results; it is not a selectable engine.
enum class McbEngine { earliest, depina, kavitha, oracle };

std::string_view engine_name(McbEngine engine);
/// Parses "earliest" | "depina" | "kavitha".
std::optional<McbEngine> parse_mcb_engine(std::string_view name);

/**
 * A cycle basis together with how it was obtained. For the support-vector
 * engines, support[i] is the final S_i as an m-length vector; it is zero on
 * the spanning-forest edges.
 */
struct BasisReport {
    std::vector<Cycle> cycles;
    Weight total_weight = 0;
    McbEngine engine = McbEngine::earliest;
    std::optional<std::vector<Gf2Vector>> support;
};

/// Earliest basis of the weight-sorted tight-cycle matrix.
BasisReport mcb_earliest(const Graph& g);
BasisReport mcb_earliest(const Graph& g, const TightCycleSet& tight);

/// First cycle in the sorted tight list with odd inner product against s.
const Cycle& min_weight_odd_cycle(const TightCycleSet& tight, const Gf2Vector& s);

BasisReport mcb_depina(const Graph& g);
BasisReport mcb_depina(const Graph& g, const TightCycleSet& tight);

BasisReport mcb_kavitha(const Graph& g);
BasisReport mcb_kavitha(const Graph& g, const TightCycleSet& tight);

BasisReport minimum_cycle_basis(const Graph& g, McbEngine engine);
BasisReport minimum_cycle_basis(const Graph& g, const TightCycleSet& tight, McbEngine engine);

/// Checks <C_j, S_i> = 0 for j < i and <C_i, S_i> = 1 for every i.
bool support_certificate_holds(const BasisReport& report);

} // namespace mcb

#endif // MCB_MCB_HPP_
