#ifndef MCB_MHB_HPP_
#define MCB_MHB_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "mcb/complex.hpp"
#include "mcb/mcb.hpp"

namespace mcb {

enum class MhbEngine { tight, via_mcb, oracle };

std::string_view engine_name(MhbEngine engine);
/// Parses "tight" | "via-mcb".
std::optional<MhbEngine> parse_mhb_engine(std::string_view name);

struct HomologyBasisReport {
    std::vector<Cycle> cycles;
    Weight total_weight = 0;
    /// Indices of the boundary-matrix columns picked by the rank profile (a basis of B1).
    std::vector<std::size_t> boundary_profile;
    MhbEngine engine = MhbEngine::tight;
    /// The cycle basis the result was drawn from (via_mcb only).
    std::optional<BasisReport> source_mcb;
};

/// Rank profile of [d2 | sorted tight cycles of the skeleton].
HomologyBasisReport mhb_tight(const SimplicialComplex& k);

/// Rank profile of [d2 | weight-sorted minimum cycle basis of the skeleton].
HomologyBasisReport mhb_via_mcb(const SimplicialComplex& k, McbEngine mcb_engine = McbEngine::earliest);

HomologyBasisReport minimum_homology_basis(const SimplicialComplex& k, MhbEngine engine,
                                           McbEngine mcb_engine = McbEngine::earliest);

/// z1 + z2 is a boundary. Both inputs must be cycles of the skeleton.
bool homologous(const SimplicialComplex& k, const Cycle& z1, const Cycle& z2);

} // namespace mcb

#endif // MCB_MHB_HPP_
