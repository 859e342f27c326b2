#include "mcb/mhb.hpp"

#include <algorithm>

#include "mcb/error.hpp"
#include "mcb/tight.hpp"

namespace mcb {

std::string_view engine_name(MhbEngine engine) {
    switch (engine) {
    case MhbEngine::tight: return "tight";
    case MhbEngine::via_mcb: return "via-mcb";
    case MhbEngine::oracle: return "oracle";
    }
    return "?";
}

std::optional<MhbEngine> parse_mhb_engine(std::string_view name) {
    if (name == "tight") return MhbEngine::tight;
    if (name == "via-mcb") return MhbEngine::via_mcb;
    return std::nullopt;
}

namespace {

// Profiles [d2 | candidates] and keeps the candidates that land in the profile.
// Candidates must already be in perturbed-weight order.
HomologyBasisReport select_homology_basis(const SimplicialComplex& k, const std::vector<Cycle>& candidates,
                                          MhbEngine engine) {
    const auto profile = homology_profile(k);
    auto z = boundary_matrix(k, 2);
    const std::size_t boundary_cols = z.cols();
    for (const auto& c : candidates) z.push_back(c.edges);

    HomologyBasisReport report;
    report.engine = engine;
    for (auto j : column_rank_profile(z).indices) {
        if (j < boundary_cols) {
            report.boundary_profile.push_back(j);
        } else {
            report.cycles.push_back(candidates[j - boundary_cols]);
            report.total_weight = checked_add(report.total_weight, report.cycles.back().weight);
        }
    }
    if (report.boundary_profile.size() != profile.boundary_rank || report.cycles.size() != profile.beta1) {
        throw InvariantViolation("rank profile picked " + std::to_string(report.cycles.size()) +
                                 " cycles for beta1 = " + std::to_string(profile.beta1));
    }
    return report;
}

} // namespace

HomologyBasisReport mhb_tight(const SimplicialComplex& k) {
    require_valid(k);
    const auto g = skeleton(k);
    return select_homology_basis(k, enumerate_tight_cycles(g).cycles, MhbEngine::tight);
}

HomologyBasisReport mhb_via_mcb(const SimplicialComplex& k, McbEngine mcb_engine) {
    require_valid(k);
    const auto g = skeleton(k);
    auto mcb = minimum_cycle_basis(g, mcb_engine);
    auto sorted = mcb.cycles;
    std::sort(sorted.begin(), sorted.end());
    auto report = select_homology_basis(k, sorted, MhbEngine::via_mcb);
    report.source_mcb = std::move(mcb);
    return report;
}

HomologyBasisReport minimum_homology_basis(const SimplicialComplex& k, MhbEngine engine, McbEngine mcb_engine) {
    switch (engine) {
    case MhbEngine::tight: return mhb_tight(k);
    case MhbEngine::via_mcb: return mhb_via_mcb(k, mcb_engine);
    case MhbEngine::oracle: break;
    }
    throw PreconditionError("unknown engine");
}

bool homologous(const SimplicialComplex& k, const Cycle& z1, const Cycle& z2) {
    const auto g = skeleton(k);
    if (!is_even_subgraph(g, z1.edges) || !is_even_subgraph(g, z2.edges))
        throw PreconditionError("homologous: inputs must be cycles of the 1-skeleton");
    return in_span(boundary_matrix(k, 2), z1.edges ^ z2.edges).has_value();
}

} // namespace mcb
