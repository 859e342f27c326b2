#include "mcb/mcb.hpp"

#include <algorithm>
#include <functional>

#include "mcb/error.hpp"

namespace mcb {

std::string_view engine_name(McbEngine engine) {
    switch (engine) {
    case McbEngine::earliest: return "earliest";
    case McbEngine::depina: return "depina";
    case McbEngine::kavitha: return "kavitha";
    case McbEngine::oracle: return "oracle";
    }
    return "?";
}

std::optional<McbEngine> parse_mcb_engine(std::string_view name) {
    if (name == "earliest") return McbEngine::earliest;
    if (name == "depina") return McbEngine::depina;
    if (name == "kavitha") return McbEngine::kavitha;
    return std::nullopt;
}

namespace {

BasisReport finish(std::vector<Cycle> cycles, McbEngine engine) {
    BasisReport report;
    report.engine = engine;
    for (const auto& c : cycles) report.total_weight = checked_add(report.total_weight, c.weight);
    report.cycles = std::move(cycles);
    return report;
}

// Support vectors start as unit vectors on the non-forest edges; the
// fundamental cycle of each such edge is odd against it, so the first
// search always succeeds.
std::vector<Gf2Vector> initial_support(const Graph& g) {
    const auto in_tree = spanning_forest(g);
    std::vector<Gf2Vector> support;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (!in_tree[e]) support.push_back(Gf2Vector::unit(g.m(), e));
    return support;
}

const Cycle& next_cycle(const TightCycleSet& tight, const Gf2Vector& s) {
    try {
        return min_weight_odd_cycle(tight, s);
    } catch (const PreconditionError& e) {
        throw InvariantViolation(std::string("support vector search failed: ") + e.what());
    }
}

} // namespace

BasisReport mcb_earliest(const Graph& g, const TightCycleSet& tight) {
    const auto t = tight_matrix(g, tight);
    std::vector<Cycle> chosen;
    for (auto j : column_rank_profile(t).indices) chosen.push_back(tight.cycles[j]);
    if (chosen.size() != cyclomatic_number(g))
        throw InvariantViolation("tight-cycle matrix rank " + std::to_string(chosen.size()) + " differs from nu");
    return finish(std::move(chosen), McbEngine::earliest);
}

BasisReport mcb_earliest(const Graph& g) { return mcb_earliest(g, enumerate_tight_cycles(g)); }

const Cycle& min_weight_odd_cycle(const TightCycleSet& tight, const Gf2Vector& s) {
    if (s.none()) throw PreconditionError("min_weight_odd_cycle: support vector is zero");
    for (const auto& c : tight.cycles)
        if (inner_product(c.edges, s)) return c;
    throw InfeasibleSupport("min_weight_odd_cycle: no tight cycle is odd against the support vector");
}

BasisReport mcb_depina(const Graph& g, const TightCycleSet& tight) {
    auto support = initial_support(g);
    const std::size_t nu = support.size();
    std::vector<Cycle> chosen;
    chosen.reserve(nu);
    for (std::size_t i = 0; i < nu; ++i) {
        chosen.push_back(next_cycle(tight, support[i]));
        const auto& ci = chosen.back().edges;
        for (std::size_t j = i + 1; j < nu; ++j)
            if (inner_product(ci, support[j])) support[j] ^= support[i];
    }
    auto report = finish(std::move(chosen), McbEngine::depina);
    report.support = std::move(support);
    return report;
}

BasisReport mcb_depina(const Graph& g) { return mcb_depina(g, enumerate_tight_cycles(g)); }

BasisReport mcb_kavitha(const Graph& g, const TightCycleSet& tight) {
    auto support = initial_support(g);
    const std::size_t nu = support.size();
    std::vector<Cycle> chosen(nu);

    // Entry (a, b) is <cycle lo_c + a, support lo_s + b>.
    auto cross = [&](std::size_t lo_c, std::size_t hi_c, std::size_t lo_s, std::size_t hi_s) {
        Gf2Matrix m(hi_c - lo_c + 1, hi_s - lo_s + 1);
        for (std::size_t b = lo_s; b <= hi_s; ++b)
            for (std::size_t a = lo_c; a <= hi_c; ++a)
                if (inner_product(chosen[a].edges, support[b])) m.set(a - lo_c, b - lo_s);
        return m;
    };

    std::function<void(std::size_t, std::size_t)> solve = [&](std::size_t lo, std::size_t hi) {
        if (lo == hi) {
            chosen[lo] = next_cycle(tight, support[lo]);
            return;
        }
        const std::size_t mid = (lo + hi) / 2;
        solve(lo, mid);

        Gf2Matrix w;
        try {
            w = invert(cross(lo, mid, lo, mid)) * cross(lo, mid, mid + 1, hi);
        } catch (const SingularMatrixError&) {
            throw InvariantViolation("support block C^T S is singular on [" + std::to_string(lo) + ", " +
                                     std::to_string(mid) + "]");
        }
        // S_high += S_low * W makes every high support vector orthogonal to C_lo..C_mid.
        for (std::size_t c = 0; c < w.cols(); ++c)
            for (auto b : w.col(c).ones()) support[mid + 1 + c] ^= support[lo + b];

        solve(mid + 1, hi);
    };
    if (nu > 0) solve(0, nu - 1);

    auto report = finish(std::move(chosen), McbEngine::kavitha);
    report.support = std::move(support);
    return report;
}

BasisReport mcb_kavitha(const Graph& g) { return mcb_kavitha(g, enumerate_tight_cycles(g)); }

BasisReport minimum_cycle_basis(const Graph& g, const TightCycleSet& tight, McbEngine engine) {
    switch (engine) {
    case McbEngine::earliest: return mcb_earliest(g, tight);
    case McbEngine::depina: return mcb_depina(g, tight);
    case McbEngine::kavitha: return mcb_kavitha(g, tight);
    case McbEngine::oracle: break;
    }
    throw PreconditionError("unknown engine");
}

BasisReport minimum_cycle_basis(const Graph& g, McbEngine engine) {
    return minimum_cycle_basis(g, enumerate_tight_cycles(g), engine);
}

bool support_certificate_holds(const BasisReport& report) {
    if (!report.support || report.support->size() != report.cycles.size()) return false;
    const auto& s = *report.support;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!inner_product(report.cycles[i].edges, s[i])) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (inner_product(report.cycles[j].edges, s[i])) return false;
    }
    return true;
}

} // namespace mcb
