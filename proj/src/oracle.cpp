#include "mcb/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>

#include "mcb/error.hpp"

namespace mcb::oracle {

namespace {

// Arbitrary-precision natural number, little-endian 32-bit limbs, no leading zeros.
struct BigNat {
    std::vector<std::uint32_t> limbs;

    static BigNat power_of_two(std::size_t k) {
        BigNat out;
        out.limbs.assign(k / 32 + 1, 0);
        out.limbs.back() = std::uint32_t{1} << (k % 32);
        return out;
    }

    BigNat& operator+=(const BigNat& o) {
        if (limbs.size() < o.limbs.size()) limbs.resize(o.limbs.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs.size(); ++i) {
            const std::uint64_t sum = carry + limbs[i] + (i < o.limbs.size() ? o.limbs[i] : 0);
            limbs[i] = static_cast<std::uint32_t>(sum);
            carry = sum >> 32;
        }
        if (carry) limbs.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    friend bool operator<(const BigNat& a, const BigNat& b) {
        if (a.limbs.size() != b.limbs.size()) return a.limbs.size() < b.limbs.size();
        for (std::size_t i = a.limbs.size(); i-- > 0;)
            if (a.limbs[i] != b.limbs[i]) return a.limbs[i] < b.limbs[i];
        return false;
    }
    friend bool operator==(const BigNat&, const BigNat&) = default;
};

// Base weight plus an exact perturbation: edge i contributes 2^(m-1-i) units
// of an infinitesimal. Sums over walks stay exact, repeated edges included.
struct Key {
    Weight base = 0;
    BigNat eps;

    friend bool operator<(const Key& a, const Key& b) {
        if (a.base != b.base) return a.base < b.base;
        return a.eps < b.eps;
    }
    friend bool operator==(const Key&, const Key&) = default;
    Key& operator+=(const Key& o) {
        base = checked_add(base, o.base);
        eps += o.eps;
        return *this;
    }
};

Key edge_key(const Graph& g, EdgeId e) { return {g.edge(e).w, BigNat::power_of_two(g.m() - 1 - e)}; }

Key set_key(const Graph& g, const Gf2Vector& edges) {
    Key k;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (edges.test(e)) k += edge_key(g, e);
    return k;
}

std::size_t component_count(const Graph& g) {
    std::vector<bool> seen(g.n(), false);
    std::size_t count = 0;
    for (Vertex r = 0; r < g.n(); ++r) {
        if (seen[r]) continue;
        ++count;
        std::vector<Vertex> stack{r};
        seen[r] = true;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (const auto& inc : g.incident(x))
                if (!seen[inc.neighbor]) {
                    seen[inc.neighbor] = true;
                    stack.push_back(inc.neighbor);
                }
        }
    }
    return count;
}

// Fundamental cycles of a depth-first spanning forest.
std::vector<Gf2Vector> fundamental_cycles(const Graph& g) {
    std::vector<std::optional<EdgeId>> parent(g.n());
    std::vector<std::size_t> depth(g.n(), 0);
    std::vector<bool> seen(g.n(), false);
    std::vector<bool> tree_edge(g.m(), false);

    for (Vertex r = 0; r < g.n(); ++r) {
        if (seen[r]) continue;
        seen[r] = true;
        std::vector<Vertex> stack{r};
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (const auto& [e, y] : g.incident(x)) {
                if (seen[y]) continue;
                seen[y] = true;
                parent[y] = e;
                depth[y] = depth[x] + 1;
                tree_edge[e] = true;
                stack.push_back(y);
            }
        }
    }

    std::vector<Gf2Vector> out;
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (tree_edge[e]) continue;
        Gf2Vector c = Gf2Vector::unit(g.m(), e);
        Vertex a = g.edge(e).u;
        Vertex b = g.edge(e).v;
        auto up = [&](Vertex& x) {
            c.flip(*parent[x]);
            x = g.edge(*parent[x]).other(x);
        };
        while (depth[a] > depth[b]) up(a);
        while (depth[b] > depth[a]) up(b);
        while (a != b) {
            up(a);
            up(b);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::pair<Key, Cycle>> keyed_sorted(const Graph& g, std::vector<Cycle> cycles) {
    std::vector<std::pair<Key, Cycle>> keyed;
    keyed.reserve(cycles.size());
    for (auto& c : cycles) keyed.emplace_back(set_key(g, c.edges), std::move(c));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return keyed;
}

} // namespace

bool perturbed_less(const Cycle& a, const Cycle& b) {
    if (a.edges.size() != b.edges.size()) throw DimensionError("perturbed_less: cycles from different graphs");
    const std::size_t m = a.edges.size();
    auto key = [m](const Cycle& c) {
        Key k{c.weight, {}};
        for (std::size_t e = 0; e < m; ++e)
            if (c.edges.test(e)) k.eps += BigNat::power_of_two(m - 1 - e);
        return k;
    };
    return key(a) < key(b);
}

std::vector<Cycle> all_cycle_vectors(const Graph& g, const OracleBudget& budget) {
    const auto basis = fundamental_cycles(g);
    const std::size_t nu = basis.size();
    if (nu != g.m() + component_count(g) - g.n()) throw InvariantViolation("oracle: fundamental cycle count");
    if (nu > budget.max_cycle_rank)
        throw BudgetExceeded("cycle rank " + std::to_string(nu) + " exceeds oracle budget " +
                             std::to_string(budget.max_cycle_rank));

    std::vector<Cycle> out;
    out.reserve((std::size_t{1} << nu) - 1);
    Gf2Vector current(g.m());
    // Gray code: step i flips the basis element at the lowest set bit of i.
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << nu); ++i) {
        current ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        out.push_back(Cycle::from_edges(g, current));
    }
    return out;
}

BasisReport brute_mcb(const Graph& g, const OracleBudget& budget) {
    const auto keyed = keyed_sorted(g, all_cycle_vectors(g, budget));
    const std::size_t nu = g.m() + component_count(g) - g.n();

    BasisReport report;
    report.engine = McbEngine::oracle;
    ColumnEchelon echelon(g.m());
    for (const auto& [key, c] : keyed) {
        if (report.cycles.size() == nu) break;
        if (!echelon.insert(c.edges)) continue;
        report.cycles.push_back(c);
        report.total_weight = checked_add(report.total_weight, c.weight);
    }
    return report;
}

HomologyBasisReport brute_mhb(const SimplicialComplex& k, const OracleBudget& budget) {
    require_valid(k);
    const auto g = skeleton(k);
    const auto keyed = keyed_sorted(g, all_cycle_vectors(g, budget));
    const auto d2 = boundary_matrix(k, 2);

    HomologyBasisReport report;
    report.engine = MhbEngine::oracle;
    ColumnEchelon echelon(g.m());
    for (std::size_t j = 0; j < d2.cols(); ++j)
        if (echelon.insert(d2.col(j))) report.boundary_profile.push_back(j);
    for (const auto& [key, c] : keyed) {
        if (!echelon.insert(c.edges)) continue;
        report.cycles.push_back(c);
        report.total_weight = checked_add(report.total_weight, c.weight);
    }
    return report;
}

TightCycleSet brute_tight_cycles(const Graph& g, const OracleBudget& budget) {
    if (g.n() > budget.max_vertices)
        throw BudgetExceeded(std::to_string(g.n()) + " vertices exceed oracle budget " +
                             std::to_string(budget.max_vertices));
    const std::size_t n = g.n();

    // Floyd-Warshall on exact perturbed keys.
    std::vector<std::vector<std::optional<Key>>> dist(n, std::vector<std::optional<Key>>(n));
    for (Vertex v = 0; v < n; ++v) dist[v][v] = Key{};
    for (EdgeId e = 0; e < g.m(); ++e) {
        const auto k = edge_key(g, e);
        for (auto [a, b] : {std::pair{g.edge(e).u, g.edge(e).v}, std::pair{g.edge(e).v, g.edge(e).u}})
            if (!dist[a][b] || k < *dist[a][b]) dist[a][b] = k;
    }
    for (Vertex via = 0; via < n; ++via)
        for (Vertex a = 0; a < n; ++a) {
            if (!dist[a][via]) continue;
            for (Vertex b = 0; b < n; ++b) {
                if (!dist[via][b]) continue;
                Key through = *dist[a][via];
                through += *dist[via][b];
                if (!dist[a][b] || through < *dist[a][b]) dist[a][b] = through;
            }
        }

    // Backtracking: each simple cycle is found from its smallest vertex, once per direction.
    std::map<std::vector<EdgeId>, std::pair<std::vector<Vertex>, std::vector<EdgeId>>> found;
    std::vector<Vertex> path_v;
    std::vector<EdgeId> path_e;
    std::vector<bool> on_path(n, false);

    auto extend = [&](auto&& self, Vertex start, Vertex x) -> void {
        for (const auto& [e, y] : g.incident(x)) {
            if (!path_e.empty() && e == path_e.back()) continue;
            if (y == start) {
                path_e.push_back(e);
                auto sorted_edges = path_e;
                std::sort(sorted_edges.begin(), sorted_edges.end());
                found.try_emplace(std::move(sorted_edges), path_v, path_e);
                path_e.pop_back();
                continue;
            }
            if (y < start || on_path[y]) continue;
            on_path[y] = true;
            path_v.push_back(y);
            path_e.push_back(e);
            self(self, start, y);
            path_e.pop_back();
            path_v.pop_back();
            on_path[y] = false;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        on_path[s] = true;
        path_v = {s};
        extend(extend, s, s);
        on_path[s] = false;
    }

    std::vector<Cycle> tight;
    for (const auto& [edge_list, walk] : found) {
        const auto& [verts, edges] = walk;
        const std::size_t len = edges.size();
        bool ok = true;
        for (std::size_t i = 0; i < len && ok; ++i) {
            for (std::size_t j = i + 1; j < len && ok; ++j) {
                Key arc;
                for (std::size_t t = i; t < j; ++t) arc += edge_key(g, edges[t]);
                Key rest;
                for (std::size_t t = 0; t < len; ++t)
                    if (t < i || t >= j) rest += edge_key(g, edges[t]);
                const Key& shorter = arc < rest ? arc : rest;
                ok = dist[verts[i]][verts[j]] && *dist[verts[i]][verts[j]] == shorter;
            }
        }
        if (ok) tight.push_back(Cycle::from_edges(g, Gf2Vector::from_indices(g.m(), edge_list)));
    }

    TightCycleSet out;
    for (auto& [key, c] : keyed_sorted(g, std::move(tight))) {
        out.total_length += c.length();
        out.cycles.push_back(std::move(c));
    }
    return out;
}

} // namespace mcb::oracle
