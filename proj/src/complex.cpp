#include "mcb/complex.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>

#include "mcb/error.hpp"
#include "text_io.hpp"

namespace mcb {

namespace {

std::pair<Vertex, Vertex> key(Vertex u, Vertex v) { return {std::min(u, v), std::max(u, v)}; }

Triangle sorted(Triangle t) {
    std::sort(t.begin(), t.end());
    return t;
}

std::string edge_name(Vertex u, Vertex v) {
    return "(" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) + ")";
}

std::string triangle_name(const Triangle& t) {
    const auto s = sorted(t);
    return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + ")";
}

} // namespace

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<Edge> edges, std::vector<Triangle> triangles)
    : n_(n), edges_(std::move(edges)), triangles_(std::move(triangles)) {
    for (EdgeId e = 0; e < edges_.size(); ++e) edge_index_.try_emplace(key(edges_[e].u, edges_[e].v), e);
}

std::optional<EdgeId> SimplicialComplex::edge_between(Vertex u, Vertex v) const {
    auto it = edge_index_.find(key(u, v));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Violation> validate(const SimplicialComplex& k) {
    using Kind = Violation::Kind;
    std::vector<Violation> out;

    std::set<std::pair<Vertex, Vertex>> seen_edges;
    for (EdgeId e = 0; e < k.m(); ++e) {
        const auto& [u, v, w] = k.edges()[e];
        const auto name = "edge " + std::to_string(e) + " " + edge_name(u, v);
        if (u >= k.n() || v >= k.n()) out.push_back({Kind::vertex_out_of_range, name + " uses a vertex >= n"});
        if (u == v) out.push_back({Kind::degenerate_simplex, name + " is a self-loop"});
        if (!seen_edges.insert(key(u, v)).second) out.push_back({Kind::duplicate_edge, name + " is listed twice"});
    }

    std::set<Triangle> seen_triangles;
    for (std::size_t t = 0; t < k.triangle_count(); ++t) {
        const auto& tri = k.triangles()[t];
        const auto name = "triangle " + std::to_string(t) + " " + triangle_name(tri);
        if (std::any_of(tri.begin(), tri.end(), [&](Vertex x) { return x >= k.n(); }))
            out.push_back({Kind::vertex_out_of_range, name + " uses a vertex >= n"});
        const auto s = sorted(tri);
        if (s[0] == s[1] || s[1] == s[2]) {
            out.push_back({Kind::degenerate_simplex, name + " repeats a vertex"});
            continue;
        }
        if (!seen_triangles.insert(s).second) out.push_back({Kind::duplicate_triangle, name + " is listed twice"});
        for (auto [a, b] : {std::pair{s[0], s[1]}, std::pair{s[0], s[2]}, std::pair{s[1], s[2]}}) {
            if (!k.edge_between(a, b))
                out.push_back({Kind::missing_edge, name + " is missing edge " + edge_name(a, b)});
        }
    }
    return out;
}

void require_valid(const SimplicialComplex& k) {
    const auto violations = validate(k);
    if (violations.empty()) return;
    std::string msg = "invalid complex:";
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw PreconditionError(msg);
}

Gf2Matrix boundary_matrix(const SimplicialComplex& k, int p) {
    if (p == 1) {
        Gf2Matrix d(k.n(), k.m());
        for (EdgeId e = 0; e < k.m(); ++e) {
            d.set(k.edges()[e].u, e);
            d.set(k.edges()[e].v, e);
        }
        return d;
    }
    if (p == 2) {
        require_valid(k);
        Gf2Matrix d(k.m(), k.triangle_count());
        for (std::size_t t = 0; t < k.triangle_count(); ++t) {
            const auto& [a, b, c] = k.triangles()[t];
            d.set(*k.edge_between(a, b), t);
            d.set(*k.edge_between(a, c), t);
            d.set(*k.edge_between(b, c), t);
        }
        return d;
    }
    throw PreconditionError("boundary_matrix: only p = 1 and p = 2 are supported");
}

HomologyProfile homology_profile(const SimplicialComplex& k) {
    require_valid(k);
    HomologyProfile h;
    h.beta0 = connected_components(skeleton(k));
    h.cycle_rank = k.m() + h.beta0 - k.n();
    h.boundary_rank = rank(boundary_matrix(k, 2));
    if (h.boundary_rank > h.cycle_rank) throw InvariantViolation("boundary rank exceeds cycle rank");
    h.beta1 = h.cycle_rank - h.boundary_rank;
    return h;
}

Graph skeleton(const SimplicialComplex& k) {
    return Graph(k.n(), std::vector<Edge>(k.edges().begin(), k.edges().end()));
}

SimplicialComplex as_complex(const Graph& g) {
    return SimplicialComplex(g.n(), std::vector<Edge>(g.edges().begin(), g.edges().end()), {});
}

SimplicialComplex parse_complex(std::istream& in, bool auto_close) {
    const auto lines = detail::tokenize(in);
    if (lines.empty()) throw ParseError(1, "empty input, expected header 'complex <n>'");

    const auto& header = lines.front();
    if (header.tokens.front() != "complex") throw ParseError(header.number, "expected header 'complex <n>'");
    detail::expect_arity(header, 2);
    const auto n = detail::parse_uint(header, 1, "vertex count");

    auto vertex = [n](const detail::Line& line, std::size_t i) {
        const auto v = detail::parse_uint(line, i, "vertex id");
        if (v >= n) throw ParseError(line.number, "vertex id " + std::to_string(v) + " out of range for n = " + std::to_string(n));
        return static_cast<Vertex>(v);
    };

    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.front() != "s") throw ParseError(line.number, "expected simplex line 's <dim> ...'");
        const auto dim = detail::parse_uint(line, 1, "dimension");
        switch (dim) {
        case 0:
            detail::expect_arity(line, 3);
            vertex(line, 2);
            break;
        case 1: {
            detail::expect_arity(line, 5);
            const auto u = vertex(line, 2);
            const auto v = vertex(line, 3);
            if (u == v) throw ParseError(line.number, "degenerate edge on vertex " + std::to_string(u));
            edges.push_back({u, v, detail::parse_uint(line, 4, "weight")});
            break;
        }
        case 2: {
            detail::expect_arity(line, 5);
            const Triangle t{vertex(line, 2), vertex(line, 3), vertex(line, 4)};
            if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
                throw ParseError(line.number, "degenerate triangle " + triangle_name(t));
            triangles.push_back(t);
            break;
        }
        default:
            throw ParseError(line.number, "simplices of dimension " + std::to_string(dim) +
                                              " are not supported (maximum is 2)");
        }
    }

    if (auto_close) {
        std::set<std::pair<Vertex, Vertex>> present;
        for (const auto& e : edges) present.insert(key(e.u, e.v));
        for (const auto& t : triangles) {
            const auto s = sorted(t);
            for (auto [a, b] : {std::pair{s[0], s[1]}, std::pair{s[0], s[2]}, std::pair{s[1], s[2]}}) {
                if (present.insert({a, b}).second) edges.push_back({a, b, 1});
            }
        }
    }
    return SimplicialComplex(n, std::move(edges), std::move(triangles));
}

SimplicialComplex parse_complex_file(const std::string& path, bool auto_close) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_complex(in, auto_close);
}

void write_complex(std::ostream& out, const SimplicialComplex& k) {
    out << "complex " << k.n() << '\n';
    for (const auto& e : k.edges()) out << "s 1 " << e.u << ' ' << e.v << ' ' << e.w << '\n';
    for (const auto& t : k.triangles()) out << "s 2 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

} // namespace mcb
