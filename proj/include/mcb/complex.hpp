#ifndef MCB_COMPLEX_HPP_
#define MCB_COMPLEX_HPP_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcb/gf2.hpp"
#include "mcb/graph.hpp"

namespace mcb {

using Triangle = std::array<Vertex, 3>;

/**
 * Simplicial complex of dimension at most two. Only edges carry weights.
 * Construction never rejects; call validate() to learn about missing faces
 * or duplicates. Operations that need a valid complex check it themselves.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(std::size_t n, std::vector<Edge> edges, std::vector<Triangle> triangles);

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }
    std::size_t triangle_count() const noexcept { return triangles_.size(); }
    /// Vertices + edges + triangles. Simplices above dimension two are not representable.
    std::size_t simplex_count() const noexcept { return n_ + m() + triangle_count(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Triangle> triangles() const noexcept { return triangles_; }

    /// First edge listed between u and v, if any.
    std::optional<EdgeId> edge_between(Vertex u, Vertex v) const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Triangle> triangles_;
    std::map<std::pair<Vertex, Vertex>, EdgeId> edge_index_;
};

struct Violation {
    enum class Kind { vertex_out_of_range, degenerate_simplex, duplicate_edge, duplicate_triangle, missing_edge };
    Kind kind;
    std::string message;
};

std::vector<Violation> validate(const SimplicialComplex& k);

/// Throws PreconditionError listing every violation when k is invalid.
void require_valid(const SimplicialComplex& k);

/// p = 1: n x m vertex-edge incidence. p = 2: m x t edge-triangle incidence.
Gf2Matrix boundary_matrix(const SimplicialComplex& k, int p);

struct HomologyProfile {
    std::size_t beta0 = 0;
    std::size_t beta1 = 0;
    std::size_t boundary_rank = 0;
    std::size_t cycle_rank = 0;
};

HomologyProfile homology_profile(const SimplicialComplex& k);

/// The 1-skeleton, sharing edge ids and weights with k.
Graph skeleton(const SimplicialComplex& k);

/// A graph viewed as a complex without triangles.
SimplicialComplex as_complex(const Graph& g);

/**
 * Text format: "complex <n>", then "s 1 <u> <v> <w>" edge lines and
 * "s 2 <a> <b> <c>" triangle lines; "s 0 <v>" lines are accepted and ignored.
 * With auto_close, edges missing from listed triangles are appended with
 * weight 1; otherwise the caller sees them through validate().
 */
SimplicialComplex parse_complex(std::istream& in, bool auto_close = false);
SimplicialComplex parse_complex_file(const std::string& path, bool auto_close = false);
void write_complex(std::ostream& out, const SimplicialComplex& k);

} // namespace mcb

#endif // MCB_COMPLEX_HPP_
