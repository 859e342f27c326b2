#ifndef MCB_FIXTURES_HPP_
#define MCB_FIXTURES_HPP_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcb/complex.hpp"
#include "mcb/graph.hpp"
#include "mcb/oracle.hpp"

namespace mcb::fixtures {

/// Seeded generator with platform-independent draws (no std distributions).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish in [0, k).
    std::uint64_t below(std::uint64_t k) { return engine_() % k; }
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

// Named instances. Unit weights unless stated.
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen();
Graph two_disjoint_triangles();
/// Path 0-1-2-3 with a pendant edge 1-4.
Graph small_tree();

SimplicialComplex hollow_triangle();
SimplicialComplex filled_triangle();
/// Five triangles {i, i+1, i+2} mod 5 over K5.
SimplicialComplex mobius_strip();
/// Triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7 over K7.
SimplicialComplex torus7();
/// Outer triangle 0,1,2 and inner triangle 3,4,5 joined by a band of six triangles.
SimplicialComplex annulus();

struct RandomGraphSpec {
    std::size_t min_n = 3;
    std::size_t max_n = 10;
    std::size_t min_extra = 0;   // edges beyond a spanning tree
    std::size_t max_extra = 12;
    Weight min_w = 1;
    Weight max_w = 8;
};

/// Connected simple graph: random tree plus random extra edges, shuffled edge order.
Graph random_connected_graph(Rng& rng, const RandomGraphSpec& spec);

/// Random graph on at most max_n vertices (sometimes two components), with each
/// of its triangles filled with probability 1/2.
SimplicialComplex random_complex(Rng& rng, std::size_t max_n = 8, std::size_t max_extra = 10);

struct Fixture {
    std::string name;
    std::string input_file;  // "<name>.grf" or "<name>.scx"
    std::string input_text;
    nlohmann::ordered_json manifest;
};

nlohmann::ordered_json expected_for(const Graph& g, const oracle::OracleBudget& budget = {});
nlohmann::ordered_json expected_for(const SimplicialComplex& k, const oracle::OracleBudget& budget = {});

/// Curated instances, 20 random graphs and 10 random complexes, each with oracle expectations.
std::vector<Fixture> generate_fixtures(std::uint64_t seed, const oracle::OracleBudget& budget = {});

/// Writes every input file and a "<name>.json" manifest per fixture.
void write_fixtures(const std::filesystem::path& dir, const std::vector<Fixture>& fixtures);

} // namespace mcb::fixtures

#endif // MCB_FIXTURES_HPP_
