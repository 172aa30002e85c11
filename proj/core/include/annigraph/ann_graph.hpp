#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "annigraph/group.hpp"
#include "annigraph/simple_graph.hpp"

namespace annigraph {

// The group-annihilator graph Gamma(G): vertices are the elements of G,
// indexed 0..|G|-1 in mixed-radix order, and x ~ y iff [x:G][y:G]G = {0},
// i.e. exp(G) divides d_x * d_y for the ideal generators d_v.  For a cyclic
// p-group this reduces to val(x) + val(y) >= alpha.  Vertex 0 dominates.

inline constexpr std::int64_t kDefaultMaxVertices = 10000;

struct AnnGraph {
    FiniteAbelianGroup group;
    SimpleGraph graph;
    std::vector<std::int64_t> vertex_gen;  // d_v = generator of [v : G], by vertex index
};

AnnGraph build_graph(const FiniteAbelianGroup& g, std::int64_t max_vertices = kDefaultMaxVertices);

/// The alpha+1 orbits of Z/p^alpha, ordered by valuation i = 0..alpha
/// (units first, {0} last).
std::vector<Orbit> cyclic_orbits(const FiniteAbelianGroup& g);

/// Equitable partition of Gamma(Z/p^alpha) into V_i = O_{alpha, p^(alpha+1-i)},
/// i = 1..alpha+1 (so V_1 = {0}), with the quotient matrix
/// m_ij = |N(u) cap V_j| for u in V_i.  Equitability is re-verified for every
/// vertex during construction.
struct QuotientGraph {
    std::vector<std::vector<std::int64_t>> parts;
    std::vector<std::int64_t> sizes;
    std::vector<std::vector<std::int64_t>> m;
};

QuotientGraph quotient(const AnnGraph& g);
QuotientGraph quotient(const FiniteAbelianGroup& g, std::int64_t max_vertices = kDefaultMaxVertices);

struct GraphMetrics {
    std::int64_t diameter = 0;
    std::optional<std::int64_t> girth;  // empty = acyclic (no finite girth)
    std::int64_t eccentricity_of_zero = 0;
};

GraphMetrics metrics(const AnnGraph& g);

/// Shortest cycle length, or nothing for forests.  Triangle scan first
/// (annihilator graphs with any cycle have one), BFS per vertex otherwise.
std::optional<std::int64_t> girth(const SimpleGraph& g);

std::vector<std::vector<std::int64_t>> twin_orbits(const AnnGraph& g);

}  // namespace annigraph
