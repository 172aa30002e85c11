#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "annigraph/partition.hpp"
#include "annigraph/simple_graph.hpp"

namespace annigraph {

// Threshold graphs: built from K1 by adding isolated or dominating vertices,
// equivalently the graphs with no alternating 4-cycle.  The Laplacian
// spectrum of a threshold graph is the Ferrers conjugate of its degree
// sequence (padded with one zero per extra component), hence integral.

/// Binary build word: bit v is 0 for an isolated addition, 1 for a
/// dominating addition.  The first bit is conventionally 0 (the initial K1).
struct CreationSequence {
    std::vector<std::uint8_t> bits;

    std::string str() const;
    static CreationSequence from_string(std::string_view s);
    bool operator==(const CreationSequence&) const = default;
};

/// A witness (a, b, c, d) with (a,b), (c,d) edges and (a,c), (b,d) non-edges,
/// or nothing when the graph is threshold.  Deterministic: edges are scanned
/// in lexicographic order and the earliest witness is returned.
std::optional<std::array<std::int64_t, 4>> find_alternating_4cycle(const SimpleGraph& g);

/// Reverse construction: repeatedly remove a dominating vertex (bit 1) or an
/// isolated vertex (bit 0).  Throws NotThreshold when neither exists.
CreationSequence peel_creation_sequence(const SimpleGraph& g);

SimpleGraph graph_from_creation_sequence(const CreationSequence& s);

/// Build word of Gamma(Z/p^alpha), assembled from the orbit sizes
/// |O_{alpha,p^i}| = phi(p^alpha)/p^i.  Length p^alpha.
CreationSequence closed_form_creation_sequence(std::int64_t p, int alpha);

/// (degree, multiplicity) pairs of Gamma(Z/p^alpha) in decreasing degree
/// order, straight from the orbit sizes: val-i vertices have degree p^i when
/// 2i < alpha (independent part) and p^i - 1 when 2i >= alpha (complete
/// part); the zero vertex has degree p^alpha - 1.
std::vector<std::pair<std::int64_t, std::int64_t>> closed_form_degree_multiset(std::int64_t p,
                                                                               int alpha);

/// Laplacian eigenvalues of a threshold graph: conjugate(degree sequence)
/// padded with zeros to n values, non-increasing.  Exact integers.
std::vector<std::int64_t> laplacian_spectrum_threshold(const SimpleGraph& g);

/// Laplacian eigenvalue -> multiplicity for Gamma(Z/p^alpha), computed from
/// the closed-form degree multiset without building the graph.
std::map<std::int64_t, std::int64_t> laplacian_multiplicity_table(std::int64_t p, int alpha);

/// Canonical description of a graph up to twin-class structure: per class its
/// size, whether it induces a clique, and its sorted class adjacency.  Two
/// threshold graphs with equal degree sequences get equal signatures.
std::string twin_collapse_signature(const SimpleGraph& g);

}  // namespace annigraph
