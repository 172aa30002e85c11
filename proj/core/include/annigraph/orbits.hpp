#pragma once

#include <cstdint>
#include <vector>

#include "annigraph/group.hpp"

namespace annigraph {

// Aut(G)-orbits in G.  The closed-form count for a p-group of type
// lambda_1 >= ... >= lambda_r is (lambda_r + 1) * prod (lambda_i - lambda_(i+1) + 1);
// the oracle computes the exact orbit partition for |G| <= 64, and the two
// must agree.  Non-p-groups decompose as the product of their p-components.

struct PartitionType {
    std::int64_t p = 0;
    std::vector<int> lambda;  // non-increasing, parts >= 1

    PartitionType(std::int64_t prime, std::vector<int> parts);
};

std::int64_t miller_orbit_count(const PartitionType& t);

/// Product of the per-p-component counts.
std::int64_t miller_orbit_count(const FiniteAbelianGroup& g);

enum class OrbitMethod {
    Auto,       // enumerate when the candidate space is small, closure otherwise
    Enumerate,  // filter all generator-image tuples for bijectivity
    Closure,    // verified elementary automorphisms + height-sequence separation
};

inline constexpr std::int64_t kOrbitOracleCap = 64;

/// Exact Aut(G)-orbit partition of G, classes sorted by smallest member.
///
/// Enumerate: every tuple of generator images with the right element orders,
/// kept when the induced map is bijective; exact by construction.
/// Closure: union-find closure under verified unit scalings, cross
/// transvections and equal-factor swaps, then checked to coincide with the
/// partition by height sequence (an Aut-invariant).  Closure classes refine
/// orbits and orbits refine height classes, so coincidence pins the orbits
/// exactly.  This is what makes (Z/2)^6 feasible, where |Aut| ~ 2e10.
std::vector<std::vector<std::int64_t>> bruteforce_aut_orbits(
    const FiniteAbelianGroup& g, std::int64_t cap = kOrbitOracleCap,
    OrbitMethod method = OrbitMethod::Auto);

/// Literal evaluation of the Schwachhoefer-Stroppel orbit-count sum over
/// subsets of the distinct part values.  The usual statement of the formula
/// has dangling indices, so this picks one consistent reading (the empty
/// subset contributes 1) and callers report the value next to the closed form
/// with an agreement flag; it is never asserted.
std::int64_t ss_orbit_count_experimental(const PartitionType& t);

}  // namespace annigraph
