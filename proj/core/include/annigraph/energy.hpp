#pragma once

#include <cstdint>
#include <vector>

#include "annigraph/ann_graph.hpp"
#include "annigraph/eigen.hpp"
#include "annigraph/intpoly.hpp"
#include "annigraph/threshold.hpp"

namespace annigraph {

// Graph energy E = sum |lambda_i| over the adjacency spectrum, the
// hyper/hypoenergetic classification with a guard band against float flips,
// the closed-form multiplicities of the eigenvalues 0 and -1 of
// Gamma(Z/p^alpha), and the energy-interval check
// E(Gamma(Z/p^2)) < E(G_word) < E(K_{p^2}).

double energy(const Spectrum& s);

/// Guard band for strict spectral inequalities: differences inside the band
/// are reported as inconclusive instead of being decided by float noise.
inline constexpr double kEnergyMargin = 1e-6;

struct EnergyClassification {
    double e = 0.0;
    std::int64_t n = 0;
    bool hyperenergetic = false;       // E > 2(n-1) + margin
    bool hypoenergetic = false;        // E < n - margin
    bool hyper_inconclusive = false;   // |E - 2(n-1)| <= margin
    bool hypo_inconclusive = false;    // |E - n| <= margin
};

EnergyClassification classify_energy(const SimpleGraph& g, const EigenOptions& opts = {});

/// Multiplicities of the adjacency eigenvalues 0 and -1 of Gamma(Z/p^alpha),
/// plus the count of residual eigenvalues (the roots of the equitable
/// quotient's characteristic polynomial).  (p, alpha) = (2, 1) is the
/// degenerate K2 case with multiplicities (0, 1) and one residual value.
struct AdjacencyMultiplicities {
    std::int64_t mult_zero = 0;
    std::int64_t mult_minus_one = 0;
    std::int64_t residual_count = 0;
};

AdjacencyMultiplicities adjacency_mult_closed_form(std::int64_t p, int alpha);

IntPoly quotient_charpoly(const QuotientGraph& q);

/// Quotient eigenvalues as (value, multiplicity), ascending, isolated exactly
/// and bisected to width tol.
std::vector<std::pair<double, int>> quotient_eigenvalues(const QuotientGraph& q,
                                                         double tol = 1e-10);

/// Energy interval report for p >= 7: Gamma(Z/p^2) against the threshold
/// graph with build word 0 1^2m 0^4m 1^2m, m = (p^2-1)/8, and K_{p^2}.
struct EnergyBoundReport {
    std::int64_t p = 0;
    std::int64_t m = 0;
    double e_gamma = 0.0;
    double e_threshold = 0.0;
    double e_complete = 0.0;        // 2(p^2 - 1)
    double linear_bound = 0.0;      // 7p - 2
    bool chain_holds = false;       // e_gamma < e_threshold < e_complete (margin-guarded)
    bool linear_bound_holds = false;  // e_gamma <= 7p - 2
    IntPoly residual_cubic_gamma;      // cubic with the non-{0,-1} eigenvalues of Gamma
    IntPoly residual_cubic_threshold;  // same for the comparison word
};

EnergyBoundReport verify_energy_bounds(std::int64_t p, const EigenOptions& opts = {});

enum class ConjectureVerdict { Supports, Refutes, Inconclusive };

const char* to_string(ConjectureVerdict v);

struct ConjectureScanRow {
    std::int64_t p = 0;
    int alpha = 0;
    std::int64_t n = 0;
    double e = 0.0;
    double complete_energy = 0.0;  // 2(n-1)
    ConjectureVerdict verdict = ConjectureVerdict::Inconclusive;
    std::vector<double> spectrum_if_refuted;  // full spectrum for the audit trail
};

/// One row per (p, alpha) with p^alpha under the cap: is Gamma(Z/p^alpha)
/// hypoenergetic and not hyperenergetic?  A Refutes row is a finding, not a
/// crash; callers surface it (the CLI exits 1).
std::vector<ConjectureScanRow> conjecture_scan(const std::vector<std::int64_t>& primes,
                                               int alpha_max,
                                               std::int64_t max_vertices = kDefaultMaxVertices,
                                               const EigenOptions& opts = {},
                                               int alpha_min = 1);

}  // namespace annigraph
