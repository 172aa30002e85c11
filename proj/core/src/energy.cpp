#include "annigraph/energy.hpp"

#include <algorithm>
#include <cmath>

namespace annigraph {

double energy(const Spectrum& s) {
    double e = 0.0;
    for (double x : s.eigenvalues) e += std::abs(x);
    return e;
}

EnergyClassification classify_energy(const SimpleGraph& g, const EigenOptions& opts) {
    EnergyClassification out;
    out.n = g.n();
    out.e = energy(adjacency_spectrum(g, opts));
    const double hyper_line = 2.0 * static_cast<double>(out.n - 1);
    const double hypo_line = static_cast<double>(out.n);
    out.hyper_inconclusive = std::abs(out.e - hyper_line) <= kEnergyMargin;
    out.hypo_inconclusive = std::abs(out.e - hypo_line) <= kEnergyMargin;
    out.hyperenergetic = out.e > hyper_line + kEnergyMargin;
    out.hypoenergetic = out.e < hypo_line - kEnergyMargin;
    return out;
}

AdjacencyMultiplicities adjacency_mult_closed_form(std::int64_t p, int alpha) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeBase, "base must be prime");
    if (alpha < 1) throw Error(ErrorKind::InvalidGroup, "exponent must be >= 1");
    if (p == 2 && alpha == 1) return {0, 1, 1};  // K2: spectrum {1, -1}

    auto pow_i = [&](int e) {
        std::int64_t out = 1;
        for (int t = 0; t < e; ++t) out *= p;
        return out;
    };
    AdjacencyMultiplicities out;
    if (alpha % 2 == 0) {
        std::int64_t k = alpha / 2;
        out.mult_zero = pow_i(alpha) - pow_i(static_cast<int>(k)) - k;
        out.mult_minus_one = pow_i(static_cast<int>(k)) - k - 1;
        out.residual_count = 2 * k + 1;
    } else {
        std::int64_t k = (alpha + 1) / 2;
        out.mult_zero = pow_i(alpha) - pow_i(static_cast<int>(k - 1)) - k;
        out.mult_minus_one = pow_i(static_cast<int>(k - 1)) - k;
        out.residual_count = 2 * k;
    }
    return out;
}

IntPoly quotient_charpoly(const QuotientGraph& q) {
    return charpoly(q.m);
}

std::vector<std::pair<double, int>> quotient_eigenvalues(const QuotientGraph& q, double tol) {
    IntPoly f = quotient_charpoly(q);
    // Row sums bound the spectral radius of the quotient matrix.
    std::int64_t bound = 1;
    for (const auto& row : q.m) {
        std::int64_t s = 0;
        for (std::int64_t v : row) s += std::abs(v);
        bound = std::max(bound, s);
    }
    return real_roots_with_multiplicity(f, -static_cast<double>(bound) - 1.0,
                                        static_cast<double>(bound) + 1.0, tol);
}

EnergyBoundReport verify_energy_bounds(std::int64_t p, const EigenOptions& opts) {
    if (p == 2 || p < 7 || !is_prime(p))
        throw Error(ErrorKind::NotApplicable, "energy interval check needs a prime p >= 7");

    EnergyBoundReport out;
    out.p = p;
    out.m = (p * p - 1) / 8;

    FiniteAbelianGroup g({p * p});
    AnnGraph gamma = build_graph(g, std::max<std::int64_t>(p * p, kDefaultMaxVertices));
    out.e_gamma = energy(adjacency_spectrum(gamma.graph, opts));

    CreationSequence word;
    word.bits.push_back(0);
    word.bits.insert(word.bits.end(), static_cast<std::size_t>(2 * out.m), 1);
    word.bits.insert(word.bits.end(), static_cast<std::size_t>(4 * out.m), 0);
    word.bits.insert(word.bits.end(), static_cast<std::size_t>(2 * out.m), 1);
    SimpleGraph comparison = graph_from_creation_sequence(word);
    out.e_threshold = energy(adjacency_spectrum(comparison, opts));

    out.e_complete = 2.0 * static_cast<double>(p * p - 1);
    out.linear_bound = static_cast<double>(7 * p - 2);
    out.chain_holds = out.e_gamma + kEnergyMargin < out.e_threshold &&
                      out.e_threshold + kEnergyMargin < out.e_complete;
    out.linear_bound_holds = out.e_gamma <= out.linear_bound + kEnergyMargin;

    // The residual cubics: x^3 - (p-2)x^2 - (p^2-1)x + p(p-1)(p-2) for Gamma,
    // and x^3 - (4m-1)x^2 - 4m(2m+1)x + 16m^3 for the comparison word.
    out.residual_cubic_gamma =
        IntPoly(std::vector<std::int64_t>{p * (p - 1) * (p - 2), -(p * p - 1), -(p - 2), 1});
    std::int64_t m = out.m;
    out.residual_cubic_threshold =
        IntPoly(std::vector<std::int64_t>{16 * m * m * m, -4 * m * (2 * m + 1), -(4 * m - 1), 1});
    return out;
}

const char* to_string(ConjectureVerdict v) {
    switch (v) {
        case ConjectureVerdict::Supports: return "SUPPORTS";
        case ConjectureVerdict::Refutes: return "REFUTES";
        case ConjectureVerdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "UNKNOWN";
}

std::vector<ConjectureScanRow> conjecture_scan(const std::vector<std::int64_t>& primes,
                                               int alpha_max, std::int64_t max_vertices,
                                               const EigenOptions& opts, int alpha_min) {
    std::vector<ConjectureScanRow> rows;
    for (std::int64_t p : primes) {
        if (!is_prime(p)) throw Error(ErrorKind::NonPrimeBase, "scan list must contain primes");
        std::int64_t n = 1;
        for (int alpha = 1; alpha <= alpha_max; ++alpha) {
            if (n > max_vertices / p) break;
            n *= p;
            if (alpha < alpha_min) continue;

            ConjectureScanRow row;
            row.p = p;
            row.alpha = alpha;
            row.n = n;
            AnnGraph gamma = build_graph(FiniteAbelianGroup({n}), max_vertices);
            Spectrum s = adjacency_spectrum(gamma.graph, opts);
            row.e = energy(s);
            row.complete_energy = 2.0 * static_cast<double>(n - 1);

            const double hyper_line = row.complete_energy;
            const double hypo_line = static_cast<double>(n);
            bool hyper = row.e > hyper_line + kEnergyMargin;
            bool hypo = row.e < hypo_line - kEnergyMargin;
            bool boundary = std::abs(row.e - hyper_line) <= kEnergyMargin ||
                            std::abs(row.e - hypo_line) <= kEnergyMargin;
            if (boundary)
                row.verdict = ConjectureVerdict::Inconclusive;
            else if (!hyper && hypo)
                row.verdict = ConjectureVerdict::Supports;
            else
                row.verdict = ConjectureVerdict::Refutes;
            if (row.verdict == ConjectureVerdict::Refutes) row.spectrum_if_refuted = s.eigenvalues;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace annigraph
