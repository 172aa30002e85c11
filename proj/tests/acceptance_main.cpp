// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures.  Each criterion pins its tolerance in code; timings that are part
// of a criterion are measured with steady_clock.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "annigraph/ann_graph.hpp"
#include "annigraph/energy.hpp"
#include "annigraph/orbits.hpp"
#include "annigraph/threshold.hpp"

using namespace annigraph;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct PrimePower {
    std::int64_t p;
    int alpha;
    std::int64_t n;
};

std::vector<PrimePower> prime_powers_up_to(std::int64_t cap) {
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p <= cap; ++p) {
        if (!is_prime(p)) continue;
        std::int64_t n = p;
        int alpha = 1;
        while (n <= cap) {
            out.push_back({p, alpha, n});
            if (n > cap / p) break;
            n *= p;
            ++alpha;
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) {
        return a.n < b.n;
    });
    return out;
}

// Shared sweep data for the p^alpha <= 729 criteria.
struct SweepEntry {
    PrimePower pp;
    AnnGraph graph;
    Spectrum adjacency;
    Spectrum laplacian;
};

const std::vector<SweepEntry>& sweep_729() {
    static std::vector<SweepEntry> cache = [] {
        std::vector<SweepEntry> out;
        for (const PrimePower& pp : prime_powers_up_to(729)) {
            SweepEntry e{pp, build_graph(FiniteAbelianGroup({pp.n})), {}, {}};
            e.adjacency = adjacency_spectrum(e.graph.graph);
            e.laplacian = laplacian_spectrum_numeric(e.graph.graph);
            out.push_back(std::move(e));
        }
        return out;
    }();
    return cache;
}

// --------------------------------------------------------------------------
// 1. Golden 8x8 adjacency matrix of Gamma(Z/8Z), built in under 1 ms.
Outcome criterion_golden_matrix() {
    constexpr int golden[8][8] = {
        {0, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 1, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0},
    };
    FiniteAbelianGroup g({8});
    build_graph(g);  // warm-up
    auto t0 = std::chrono::steady_clock::now();
    AnnGraph ag = build_graph(g);
    double dt = seconds_since(t0);

    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (static_cast<int>(ag.graph.has_edge(i, j)) != golden[i][j])
                return {false, "matrix differs at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    if (dt >= 1e-3) return {false, "build took " + std::to_string(dt * 1e3) + " ms"};
    char buf[64];
    std::snprintf(buf, sizeof buf, "bit-exact, built in %.3f ms", dt * 1e3);
    return {true, buf};
}

// --------------------------------------------------------------------------
// 2. Closed forms equal the brute-force oracle, exhaustively, under 60 s.
Outcome criterion_closed_forms() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream bad;
    std::int64_t checked = 0, mismatches = 0;

    for (std::int64_t p : {2, 3, 5}) {
        std::int64_t n = 1;
        for (int alpha = 1; alpha <= 5; ++alpha) {
            n *= p;
            FiniteAbelianGroup g({n});
            for (std::int64_t x = 0; x < n; ++x, ++checked) {
                if (annihilator_cyclic(g.element(x)).generator !=
                    annihilator_bruteforce(g.element(x)).generator) {
                    ++mismatches;
                    bad << " cyclic(p=" << p << ",alpha=" << alpha << ",x=" << x << ")";
                }
            }
        }
    }

    const std::vector<std::array<std::int64_t, 3>> homogeneous = {
        {2, 1, 2}, {2, 1, 3}, {2, 2, 2}, {3, 1, 2}, {3, 2, 2}, {5, 1, 2}};
    for (auto [p, alpha, ell] : homogeneous) {
        std::int64_t mod = 1;
        for (int t = 0; t < alpha; ++t) mod *= p;
        FiniteAbelianGroup g(std::vector<std::int64_t>(static_cast<std::size_t>(ell), mod));
        for (std::int64_t x = 0; x < g.order(); ++x, ++checked) {
            if (annihilator_homogeneous(g.element(x)).generator !=
                annihilator_bruteforce(g.element(x)).generator) {
                ++mismatches;
                bad << " homogeneous(p=" << p << ",alpha=" << alpha << ",l=" << ell << ",x=" << x
                    << ")";
            }
        }
    }

    const std::vector<std::array<std::int64_t, 4>> rank3 = {
        {2, 1, 2, 3}, {2, 1, 2, 4}, {2, 1, 3, 4}, {3, 1, 2, 3}};
    for (auto [p, a, b, c] : rank3) {
        auto pw = [&](std::int64_t e) {
            std::int64_t out = 1;
            for (std::int64_t t = 0; t < e; ++t) out *= p;
            return out;
        };
        FiniteAbelianGroup g({pw(a), pw(b), pw(c)});
        for (std::int64_t x = 0; x < g.order(); ++x, ++checked) {
            Rank3Result r = annihilator_rank3_labeled(g.element(x));
            std::int64_t oracle = annihilator_bruteforce(g.element(x)).generator;
            if (r.ideal.generator != oracle) {
                ++mismatches;
                bad << " rank3(p=" << p << ";" << a << "," << b << "," << c << ",x=" << x
                    << ",case=" << r.case_label << ",closed=" << r.ideal.generator
                    << ",oracle=" << oracle << ")";
            }
        }
    }

    double dt = seconds_since(t0);
    if (mismatches > 0) return {false, std::to_string(mismatches) + " mismatches:" + bad.str()};
    if (dt >= 60.0) return {false, "took " + std::to_string(dt) + " s (limit 60)"};
    char buf[96];
    std::snprintf(buf, sizeof buf, "%lld elements, 0 mismatches, %.2f s",
                  static_cast<long long>(checked), dt);
    return {true, buf};
}

// --------------------------------------------------------------------------
// 3. No alternating 4-cycle in Gamma(Z/p^alpha) for all p^alpha <= 2187.
Outcome criterion_threshold_family() {
    auto t0 = std::chrono::steady_clock::now();
    int graphs = 0;
    for (const PrimePower& pp : prime_powers_up_to(2187)) {
        AnnGraph ag = build_graph(FiniteAbelianGroup({pp.n}), 2187);
        if (auto w = find_alternating_4cycle(ag.graph)) {
            return {false, "witness in Gamma(Z/" + std::to_string(pp.n) + "Z): (" +
                               std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                               std::to_string((*w)[2]) + "," + std::to_string((*w)[3]) + ")"};
        }
        ++graphs;
    }
    double dt = seconds_since(t0);
    if (dt >= 120.0) return {false, "took " + std::to_string(dt) + " s (limit 120)"};
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d graphs threshold, %.2f s", graphs, dt);
    return {true, buf};
}

// --------------------------------------------------------------------------
// 4. Conjugated degree sequence equals the numeric Laplacian spectrum to 1e-8.
Outcome criterion_laplacian_conjugation() {
    double worst = 0.0;
    for (const SweepEntry& e : sweep_729()) {
        std::vector<std::int64_t> exact = laplacian_spectrum_threshold(e.graph.graph);
        const auto& numeric = e.laplacian.eigenvalues;  // ascending
        if (exact.size() != numeric.size()) return {false, "length mismatch"};
        for (std::size_t i = 0; i < exact.size(); ++i) {
            double diff = std::abs(static_cast<double>(exact[i]) -
                                   numeric[numeric.size() - 1 - i]);
            worst = std::max(worst, diff);
            if (diff > 1e-8)
                return {false, "n=" + std::to_string(e.pp.n) + " eigenvalue " +
                                   std::to_string(i) + " differs by " + std::to_string(diff)};
        }
    }
    std::vector<std::int64_t> z16 = laplacian_spectrum_threshold(
        build_graph(FiniteAbelianGroup({16})).graph);
    std::vector<std::int64_t> expected{16, 8, 4, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 0};
    if (z16 != expected) return {false, "Z/2^4 multiset differs"};
    char buf[96];
    std::snprintf(buf, sizeof buf, "all integer spectra match, worst |diff| = %.2e", worst);
    return {true, buf};
}

// --------------------------------------------------------------------------
// 5. Eigenvalue multiplicities at 0 and -1, and residuals vs quotient roots.
Outcome criterion_multiplicities() {
    for (const SweepEntry& e : sweep_729()) {
        const std::int64_t p = e.pp.p;
        const int alpha = e.pp.alpha;
        AdjacencyMultiplicities m = adjacency_mult_closed_form(p, alpha);

        if (p == 2 && alpha == 1) {
            // K2: spectrum {-1, 1}; the closed form reports the -1 directly
            // and one residual value, while the 2x2 quotient already carries
            // both eigenvalues.
            if (!(m.mult_zero == 0 && m.mult_minus_one == 1 && m.residual_count == 1))
                return {false, "degenerate (2,1) closed form wrong"};
            auto q = quotient_eigenvalues(quotient(e.graph));
            if (q.size() != 2 || std::abs(q[0].first + 1.0) > 1e-9 ||
                std::abs(q[1].first - 1.0) > 1e-9)
                return {false, "degenerate (2,1) quotient roots wrong"};
            continue;
        }

        auto q = quotient_eigenvalues(quotient(e.graph));
        std::int64_t q_total = 0, q_zero = 0, q_minus_one = 0;
        std::vector<double> expected;
        for (auto [root, mult] : q) {
            q_total += mult;
            if (std::abs(root) < 1e-6) q_zero += mult;
            if (std::abs(root + 1.0) < 1e-6) q_minus_one += mult;
            expected.insert(expected.end(), static_cast<std::size_t>(mult), root);
        }
        if (q_total != m.residual_count)
            return {false, "n=" + std::to_string(e.pp.n) + ": quotient degree " +
                               std::to_string(q_total) + " != residual count " +
                               std::to_string(m.residual_count)};

        std::int64_t zeros = 0, minus_ones = 0;
        for (double x : e.adjacency.eigenvalues) {
            if (std::abs(x) < 1e-6) ++zeros;
            if (std::abs(x + 1.0) < 1e-6) ++minus_ones;
        }
        if (zeros != m.mult_zero + q_zero || minus_ones != m.mult_minus_one + q_minus_one)
            return {false, "n=" + std::to_string(e.pp.n) + ": clusters (" +
                               std::to_string(zeros) + "," + std::to_string(minus_ones) +
                               ") vs closed form (" + std::to_string(m.mult_zero) + "+" +
                               std::to_string(q_zero) + "," + std::to_string(m.mult_minus_one) +
                               "+" + std::to_string(q_minus_one) + ")"};

        expected.insert(expected.end(), static_cast<std::size_t>(m.mult_zero), 0.0);
        expected.insert(expected.end(), static_cast<std::size_t>(m.mult_minus_one), -1.0);
        std::sort(expected.begin(), expected.end());
        if (expected.size() != e.adjacency.eigenvalues.size())
            return {false, "n=" + std::to_string(e.pp.n) + ": spectrum size mismatch"};
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (std::abs(expected[i] - e.adjacency.eigenvalues[i]) > 1e-6)
                return {false, "n=" + std::to_string(e.pp.n) + ": residual eigenvalue " +
                                   std::to_string(i) + " off by " +
                                   std::to_string(std::abs(expected[i] -
                                                           e.adjacency.eigenvalues[i]))};
    }

    // alpha = 2 specialization: (p^2 - p - 1, p - 2, 3).
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
        AdjacencyMultiplicities m = adjacency_mult_closed_form(p, 2);
        if (m.mult_zero != p * p - p - 1 || m.mult_minus_one != p - 2 || m.residual_count != 3)
            return {false, "alpha=2 specialization wrong for p=" + std::to_string(p)};
    }
    return {true, "clusters, residuals and the alpha=2 specialization all match"};
}

// --------------------------------------------------------------------------
// 6. Exact charpoly factorization for alpha = 2, p in {3, 5, 7}.
Outcome criterion_charpoly_factorization() {
    for (std::int64_t p : {3, 5, 7}) {
        std::int64_t n = p * p;
        AnnGraph ag = build_graph(FiniteAbelianGroup({n}));
        std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(n),
                                                 std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
        for (std::int64_t u = 0; u < n; ++u)
            for (std::int64_t v = 0; v < n; ++v)
                a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                    ag.graph.has_edge(u, v) ? 1 : 0;
        IntPoly lhs = charpoly(a);
        IntPoly f(std::vector<std::int64_t>{p * (p - 1) * (p - 2), -(p * p - 1), -(p - 2), 1});
        IntPoly rhs = IntPoly::x_power(static_cast<int>(n - p - 1)) *
                      poly_pow(IntPoly(std::vector<std::int64_t>{1, 1}), static_cast<int>(p - 2)) * f;
        if (!(lhs == rhs)) return {false, "factorization fails for p = " + std::to_string(p)};
    }
    return {true, "x^(p^2-p-1) (x+1)^(p-2) f(x) exactly, p in {3,5,7}"};
}

// --------------------------------------------------------------------------
// 7. Energy interval: E(Gamma) < E(word graph) < 2(p^2-1), and E <= 7p-2.
Outcome criterion_energy_interval() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    for (std::int64_t p : {7, 11, 13}) {
        EnergyBoundReport r = verify_energy_bounds(p);
        if (!r.chain_holds || !r.linear_bound_holds)
            return {false, "fails for p = " + std::to_string(p)};
        char buf[96];
        std::snprintf(buf, sizeof buf, " p=%lld: %.3f < %.3f < %.0f;", static_cast<long long>(p),
                      r.e_gamma, r.e_threshold, r.e_complete);
        detail << buf;
    }
    double dt = seconds_since(t0);
    if (dt >= 60.0) return {false, "took " + std::to_string(dt) + " s (limit 60)"};
    return {true, detail.str() + " guard band 1e-6"};
}

// --------------------------------------------------------------------------
// 8. Known spectra: stars and complete graphs to 1e-9.
Outcome criterion_known_spectra() {
    for (std::int64_t p : {3, 5, 7, 11}) {
        AnnGraph star = build_graph(FiniteAbelianGroup({p}));
        double e = energy(adjacency_spectrum(star.graph));
        if (std::abs(e - 2.0 * std::sqrt(static_cast<double>(p - 1))) > 1e-9)
            return {false, "star energy off for p = " + std::to_string(p)};
    }
    const std::vector<std::vector<std::int64_t>> homogeneous = {{2, 2}, {3, 3}, {2, 2, 2}};
    for (const auto& moduli : homogeneous) {
        AnnGraph k = build_graph(FiniteAbelianGroup(moduli));
        std::int64_t n = k.graph.n();
        auto ev = adjacency_spectrum(k.graph).eigenvalues;
        for (std::int64_t i = 0; i + 1 < n; ++i)
            if (std::abs(ev[static_cast<std::size_t>(i)] + 1.0) > 1e-9)
                return {false, "complete-graph eigenvalue off"};
        if (std::abs(ev.back() - static_cast<double>(n - 1)) > 1e-9)
            return {false, "complete-graph top eigenvalue off"};
    }
    return {true, "star energies 2 sqrt(p-1) and K_n spectra {-1^(n-1), n-1} within 1e-9"};
}

// --------------------------------------------------------------------------
// 9. Hypo-but-not-hyper scan over p^alpha <= 729, alpha >= 2.  This checks an
// unproven conjecture: a REFUTES row is a legitimate scientific outcome and
// is surfaced with its full spectrum rather than hidden, but it fails this
// gate because the build pins the expected verdicts.
Outcome criterion_conjecture_scan() {
    int rows = 0;
    for (const SweepEntry& e : sweep_729()) {
        if (e.pp.alpha < 2) continue;
        ++rows;
        double energy_val = 0.0;
        for (double x : e.adjacency.eigenvalues) energy_val += std::abs(x);
        double hyper_line = 2.0 * static_cast<double>(e.pp.n - 1);
        double hypo_line = static_cast<double>(e.pp.n);
        bool hyper = energy_val > hyper_line + kEnergyMargin;
        bool hypo = energy_val < hypo_line - kEnergyMargin;
        bool boundary = std::abs(energy_val - hyper_line) <= kEnergyMargin ||
                        std::abs(energy_val - hypo_line) <= kEnergyMargin;
        if (boundary || hyper || !hypo) {
            std::ostringstream spec;
            spec.precision(12);
            for (double x : e.adjacency.eigenvalues) spec << " " << x;
            return {false, "p=" + std::to_string(e.pp.p) + " alpha=" + std::to_string(e.pp.alpha) +
                               " E=" + std::to_string(energy_val) + " verdict != SUPPORTS;" +
                               " spectrum:" + spec.str()};
        }
    }
    return {true, std::to_string(rows) + " rows SUPPORTS (unproven conjecture, scanned honestly)"};
}

// --------------------------------------------------------------------------
// 10. Orbit counts and partitions.
Outcome criterion_orbit_counts() {
    // Every abelian p-group with |G| <= 64 over p in {2, 3}.
    int groups = 0;
    for (std::int64_t p : {2, 3}) {
        int nmax = 0;
        std::int64_t power = 1;
        while (power * p <= 64) {
            power *= p;
            ++nmax;
        }
        std::vector<std::vector<int>> partitions;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
            if (!cur.empty()) partitions.push_back(cur);
            for (int part = std::min(remaining, maxpart); part >= 1; --part) {
                cur.push_back(part);
                self(self, remaining - part, part);
                cur.pop_back();
            }
        };
        rec(rec, nmax, nmax);
        for (const auto& lambda : partitions) {
            std::vector<std::int64_t> moduli;
            for (int e : lambda) {
                std::int64_t m = 1;
                for (int t = 0; t < e; ++t) m *= p;
                moduli.push_back(m);
            }
            FiniteAbelianGroup g(moduli);
            auto orbits = bruteforce_aut_orbits(g);
            std::int64_t closed = miller_orbit_count(PartitionType(p, lambda));
            if (static_cast<std::int64_t>(orbits.size()) != closed)
                return {false, "count mismatch for p=" + std::to_string(p) + " lambda size " +
                                   std::to_string(lambda.size())};
            ++groups;
        }
    }

    // Cyclic case: oracle partition = valuation orbits = twin classes, except
    // the two tiny stars K2 and K_{1,3} where the graph cannot separate the
    // leaf orbits.
    std::string exceptions;
    for (std::int64_t p : {2, 3}) {
        std::int64_t n = 1;
        while (n * p <= 64) {
            n *= p;
            FiniteAbelianGroup g({n});
            auto from_aut = bruteforce_aut_orbits(g);
            std::vector<std::vector<std::int64_t>> from_vals;
            for (const Orbit& o : cyclic_orbits(g)) from_vals.push_back(o.members);
            std::sort(from_vals.begin(), from_vals.end(),
                      [](const auto& a, const auto& b) { return a.front() < b.front(); });
            if (from_aut != from_vals)
                return {false, "Aut-orbits differ from valuation orbits for n = " + std::to_string(n)};
            auto twins = twin_orbits(build_graph(g));
            if (n == 2 || n == 4) {
                // Gamma is K2 / K_{1,3}: all non-dominating vertices are twins.
                std::vector<std::vector<std::int64_t>> merged =
                    n == 2 ? std::vector<std::vector<std::int64_t>>{{0, 1}}
                           : std::vector<std::vector<std::int64_t>>{{0}, {1, 2, 3}};
                if (twins != merged) return {false, "unexpected twin classes for n = " + std::to_string(n)};
                exceptions += " n=" + std::to_string(n);
            } else if (twins != from_vals) {
                return {false, "twin classes differ from orbits for n = " + std::to_string(n)};
            }
        }
    }

    auto orbits8 = bruteforce_aut_orbits(FiniteAbelianGroup({8}));
    if (orbits8 != std::vector<std::vector<std::int64_t>>{{0}, {1, 3, 5, 7}, {2, 6}, {4}})
        return {false, "Z/8Z orbit sets differ"};

    return {true, std::to_string(groups) +
                      " groups agree; twin-class proxy exact except" + exceptions +
                      " (star leaves are graph-indistinguishable)"};
}

// --------------------------------------------------------------------------
// 11. Metric claims on every built graph.
Outcome criterion_metrics() {
    std::vector<FiniteAbelianGroup> groups;
    for (const SweepEntry& e : sweep_729()) groups.push_back(e.graph.group);
    groups.push_back(FiniteAbelianGroup({2, 2}));
    groups.push_back(FiniteAbelianGroup({3, 3}));
    groups.push_back(FiniteAbelianGroup({2, 4, 8}));
    groups.push_back(FiniteAbelianGroup({6, 10}));

    for (const auto& g : groups) {
        AnnGraph ag = build_graph(g);
        GraphMetrics m = metrics(ag);
        if (m.eccentricity_of_zero != 1)
            return {false, "ecc(0) != 1 for |G| = " + std::to_string(g.order())};
        if (m.diameter > 2) return {false, "diameter > 2 for |G| = " + std::to_string(g.order())};
        bool has_cycle = ag.graph.edge_count() >= ag.graph.n();
        if (has_cycle && m.girth != 3)
            return {false, "cyclic graph with girth != 3 for |G| = " + std::to_string(g.order())};
        if (!has_cycle && m.girth.has_value())
            return {false, "acyclic graph reports a girth for |G| = " + std::to_string(g.order())};
    }
    return {true, std::to_string(groups.size()) + " graphs: ecc(0)=1, diameter <= 2, girth 3 or none"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Z/8Z golden adjacency matrix (< 1 ms)", criterion_golden_matrix},
        {2, "closed forms == brute-force oracle, exhaustive (< 60 s)", criterion_closed_forms},
        {3, "threshold family: no alternating 4-cycle, p^alpha <= 2187 (< 120 s)",
         criterion_threshold_family},
        {4, "Laplacian spectrum = conjugated degree sequence (1e-8)", criterion_laplacian_conjugation},
        {5, "adjacency multiplicities and quotient residuals (1e-6)", criterion_multiplicities},
        {6, "exact charpoly factorization, alpha = 2, p in {3,5,7}", criterion_charpoly_factorization},
        {7, "energy interval for p in {7,11,13} (< 60 s)", criterion_energy_interval},
        {8, "known spectra: stars and complete graphs (1e-9)", criterion_known_spectra},
        {9, "hypoenergetic-not-hyperenergetic scan, p^alpha <= 729, alpha >= 2",
         criterion_conjecture_scan},
        {10, "orbit counts: closed form vs oracle, partitions, twin classes", criterion_orbit_counts},
        {11, "metrics: ecc(0) = 1, diameter <= 2, girth 3 when cyclic", criterion_metrics},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("%s [%2d] %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures;
}
