#include "annigraph/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace annigraph {

DenseSymMatrix adjacency_matrix(const SimpleGraph& g) {
    DenseSymMatrix m(g.n());
    for (std::int64_t u = 0; u < g.n(); ++u)
        for (std::int64_t v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) m.at(u, v) = m.at(v, u) = 1.0;
    return m;
}

DenseSymMatrix laplacian_matrix(const SimpleGraph& g) {
    DenseSymMatrix m(g.n());
    for (std::int64_t u = 0; u < g.n(); ++u) {
        m.at(u, u) = static_cast<double>(g.degree(u));
        for (std::int64_t v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) m.at(u, v) = m.at(v, u) = -1.0;
    }
    return m;
}

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form, values
// only (EISPACK tred1 lineage). d = diagonal, e = subdiagonal with e[0] = 0.
void tridiagonalize(std::vector<double>& a, std::int64_t n, std::vector<double>& d,
                    std::vector<double>& e) {
    auto A = [&](std::int64_t i, std::int64_t j) -> double& {
        return a[static_cast<std::size_t>(i * n + j)];
    };
    for (std::int64_t i = n - 1; i >= 1; --i) {
        std::int64_t l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (std::int64_t k = 0; k <= l; ++k) scale += std::abs(A(i, k));
            if (scale == 0.0) {
                e[static_cast<std::size_t>(i)] = A(i, l);
            } else {
                for (std::int64_t k = 0; k <= l; ++k) {
                    A(i, k) /= scale;
                    h += A(i, k) * A(i, k);
                }
                double f = A(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[static_cast<std::size_t>(i)] = scale * g;
                h -= f * g;
                A(i, l) = f - g;
                f = 0.0;
                for (std::int64_t j = 0; j <= l; ++j) {
                    double gg = 0.0;
                    for (std::int64_t k = 0; k <= j; ++k) gg += A(j, k) * A(i, k);
                    for (std::int64_t k = j + 1; k <= l; ++k) gg += A(k, j) * A(i, k);
                    e[static_cast<std::size_t>(j)] = gg / h;
                    f += e[static_cast<std::size_t>(j)] * A(i, j);
                }
                double hh = f / (h + h);
                for (std::int64_t j = 0; j <= l; ++j) {
                    f = A(i, j);
                    double gg = e[static_cast<std::size_t>(j)] - hh * f;
                    e[static_cast<std::size_t>(j)] = gg;
                    for (std::int64_t k = 0; k <= j; ++k)
                        A(j, k) -= f * e[static_cast<std::size_t>(k)] + gg * A(i, k);
                }
            }
        } else {
            e[static_cast<std::size_t>(i)] = A(i, l);
        }
    }
    e[0] = 0.0;
    for (std::int64_t i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = A(i, i);
}

// Implicit-shift QL on a tridiagonal matrix (EISPACK tql1 lineage).
// Throws NoConvergence if an eigenvalue needs more than max_iter rot,
// sweeps.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::int64_t n, int max_iter) {
    if (n == 0) return;
    for (std::int64_t i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>(n - 1)] = 0.0;

    // Deflation threshold: relative to the neighbouring diagonal entries with
    // an absolute floor at eps * ||T||, so blocks of (near-)zero diagonal
    // entries still split off (multiplicity-heavy spectra hit this).
    double anorm = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        double row = std::abs(d[static_cast<std::size_t>(i)]);
        if (i > 0) row += std::abs(e[static_cast<std::size_t>(i - 1)]);
        if (i + 1 < n) row += std::abs(e[static_cast<std::size_t>(i)]);
        anorm = std::max(anorm, row);
    }

    for (std::int64_t l = 0; l < n; ++l) {
        int iter = 0;
        std::int64_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                double dd = std::abs(d[static_cast<std::size_t>(m)]) +
                            std::abs(d[static_cast<std::size_t>(m + 1)]);
                if (std::abs(e[static_cast<std::size_t>(m)]) <=
                    std::numeric_limits<double>::epsilon() * std::max(dd, anorm))
                    break;
            }
            if (m != l) {
                if (iter++ == max_iter)
                    throw Error(ErrorKind::NoConvergence,
                                "QL iteration exceeded the sweep cap");
                double g = (d[static_cast<std::size_t>(l + 1)] - d[static_cast<std::size_t>(l)]) /
                           (2.0 * e[static_cast<std::size_t>(l)]);
                double r = std::hypot(g, 1.0);
                g = d[static_cast<std::size_t>(m)] - d[static_cast<std::size_t>(l)] +
                    e[static_cast<std::size_t>(l)] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                std::int64_t i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[static_cast<std::size_t>(i)];
                    double b = c * e[static_cast<std::size_t>(i)];
                    r = std::hypot(f, g);
                    e[static_cast<std::size_t>(i + 1)] = r;
                    if (r == 0.0) {
                        d[static_cast<std::size_t>(i + 1)] -= p;
                        e[static_cast<std::size_t>(m)] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[static_cast<std::size_t>(i + 1)] - p;
                    r = (d[static_cast<std::size_t>(i)] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[static_cast<std::size_t>(i + 1)] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[static_cast<std::size_t>(l)] -= p;
                e[static_cast<std::size_t>(l)] = g;
                e[static_cast<std::size_t>(m)] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

Spectrum symmetric_eigenvalues(DenseSymMatrix m, const EigenOptions& opts) {
    const std::int64_t n = m.n;
    if (n > opts.max_dim)
        throw Error(ErrorKind::GraphTooLarge, "matrix dimension exceeds the eigensolver cap");
    double trace = 0.0, frob2 = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        trace += m.at(i, i);
        for (std::int64_t j = 0; j < n; ++j) {
            if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-12)
                throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric within 1e-12");
            frob2 += m.at(i, j) * m.at(i, j);
        }
    }
    // Symmetrize exactly so the reduction sees one consistent triangle.
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j)
            m.at(i, j) = m.at(j, i) = 0.5 * (m.at(i, j) + m.at(j, i));

    std::vector<double> d(static_cast<std::size_t>(n), 0.0), e(static_cast<std::size_t>(n), 0.0);
    if (n > 0) {
        tridiagonalize(m.a, n, d, e);
        ql_implicit(d, e, n, opts.max_sweeps);
        std::sort(d.begin(), d.end());
    }

    double sum = 0.0, sum2 = 0.0;
    for (double x : d) {
        sum += x;
        sum2 += x * x;
    }
    double tr_resid = std::abs(sum - trace) / (1.0 + std::abs(trace) + frob2);
    double fr_resid = std::abs(sum2 - frob2) / (1.0 + frob2);
    double achieved = std::max(tr_resid, fr_resid);
    if (achieved > 10.0 * opts.tol)
        throw Error(ErrorKind::NoConvergence, "eigenvalue moments drifted past 10*tol");
    return Spectrum{std::move(d), achieved};
}

Spectrum adjacency_spectrum(const SimpleGraph& g, const EigenOptions& opts) {
    return symmetric_eigenvalues(adjacency_matrix(g), opts);
}

Spectrum laplacian_spectrum_numeric(const SimpleGraph& g, const EigenOptions& opts) {
    return symmetric_eigenvalues(laplacian_matrix(g), opts);
}

}  // namespace annigraph
