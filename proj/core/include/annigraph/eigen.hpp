#pragma once

#include <cstdint>
#include <vector>

#include "annigraph/simple_graph.hpp"

namespace annigraph {

// Self-contained dense symmetric eigensolver: Householder reduction to
// tridiagonal form followed by the implicit-shift QL iteration, eigenvalues
// only.  Accuracy is on the order of machine epsilon times the matrix norm,
// comfortably inside the 1e-8 comparisons the spectral checks make.

struct DenseSymMatrix {
    std::int64_t n = 0;
    std::vector<double> a;  // row-major n*n

    DenseSymMatrix() = default;
    explicit DenseSymMatrix(std::int64_t dim)
        : n(dim), a(static_cast<std::size_t>(dim * dim), 0.0) {}

    double& at(std::int64_t i, std::int64_t j) { return a[static_cast<std::size_t>(i * n + j)]; }
    double at(std::int64_t i, std::int64_t j) const {
        return a[static_cast<std::size_t>(i * n + j)];
    }
};

DenseSymMatrix adjacency_matrix(const SimpleGraph& g);
DenseSymMatrix laplacian_matrix(const SimpleGraph& g);

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    double tol = 0.0;                 // achieved relative moment residual
};

struct EigenOptions {
    double tol = 1e-10;        // requested accuracy for the moment invariants
    int max_sweeps = 100;      // QL iteration cap per eigenvalue
    std::int64_t max_dim = 3000;
};

/// Eigenvalues of a symmetric matrix, sorted ascending.  The input must be
/// symmetric within 1e-12 entrywise; the achieved Spectrum::tol is the larger
/// of the relative trace and Frobenius residuals, checked against 10*tol.
Spectrum symmetric_eigenvalues(DenseSymMatrix m, const EigenOptions& opts = {});

Spectrum adjacency_spectrum(const SimpleGraph& g, const EigenOptions& opts = {});
Spectrum laplacian_spectrum_numeric(const SimpleGraph& g, const EigenOptions& opts = {});

}  // namespace annigraph
