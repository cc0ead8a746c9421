#pragma once

#include <span>
#include <vector>

#include "eccmat/ecc_matrix.hpp"

namespace eccmat {

/// Full spectrum of a symmetric matrix, sorted descending. Ties keep
/// diagonal-index order. iterations counts Jacobi sweeps.
struct spectrum {
    std::vector<double> values;
    int iterations = 0;
    double offdiag_residual = 0.0;

    double largest() const { return values.front(); }
    double least() const { return values.back(); }
};

/// Cyclic Jacobi on a dense symmetric matrix (row-major, order n).
/// Sweeps run until the off-diagonal norm drops below 1e-12 times the
/// Frobenius norm; exceeding the sweep cap signals a bug and throws
/// convergence_failure.
spectrum jacobi_eigenvalues(std::span<const double> matrix, int n);

spectrum eigenvalues_symmetric(const ecc_matrix& em);

struct perron_result {
    double value = 0.0;
    std::vector<double> vector; // entrywise positive, unit 2-norm
    int iterations = 0;
};

/// Dominant eigenpair by power iteration on the diagonally shifted matrix
/// (shift = max row sum, which makes the Perron value strictly dominant).
/// Relative tolerance 1e-12 on the eigenvalue. Requires an irreducible
/// matrix, i.e. support_is_connected.
perron_result perron_pair(const ecc_matrix& em);

/// det(lambda*I - eps(G)) by LU elimination with partial pivoting.
double char_poly_eval(const ecc_matrix& em, double lambda);

} // namespace eccmat
