#pragma once

#include <vector>

#include "eccmat/graph.hpp"

namespace eccmat {

/// Eccentricity matrix: the distance matrix with entry (u,v) kept iff
/// d(u,v) = min(ecc(u), ecc(v)), zero otherwise. Symmetric, zero diagonal,
/// every row has at least one nonzero entry.
struct ecc_matrix {
    int n = 0;
    std::vector<int> m; // row-major n*n
    std::vector<int> ecc;

    int at(int u, int v) const { return m[static_cast<size_t>(u) * n + v]; }
};

ecc_matrix eccentricity_matrix(const graph& g);

/// True iff the graph on the nonzero entries is connected, which for a
/// symmetric nonnegative matrix is equivalent to irreducibility.
/// Requires n >= 2.
bool support_is_connected(const ecc_matrix& em);

} // namespace eccmat
