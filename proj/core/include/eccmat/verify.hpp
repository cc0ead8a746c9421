#pragma once

#include <cstdint>

#include "eccmat/report.hpp"

namespace eccmat {

struct verify_options {
    int jobs = 1;                 // worker threads for tree sweeps; 0 = hardware
    std::uint64_t seed = 20240601; // seed for sampled checks, recorded in reports
    double eq_tol = 1e-8;         // equality/boundary tolerance, >= 1e-14
};

/// Exhaustive sweep over all trees 3 <= n <= n_max: eps_1 >= d,
/// eps_n <= -d, eps_n <= -2 with equality exactly on stars, irreducibility
/// of eps(T), trace/Frobenius spectrum identities, plus seeded
/// entrywise-domination samples (rho(N) <= rho(M) for N <= M).
verification_report verify_basic_bounds(int n_max, int domination_samples = 100,
                                        const verify_options& opts = {});

/// Over all trees of diameter 3 on n vertices, eps_1 is maximized uniquely
/// by the balanced broom D_{n,3}^{floor((n-4)/2),ceil((n-4)/2)}.
verification_report verify_diam3_max(int n, const verify_options& opts = {});

/// Over all trees of odd diameter d on n vertices, the eps_1-argmax is one
/// of D_{n,d}^{0,n-d-1} and the balanced broom, and its value matches the
/// larger closed-form candidate.
verification_report verify_odd_diam_max(int n, int d, const verify_options& opts = {});

/// The trees with least eps-eigenvalue in [-2-sqrt(13), -2*sqrt(2)) among
/// all trees 3 <= n <= n_max are exactly P_4, D_{5,3}^{0,1}, H_{0,2..4},
/// H_{1,2..3}, H_{2,2}.
verification_report verify_least_interval(int n_max, const verify_options& opts = {});

/// Pendant-path transfer (eps_1(T) <= eps_1(T~), equality iff the branch
/// depth equals its spine position) and the caterpillar pendant move
/// (strict increase), over all trees of odd diameter d on n vertices and
/// all admissible transform instances.
verification_report verify_transforms(int n, int d, const verify_options& opts = {});

/// Agreement grids between every closed form and direct eigensolves, plus
/// the least-eigenvalue equality-condition equivalence grid.
verification_report verify_closed_forms(const verify_options& opts = {});

/// Seeded random (tree, principal submatrix) interlacing samples.
verification_report verify_interlacing(int samples, const verify_options& opts = {});

} // namespace eccmat
