#include "eccmat/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eccmat {

namespace {

double offdiag_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (p != q) s += a[static_cast<size_t>(p) * n + q] * a[static_cast<size_t>(p) * n + q];
    return std::sqrt(s);
}

std::vector<double> to_double(const ecc_matrix& em) {
    return std::vector<double>(em.m.begin(), em.m.end());
}

} // namespace

spectrum jacobi_eigenvalues(std::span<const double> matrix, int n) {
    std::vector<double> a(matrix.begin(), matrix.end());
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    double fro = 0.0;
    for (double v : a) fro += v * v;
    fro = std::sqrt(fro);

    const double stop = 1e-12 * fro;
    double off = offdiag_norm(a, n);
    int sweeps = 0;
    constexpr int kMaxSweeps = 64;

    while (off > stop && off > 0.0) {
        if (++sweeps > kMaxSweeps)
            raise(errc::convergence_failure,
                  "Jacobi exceeded " + std::to_string(kMaxSweeps) + " sweeps");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                double app = at(p, p), aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = at(p, k) = akp - s * (akq + tau * akp);
                    at(k, q) = at(q, k) = akq + s * (akp - tau * akq);
                }
            }
        }
        off = offdiag_norm(a, n);
    }

    std::vector<std::pair<double, int>> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = {at(i, i), i};
    std::sort(diag.begin(), diag.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });

    spectrum sp;
    sp.values.resize(n);
    for (int i = 0; i < n; ++i) sp.values[i] = diag[i].first;
    sp.iterations = sweeps;
    sp.offdiag_residual = off;
    return sp;
}

spectrum eigenvalues_symmetric(const ecc_matrix& em) {
    return jacobi_eigenvalues(to_double(em), em.n);
}

perron_result perron_pair(const ecc_matrix& em) {
    const int n = em.n;
    if (n < 2)
        raise(errc::order_too_small, "Perron pair needs n >= 2");
    if (!support_is_connected(em))
        raise(errc::reducible_matrix, "eccentricity matrix support is disconnected");

    // Shift so the Perron value strictly dominates in modulus even when the
    // spectrum is symmetric about zero (bipartite support).
    double shift = 0.0;
    for (int u = 0; u < n; ++u) {
        double row = 0.0;
        for (int v = 0; v < n; ++v) row += em.at(u, v);
        shift = std::max(shift, row);
    }

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double value = 0.0, prev = -1.0;
    constexpr int kMaxIters = 2'000'000;
    constexpr double kRelTol = 1e-12;
    int iter = 0;
    for (; iter < kMaxIters; ++iter) {
        for (int u = 0; u < n; ++u) {
            double s = shift * x[u];
            const int* row = em.m.data() + static_cast<size_t>(u) * n;
            for (int v = 0; v < n; ++v) s += row[v] * x[v];
            y[u] = s;
        }
        value = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
        for (int u = 0; u < n; ++u) x[u] = y[u] / norm;
        if (std::abs(value - prev) <= kRelTol * std::abs(value)) break;
        prev = value;
    }
    if (iter == kMaxIters)
        raise(errc::convergence_failure, "power iteration hit the iteration cap");

    perron_result r;
    r.value = value - shift;
    r.vector = std::move(x);
    r.iterations = iter + 1;
    return r;
}

double char_poly_eval(const ecc_matrix& em, double lambda) {
    const int n = em.n;
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i) * n + j] = (i == j ? lambda : 0.0) - em.at(i, j);

    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
        if (at(pivot, col) == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(at(pivot, j), at(col, j));
            det = -det;
        }
        det *= at(col, col);
        for (int r = col + 1; r < n; ++r) {
            double f = at(r, col) / at(col, col);
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) at(r, j) -= f * at(col, j);
        }
    }
    return det;
}

} // namespace eccmat
