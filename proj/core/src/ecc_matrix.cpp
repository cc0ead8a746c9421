#include "eccmat/ecc_matrix.hpp"

namespace eccmat {

ecc_matrix eccentricity_matrix(const graph& g) {
    auto dp = distances(g);
    const int n = dp.n;
    ecc_matrix em;
    em.n = n;
    em.ecc = dp.ecc;
    em.m.assign(static_cast<size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int d = dp.at(u, v);
            if (d == std::min(dp.ecc[u], dp.ecc[v])) {
                em.m[static_cast<size_t>(u) * n + v] = d;
                em.m[static_cast<size_t>(v) * n + u] = d;
            }
        }
    return em;
}

namespace detail {

bool support_connected(const std::vector<int>& m, int n) {
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        const int* row = m.data() + static_cast<size_t>(u) * n;
        for (int v = 0; v < n; ++v)
            if (row[v] != 0 && !seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == n;
}

} // namespace detail

bool support_is_connected(const ecc_matrix& em) {
    if (em.n < 2)
        raise(errc::order_too_small, "irreducibility is considered for n >= 2");
    return detail::support_connected(em.m, em.n);
}

} // namespace eccmat
