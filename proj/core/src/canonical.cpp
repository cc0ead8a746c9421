#include "eccmat/canonical.hpp"

#include <algorithm>

namespace eccmat {

std::vector<int> tree_centers(const graph& g) {
    if (!is_tree(g)) raise(errc::not_a_tree, "centers are defined for trees here");
    const int n = g.order();
    if (n == 1) return {0};
    if (n == 2) return {0, 1};

    std::vector<int> degree(n), order;
    order.reserve(n);
    for (int v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] == 1) order.push_back(v);
    }
    // peel leaves layer by layer; the last one or two vertices remain
    size_t head = 0;
    int remaining = n;
    while (remaining > 2) {
        size_t layer_end = order.size();
        remaining -= static_cast<int>(layer_end - head);
        for (; head < layer_end; ++head)
            for (int w : g.neighbors(order[head]))
                if (--degree[w] == 1) order.push_back(w);
    }
    std::vector<int> centers(order.begin() + head, order.end());
    std::sort(centers.begin(), centers.end());
    return centers;
}

namespace {

std::string ahu_rooted(const graph& g, int root, int parent) {
    std::vector<std::string> child_codes;
    for (int w : g.neighbors(root))
        if (w != parent) child_codes.push_back(ahu_rooted(g, w, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

} // namespace

std::string ahu_canonical(const graph& g) {
    auto centers = tree_centers(g);
    std::string best = ahu_rooted(g, centers[0], -1);
    if (centers.size() == 2) {
        std::string other = ahu_rooted(g, centers[1], -1);
        if (other < best) best = std::move(other);
    }
    return best;
}

} // namespace eccmat
