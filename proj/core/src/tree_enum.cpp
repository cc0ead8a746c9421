#include "eccmat/tree_enum.hpp"

#include <algorithm>

#include "eccmat/canonical.hpp"

namespace eccmat {

namespace {

constexpr int kOrderCap = 20;

// One Beyer-Hedetniemi successor step on a rooted-tree level sequence.
// p, when given, is the regeneration point; otherwise the last entry > 1.
std::optional<std::vector<int>> next_rooted(const std::vector<int>& layout, int p = -1) {
    if (p < 0) {
        p = static_cast<int>(layout.size()) - 1;
        while (p >= 0 && layout[p] == 1) --p;
        if (p <= 0) return std::nullopt;
    }
    if (p == 0) return std::nullopt;
    int q = p - 1;
    while (layout[q] != layout[p] - 1) --q;
    std::vector<int> result = layout;
    for (size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
    return result;
}

struct split_view {
    std::vector<int> left; // root's first subtree, levels shifted down by 1
    std::vector<int> rest; // the tree with that subtree removed
};

split_view split_tree(const std::vector<int>& layout) {
    size_t m = layout.size();
    bool one_seen = false;
    for (size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] == 1) {
            if (one_seen) {
                m = i;
                break;
            }
            one_seen = true;
        }
    }
    split_view sv;
    sv.left.reserve(m - 1);
    for (size_t i = 1; i < m; ++i) sv.left.push_back(layout[i] - 1);
    sv.rest.reserve(layout.size() - m + 1);
    sv.rest.push_back(0);
    for (size_t i = m; i < layout.size(); ++i) sv.rest.push_back(layout[i]);
    return sv;
}

// Wright-Richmond-Odlyzko-McKay step: either certify the candidate as a
// canonical free-tree representation or jump to the next one.
std::optional<std::vector<int>> next_free(const std::vector<int>& candidate) {
    auto sv = split_tree(candidate);
    int left_height = sv.left.empty() ? 0 : *std::max_element(sv.left.begin(), sv.left.end());
    int rest_height = *std::max_element(sv.rest.begin(), sv.rest.end());

    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (sv.left.size() > sv.rest.size())
            valid = false;
        else if (sv.left.size() == sv.rest.size() && sv.left > sv.rest)
            valid = false;
    }
    if (valid) return candidate;

    int p = static_cast<int>(sv.left.size());
    auto jumped = next_rooted(candidate, p);
    if (!jumped) return std::nullopt;
    if (candidate[p] > 2) {
        auto nsv = split_tree(*jumped);
        int h = nsv.left.empty() ? 0 : *std::max_element(nsv.left.begin(), nsv.left.end());
        size_t m = jumped->size();
        for (int v = 1; v <= h + 1; ++v) (*jumped)[m - (h + 2) + v] = v;
    }
    return jumped;
}

graph layout_to_graph(const std::vector<int>& layout) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(layout.size() - 1);
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
        if (!stack.empty()) {
            while (layout[stack.back()] >= layout[i]) stack.pop_back();
            edges.emplace_back(stack.back(), i);
        }
        stack.push_back(i);
    }
    return graph(static_cast<int>(layout.size()), edges);
}

} // namespace

tree_stream::tree_stream(int n, std::optional<int> diameter)
    : n_(n), diameter_(diameter) {
    if (n_ >= 2) {
        // path graph rooted at its center: the first canonical layout
        std::vector<int> layout;
        layout.reserve(n_);
        for (int i = 0; i <= n_ / 2; ++i) layout.push_back(i);
        for (int i = 1; i <= (n_ - 1) / 2; ++i) layout.push_back(i);
        pending_ = std::move(layout);
    }
}

tree_stream tree_stream::all(int n) {
    if (n < 1 || n > kOrderCap)
        raise(errc::order_out_of_range,
              "free-tree enumeration covers 1 <= n <= " + std::to_string(kOrderCap));
    return tree_stream(n, std::nullopt);
}

tree_stream tree_stream::with_diameter(int n, int d) {
    if (n < 1 || n > kOrderCap)
        raise(errc::order_out_of_range,
              "free-tree enumeration covers 1 <= n <= " + std::to_string(kOrderCap));
    if (d < 1 || d > n - 1)
        raise(errc::order_out_of_range,
              "diameter filter needs 1 <= d <= n-1; got d=" + std::to_string(d));
    return tree_stream(n, d);
}

std::optional<graph> tree_stream::next() {
    if (n_ == 1) {
        if (emitted_trivial_) return std::nullopt;
        emitted_trivial_ = true;
        graph g(1, {});
        if (diameter_ && *diameter_ != 0) return std::nullopt;
        return g;
    }
    while (pending_) {
        auto confirmed = next_free(*pending_);
        if (!confirmed) {
            pending_.reset();
            return std::nullopt;
        }
        graph g = layout_to_graph(*confirmed);
        pending_ = next_rooted(*confirmed);
        if (diameter_) {
            if (distances(g).diameter != *diameter_) continue;
        }
        return g;
    }
    return std::nullopt;
}

std::vector<graph> tree_stream::collect() {
    std::vector<graph> out;
    while (auto g = next()) out.push_back(std::move(*g));
    return out;
}

std::vector<std::pair<int, int>> prufer_decode(std::span<const int> code) {
    const int n = static_cast<int>(code.size()) + 2;
    std::vector<int> degree(n, 1);
    for (int v : code) {
        if (v < 0 || v >= n) raise(errc::index_out_of_range, "Pruefer entry");
        ++degree[v];
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : code) {
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return edges;
}

std::set<std::string> labeled_tree_oracle(int n) {
    if (n < 2 || n > 9)
        raise(errc::order_out_of_range, "labeled oracle covers 2 <= n <= 9");
    std::set<std::string> codes;
    std::vector<int> seq(n >= 2 ? n - 2 : 0, 0);
    while (true) {
        codes.insert(ahu_canonical(graph(n, prufer_decode(seq))));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return codes;
}

} // namespace eccmat
