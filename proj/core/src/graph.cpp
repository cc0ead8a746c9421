#include "eccmat/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace eccmat {

const char* to_string(errc code) {
    switch (code) {
        case errc::disconnected_input: return "disconnected input";
        case errc::self_loop: return "self loop";
        case errc::duplicate_edge: return "duplicate edge";
        case errc::index_out_of_range: return "index out of range";
        case errc::not_a_tree: return "not a tree";
        case errc::malformed_graph6: return "malformed graph6";
        case errc::malformed_json: return "malformed json";
        case errc::malformed_family: return "malformed family spec";
        case errc::unsupported_order: return "unsupported order";
        case errc::order_too_small: return "order too small";
        case errc::order_out_of_range: return "order out of range";
        case errc::parameter_mismatch: return "parameter mismatch";
        case errc::parameter_out_of_range: return "parameter out of range";
        case errc::even_diameter: return "even diameter";
        case errc::convergence_failure: return "convergence failure";
        case errc::reducible_matrix: return "reducible matrix";
    }
    return "unknown error";
}

graph::graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1)
        raise(errc::order_too_small, "graph needs at least one vertex");
    n_ = n;
    adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            raise(errc::index_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside [0," + std::to_string(n) + ")");
        if (u == v)
            raise(errc::self_loop, "vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(adj_[v].begin(), adj_[v].end());
        if (std::adjacent_find(adj_[v].begin(), adj_[v].end()) != adj_[v].end())
            raise(errc::duplicate_edge, "at vertex " + std::to_string(v));
    }
    m_ = static_cast<long long>(edges.size());

    // connectivity check (BFS from 0)
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj_[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n)
        raise(errc::disconnected_input,
              std::to_string(n - reached) + " vertices unreachable from 0");
}

bool graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return graph(n, edges);
}

distance_profile distances(const graph& g) {
    const int n = g.order();
    distance_profile p;
    p.n = n;
    p.dist.assign(static_cast<size_t>(n) * n, -1);
    p.ecc.assign(n, 0);

    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        int* row = p.dist.data() + static_cast<size_t>(s) * n;
        row[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        int far = 0;
        while (head < tail) {
            int u = queue[head++];
            for (int w : g.neighbors(u))
                if (row[w] < 0) {
                    row[w] = row[u] + 1;
                    far = std::max(far, row[w]);
                    queue[tail++] = w;
                }
        }
        p.ecc[s] = far;
    }
    p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
    p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
    return p;
}

bool is_tree(const graph& g) {
    return g.edge_count() == g.order() - 1;
}

} // namespace eccmat
