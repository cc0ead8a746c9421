#pragma once

#include <span>
#include <utility>
#include <vector>

#include "eccmat/errors.hpp"

namespace eccmat {

/// Undirected simple connected graph with stable 0-based vertex indices.
/// Construction validates simplicity and connectivity, so every instance
/// satisfies the invariants; all accessors are const.
class graph {
public:
    graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    long long edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::span<const int> neighbors(int v) const { return adj_[v]; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    bool has_edge(int u, int v) const;

    /// Edge list with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// All-pairs shortest-path data of a connected graph (hop counts).
struct distance_profile {
    int n = 0;
    std::vector<int> dist; // row-major n*n
    std::vector<int> ecc;
    int diameter = 0;
    int radius = 0;

    int at(int u, int v) const { return dist[static_cast<size_t>(u) * n + v]; }
};

/// BFS from every vertex.
distance_profile distances(const graph& g);

/// True iff |E| = n-1 (the graph is connected by construction).
bool is_tree(const graph& g);

} // namespace eccmat
