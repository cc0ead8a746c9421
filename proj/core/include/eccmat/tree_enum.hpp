#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eccmat/graph.hpp"

namespace eccmat {

/// Streams every non-isomorphic free tree of a given order exactly once,
/// in a deterministic order, via successor steps on canonical
/// centroid-rooted level sequences. Hard cap n <= 20. The optional
/// diameter filter is applied post hoc.
class tree_stream {
public:
    static tree_stream all(int n);
    static tree_stream with_diameter(int n, int d);

    std::optional<graph> next();
    std::vector<graph> collect();

private:
    explicit tree_stream(int n, std::optional<int> diameter);

    std::optional<std::vector<int>> pending_; // next candidate layout
    int n_ = 0;
    std::optional<int> diameter_;
    bool emitted_trivial_ = false; // n == 1 bookkeeping
};

inline tree_stream free_trees(int n) { return tree_stream::all(n); }
inline tree_stream trees_with_diameter(int n, int d) {
    return tree_stream::with_diameter(n, d);
}

/// Decodes a Pruefer sequence (length n-2, entries in [0,n)) into the edge
/// list of the labeled tree on n vertices it encodes.
std::vector<std::pair<int, int>> prufer_decode(std::span<const int> code);

/// Independent small-order oracle: enumerate all n^(n-2) labeled trees via
/// Pruefer sequences, canonicalize, and return the deduplicated code set.
/// Cost guard: 2 <= n <= 9.
std::set<std::string> labeled_tree_oracle(int n);

} // namespace eccmat
