#pragma once

#include <string>
#include <vector>

#include "eccmat/graph.hpp"

namespace eccmat {

/// The one or two central vertices of a tree (leaf peeling).
std::vector<int> tree_centers(const graph& g);

/// AHU canonical code of a tree: equal codes iff isomorphic.
/// The tree is rooted at its center; when there are two centers the
/// lexicographically smaller of the two rooted codes is returned.
std::string ahu_canonical(const graph& g);

} // namespace eccmat
