#pragma once

#include <string>
#include <string_view>

#include "eccmat/graph.hpp"

namespace eccmat {

/// Standard header-free graph6 text for graphs of order <= 62.
std::string graph6_encode(const graph& g);

/// Decodes one graph6 string (an optional ">>graph6<<" prefix is stripped).
/// The decoded edge set goes through the usual graph validation, so
/// disconnected inputs are rejected here as well.
graph graph6_decode(std::string_view text);

/// JSON edge list {"n": int, "edges": [[u,v], ...]}, the human-editable
/// exchange format.
std::string graph_to_json(const graph& g);
graph graph_from_json(std::string_view text);

} // namespace eccmat
