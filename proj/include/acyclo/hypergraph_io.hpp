#pragma once

// Hypergraph documents: {"n": 4, "d": 2, "edges": [[1,2,3], [1,2,4]]}.
// Vertices are 1-based; each edge lists d+1 distinct vertices in any order.

#include "acyclo/complex.hpp"

#include <string>
#include <string_view>

namespace acyclo {

/// Throws ParseError naming the offending field or edge.
Hypergraph parse_hypergraph(std::string_view text);

/// Canonical compact document (edges sorted, vertices ascending).
std::string serialize_hypergraph(const Hypergraph& h);

}  // namespace acyclo
