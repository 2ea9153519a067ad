#pragma once

#include <optional>
#include <vector>

#include "strongq/graph.hpp"

namespace strongq {

enum class SubgraphMode { Identical, Isomorphic };

// Identical mode: E(H) must sit inside E(G) under the very same labels.
// Isomorphic mode: backtracking search for an injective vertex map carrying
// E(H) into E(G); the witness maps H-vertex -> G-vertex (identity map in
// identical mode).
std::optional<std::vector<int>> contains_subgraph(const Graph& g, const Graph& h,
                                                  SubgraphMode mode);

}  // namespace strongq
