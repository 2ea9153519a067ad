#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "strongq/graph.hpp"

namespace strongq {

// All 2^C(n,2) labeled graphs, streamed in edge-bitmask order.
// Desk scale: throws ResourceError for n > 8.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

// Canonical non-isomorphic representatives, built by vertex augmentation.
std::vector<Graph> nonisomorphic_graphs(int n);

// Minimum edge-bitmask over all degree-preserving relabelings.
std::uint64_t canonical_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace strongq
