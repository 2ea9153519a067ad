#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strongq/graph.hpp"

namespace strongq {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, center 0
Graph complete_graph(int n);

// The four q = |G|-2 witnesses: H tree, campstool, long Y tree, 3-sun.
Graph h_tree();
Graph campstool();
Graph long_y_tree();
Graph three_sun();

bool is_path_graph(const Graph& g);

// The structural families with q(G) >= |G|-1: a path; a path plus an
// isolated vertex; a path with one leaf on an interior vertex; a path with
// an extra edge joining two vertices at distance 2.
enum class HighQFamily { Path, PathPlusIsolatedVertex, PathWithInteriorLeaf,
                         PathWithDistance2Chord, None };

std::string to_string(HighQFamily f);

// Deterministic structural recognition (degree sequence, unique cycle
// length, leaf attachment); the forbidden-subgraph route elsewhere is the
// independent cross-check.
HighQFamily recognize_high_q_family(const Graph& g);

// Vertices of the unique cycle when the graph has exactly one cycle.
std::optional<std::vector<int>> unique_cycle(const Graph& g);

}  // namespace strongq
