#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "strongq/errors.hpp"

namespace strongq {

// Labeled simple graph on vertices 0..n-1 (external formats are 1-based).
// Adjacency stored as one bitmask row per vertex; n is capped at 64.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int degree(int v) const;
  int max_degree() const;
  std::vector<int> neighbors(int v) const;
  std::uint64_t neighbor_mask(int v) const { return adj_[v]; }

  // Edges / non-edges as (u, v) with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::pair<int, int>> non_edges() const;

  Graph complement() const;
  // Induced subgraph on the given vertices (result labels follow their order).
  Graph induced(const std::vector<int>& verts) const;
  Graph remove_vertex(int v) const;
  // Disjoint union: other's labels are shifted by order().
  Graph disjoint_union(const Graph& other) const;
  // Image under a relabeling perm (vertex v -> perm[v]).
  Graph relabeled(const std::vector<int>& perm) const;

  std::vector<std::vector<int>> components() const;
  bool is_connected() const;
  bool is_forest() const;
  bool is_bipartite() const;

  // Upper-triangle adjacency bits in row-major (0,1),(0,2),...,(n-2,n-1).
  std::uint64_t edge_bits() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  void check_vertex(int v) const;
};

}  // namespace strongq
