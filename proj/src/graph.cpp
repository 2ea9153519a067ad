#include "strongq/graph.hpp"

#include <bit>
#include <string>

namespace strongq {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n < 0 || n > 64) throw DomainError("graph order must be in 0..64");
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
}

int Graph::edge_count() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m += degree(v);
  return m / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loops are not allowed");
  adj_[u] |= std::uint64_t(1) << v;
  adj_[v] |= std::uint64_t(1) << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint64_t(1) << v);
  adj_[v] &= ~(std::uint64_t(1) << u);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if ((adj_[v] >> u) & 1) out.push_back(u);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<int, int>> Graph::non_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) g.add_edge(u, v);
  return g;
}

Graph Graph::induced(const std::vector<int>& verts) const {
  Graph g(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (has_edge(verts[i], verts[j])) g.add_edge(int(i), int(j));
  return g;
}

Graph Graph::remove_vertex(int v) const {
  check_vertex(v);
  std::vector<int> keep;
  for (int u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph g(n_ + other.n_);
  for (auto [u, v] : edges()) g.add_edge(u, v);
  for (auto [u, v] : other.edges()) g.add_edge(u + n_, v + n_);
  return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (perm.size() != size_t(n_)) throw ShapeError("relabeling size mismatch");
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(n_, false);
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : neighbors(v))
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool Graph::is_forest() const {
  return edge_count() == n_ - static_cast<int>(components().size());
}

bool Graph::is_bipartite() const {
  std::vector<int> color(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : neighbors(v)) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::uint64_t Graph::edge_bits() const {
  if (n_ > 11) throw ResourceError("edge_bits limited to n <= 11");
  std::uint64_t bits = 0;
  int k = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v, ++k)
      if (has_edge(u, v)) bits |= std::uint64_t(1) << k;
  return bits;
}

}  // namespace strongq
