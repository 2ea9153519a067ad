#include "strongq/families.hpp"

#include <algorithm>

namespace strongq {

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph h_tree() {
  return Graph(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
}

Graph campstool() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}});
}

Graph long_y_tree() {
  return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

Graph three_sun() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
}

bool is_path_graph(const Graph& g) {
  if (g.order() == 0) return false;
  return g.is_connected() && g.is_forest() && g.max_degree() <= 2;
}

std::string to_string(HighQFamily f) {
  switch (f) {
    case HighQFamily::Path: return "Path";
    case HighQFamily::PathPlusIsolatedVertex: return "PathPlusIsolatedVertex";
    case HighQFamily::PathWithInteriorLeaf: return "PathWithInteriorLeaf";
    case HighQFamily::PathWithDistance2Chord: return "PathWithDistance2Chord";
    case HighQFamily::None: return "None";
  }
  return "None";
}

std::optional<std::vector<int>> unique_cycle(const Graph& g) {
  auto comps = g.components();
  if (g.edge_count() != g.order() - static_cast<int>(comps.size()) + 1) return std::nullopt;
  // Exactly one independent cycle; locate it by DFS from each component.
  std::vector<int> parent(g.order(), -2);
  for (const auto& comp : comps) {
    int root = comp[0];
    if (parent[root] != -2) continue;
    std::vector<std::pair<int, int>> stack{{root, -1}};
    while (!stack.empty()) {
      auto [v, from] = stack.back();
      stack.pop_back();
      if (parent[v] != -2) continue;
      parent[v] = from;
      for (int u : g.neighbors(v)) {
        if (u == from) continue;
        if (parent[u] != -2) {
          // Back edge v-u closes the unique cycle: walk both tails up to
          // their meeting vertex, then stitch v..meet..u.
          std::vector<int> pv, pu;
          for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
          for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
          while (pv.size() > 1 && pu.size() > 1 && pv[pv.size() - 2] == pu[pu.size() - 2]) {
            pv.pop_back();
            pu.pop_back();
          }
          std::vector<int> cycle = pv;
          pu.pop_back();  // meeting vertex already in pv
          for (auto it = pu.rbegin(); it != pu.rend(); ++it) cycle.push_back(*it);
          return cycle;
        }
        stack.emplace_back(u, v);
      }
    }
  }
  return std::nullopt;
}

HighQFamily recognize_high_q_family(const Graph& g) {
  int n = g.order();
  if (n == 0) return HighQFamily::None;
  auto comps = g.components();

  if (comps.size() == 2) {
    const auto &c0 = comps[0], &c1 = comps[1];
    if (c0.size() == 1 && is_path_graph(g.induced(c1)))
      return HighQFamily::PathPlusIsolatedVertex;
    if (c1.size() == 1 && is_path_graph(g.induced(c0)))
      return HighQFamily::PathPlusIsolatedVertex;
    return HighQFamily::None;
  }
  if (comps.size() != 1) return HighQFamily::None;

  int m = g.edge_count();
  if (m == n - 1) {  // tree
    if (g.max_degree() <= 2) return HighQFamily::Path;
    if (g.max_degree() != 3) return HighQFamily::None;
    int branch = -1;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 3) {
        if (branch >= 0) return HighQFamily::None;
        branch = v;
      }
    }
    for (int u : g.neighbors(branch))
      if (g.degree(u) == 1) return HighQFamily::PathWithInteriorLeaf;
    return HighQFamily::None;
  }
  if (m == n) {  // exactly one cycle
    auto cyc = unique_cycle(g);
    if (!cyc || cyc->size() != 3) return HighQFamily::None;
    for (int v : *cyc)
      if (g.degree(v) == 2 && is_path_graph(g.remove_vertex(v)))
        return HighQFamily::PathWithDistance2Chord;
    return HighQFamily::None;
  }
  return HighQFamily::None;
}

}  // namespace strongq
