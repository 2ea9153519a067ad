#include "strongq/subgraph.hpp"

#include <algorithm>
#include <numeric>

namespace strongq {

namespace {

bool extend(const Graph& g, const Graph& h, const std::vector<int>& order, size_t depth,
            std::vector<int>& map, std::vector<bool>& used) {
  if (depth == order.size()) return true;
  int u = order[depth];
  for (int v = 0; v < g.order(); ++v) {
    if (used[v] || h.degree(u) > g.degree(v)) continue;
    bool ok = true;
    for (int w : h.neighbors(u)) {
      if (map[w] >= 0 && !g.has_edge(v, map[w])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[u] = v;
    used[v] = true;
    if (extend(g, h, order, depth + 1, map, used)) return true;
    map[u] = -1;
    used[v] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> contains_subgraph(const Graph& g, const Graph& h,
                                                  SubgraphMode mode) {
  if (h.order() > g.order()) return std::nullopt;

  if (mode == SubgraphMode::Identical) {
    for (auto [u, v] : h.edges())
      if (!g.has_edge(u, v)) return std::nullopt;
    std::vector<int> id(h.order());
    std::iota(id.begin(), id.end(), 0);
    return id;
  }

  // Match high-degree vertices first; keeps the tree shallow on dense H.
  std::vector<int> order(h.order());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return h.degree(a) > h.degree(b); });

  std::vector<int> map(h.order(), -1);
  std::vector<bool> used(g.order(), false);
  if (extend(g, h, order, 0, map, used)) return map;
  return std::nullopt;
}

}  // namespace strongq
