#include "strongq/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace strongq {

namespace {

constexpr int kMaxEnumerate = 8;

// Minimizes the edge bitmask over relabelings where new label l receives a
// vertex of the l-th largest degree.  The constraint is degree-sequence
// intrinsic, so isomorphic graphs minimize over identical candidate sets and
// the minimum is a canonical form.
void min_key_search(const Graph& g, std::vector<int>& perm, std::vector<bool>& used,
                    const std::vector<int>& deg, const std::vector<int>& slot_deg,
                    size_t depth, std::uint64_t& best) {
  int n = g.order();
  if (depth == size_t(n)) {
    best = std::min(best, g.relabeled(perm).edge_bits());
    return;
  }
  for (int vertex = 0; vertex < n; ++vertex) {
    if (used[vertex] || deg[vertex] != slot_deg[depth]) continue;
    perm[vertex] = static_cast<int>(depth);
    used[vertex] = true;
    min_key_search(g, perm, used, deg, slot_deg, depth + 1, best);
    used[vertex] = false;
  }
}

}  // namespace

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > kMaxEnumerate)
    throw ResourceError("labeled enumeration limited to n <= " + std::to_string(kMaxEnumerate));
  int bits = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits); ++mask) {
    Graph g(n);
    int k = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++k)
        if ((mask >> k) & 1) g.add_edge(u, v);
    fn(g);
  }
}

std::uint64_t canonical_key(const Graph& g) {
  int n = g.order();
  std::vector<int> deg(n), slot_deg(n);
  for (int v = 0; v < n; ++v) deg[v] = slot_deg[v] = g.degree(v);
  std::sort(slot_deg.begin(), slot_deg.end(), std::greater<int>());
  std::vector<int> perm(n);
  std::vector<bool> used(n, false);
  std::uint64_t best = ~std::uint64_t(0);
  min_key_search(g, perm, used, deg, slot_deg, 0, best);
  return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> dsa(a.order()), dsb(b.order());
  for (int v = 0; v < a.order(); ++v) dsa[v] = a.degree(v);
  for (int v = 0; v < b.order(); ++v) dsb[v] = b.degree(v);
  std::sort(dsa.begin(), dsa.end());
  std::sort(dsb.begin(), dsb.end());
  if (dsa != dsb) return false;
  return canonical_key(a) == canonical_key(b);
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > kMaxEnumerate)
    throw ResourceError("non-isomorphic enumeration limited to 1 <= n <= " +
                        std::to_string(kMaxEnumerate));
  std::vector<Graph> reps{Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::vector<Graph> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& base : reps) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (size - 1)); ++mask) {
        Graph g(size);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 0; u < size - 1; ++u)
          if ((mask >> u) & 1) g.add_edge(u, size - 1);
        std::uint64_t key = canonical_key(g);
        if (seen.insert(key).second) next.push_back(g);
      }
    }
    reps = std::move(next);
  }
  return reps;
}

}  // namespace strongq
