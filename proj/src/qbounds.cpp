#include "strongq/qbounds.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "strongq/exact_matrix.hpp"
#include "strongq/pattern.hpp"
#include "strongq/subgraph.hpp"

namespace strongq {

namespace {

int ceil_div(int a, int b) {
  // works for nonpositive numerators too
  int q = a / b;
  if (a % b != 0 && (a > 0) == (b > 0)) ++q;
  return q;
}

// Bottom-up chain joining: a vertex closes two open child chains into one
// counted path; leftover open chains become paths of their own.
int tree_path_cover(const Graph& g, const std::vector<int>& comp) {
  int count = 0;
  std::vector<int> open_children(g.order(), 0);
  std::vector<bool> visited(g.order(), false);
  // iterative post-order
  std::vector<std::pair<int, int>> stack{{comp[0], -1}};
  std::vector<std::pair<int, int>> order;
  visited[comp[0]] = true;
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    order.emplace_back(v, parent);
    for (int u : g.neighbors(v))
      if (!visited[u]) {
        visited[u] = true;
        stack.emplace_back(u, v);
      }
  }
  std::vector<bool> open(g.order(), false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto [v, parent] = *it;
    int k = open_children[v];
    if (k >= 2) {
      count += 1 + (k - 2);  // one joined path through v, the rest closed as-is
      open[v] = false;
    } else {
      open[v] = true;  // v alone or extending its single open child chain
    }
    if (parent >= 0 && open[v]) ++open_children[parent];
  }
  if (open[comp[0]]) ++count;  // chain left open at the root
  return count;
}

}  // namespace

int forest_path_cover(const Graph& g) {
  if (!g.is_forest()) throw DomainError("forest_path_cover requires a forest");
  int total = 0;
  for (const auto& comp : g.components()) {
    Graph sub = g.induced(comp);
    std::vector<int> all(sub.order());
    for (int i = 0; i < sub.order(); ++i) all[i] = i;
    total += tree_path_cover(sub, all);
  }
  return total;
}

std::optional<std::vector<int>> longest_cycle(const Graph& g) {
  int n = g.order();
  if (n > 16) throw ResourceError("longest_cycle limited to n <= 16");
  std::vector<int> best;
  std::vector<int> path;
  std::vector<bool> used(n, false);

  // Simple paths starting at the smallest cycle vertex; early exit on a
  // Hamiltonian cycle.
  std::function<void(int, int)> extend = [&](int start, int v) {
    if (static_cast<int>(best.size()) == n) return;
    for (int u : g.neighbors(v)) {
      if (u == start && path.size() >= 3 && path.size() > best.size()) best = path;
      if (u <= start || used[u]) continue;
      used[u] = true;
      path.push_back(u);
      extend(start, u);
      path.pop_back();
      used[u] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(best.size()) == n) break;
    used.assign(n, false);
    used[s] = true;
    path = {s};
    extend(s, s);
  }
  if (best.empty()) return std::nullopt;
  return best;
}

namespace {

bool colorable(const Graph& g, int k, std::vector<int>& color, int v) {
  if (v == g.order()) return true;
  int maxc = 0;
  for (int u = 0; u < v; ++u) maxc = std::max(maxc, color[u] + 1);
  for (int c = 0; c < std::min(k, maxc + 1); ++c) {
    bool ok = true;
    for (int u : g.neighbors(v))
      if (u < v && color[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, k, color, v + 1)) return true;
    color[v] = -1;
  }
  return false;
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int k = 1; k <= g.order(); ++k) {
    std::vector<int> color(g.order(), -1);
    if (colorable(g, k, color, 0)) return k;
  }
  return g.order();
}

}  // namespace

int clique_cover_number_exact(const Graph& g) {
  if (g.order() > 10) throw ResourceError("exact clique cover limited to n <= 10");
  return chromatic_number(g.complement());
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> disjoint_k3_or_k13_pair(
    const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> pieces;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))
          pieces.push_back({a, b, c});
  for (int center = 0; center < n; ++center) {
    auto nbrs = g.neighbors(center);
    int d = static_cast<int>(nbrs.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        for (int k = j + 1; k < d; ++k)
          pieces.push_back({center, nbrs[i], nbrs[j], nbrs[k]});
  }
  for (size_t i = 0; i < pieces.size(); ++i)
    for (size_t j = i + 1; j < pieces.size(); ++j) {
      bool disjoint = true;
      for (int u : pieces[i])
        for (int v : pieces[j])
          if (u == v) disjoint = false;
      if (disjoint) return std::make_pair(pieces[i], pieces[j]);
    }
  return std::nullopt;
}

GraphParams brute_force_params(const Graph& g, int trials, unsigned seed) {
  GraphParams p;
  int n = g.order();
  if (n == 0) return p;

  // --- M(G): exact for forests (path cover) and cycles, best-found otherwise.
  if (g.is_forest()) {
    p.M = forest_path_cover(g);
  } else if (n >= 3 && g == cycle_graph(n)) {
    p.M = 2;
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    int best = 1;
    auto try_matrix = [&](const ExactMatrix& a) {
      if (!matches_pattern(a, g).in_class) return;
      best = std::max(best, n - rank_exact(a));
    };
    // structured candidates: adjacency with integer shifts, Laplacian
    ExactMatrix adj(n, n);
    for (auto [u, v] : g.edges()) {
      adj.at(u, v) = ExactScalar(1);
      adj.at(v, u) = ExactScalar(1);
    }
    for (int s = -3; s <= 3; ++s) {
      ExactMatrix shifted = adj - (ExactScalar(s) * ExactMatrix::identity(n));
      try_matrix(shifted);
    }
    ExactMatrix lap = -adj;
    for (int v = 0; v < n; ++v) lap.at(v, v) = ExactScalar(g.degree(v));
    try_matrix(lap);
    for (int t = 0; t < trials; ++t) {
      ExactMatrix a(n, n);
      for (auto [u, v] : g.edges()) {
        int x = entry(rng);
        if (x == 0) x = 1;
        a.at(u, v) = ExactScalar(x);
        a.at(v, u) = ExactScalar(x);
      }
      for (int v = 0; v < n; ++v) a.at(v, v) = ExactScalar(entry(rng));
      try_matrix(a);
    }
    p.M = best;
  }
  p.m_source = Provenance::BruteForced;

  // --- M+(G): greedy orthogonal representations in increasing dimension.
  {
    std::mt19937 rng(seed + 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto try_dimension = [&](int d, const std::vector<int>& order) -> bool {
      // vectors over Q^d; isolated vertices take the zero vector
      std::vector<ExactVector> vecs(n);
      for (int v : order) {
        if (g.degree(v) == 0) {
          vecs[v] = ExactVector(d);
          continue;
        }
        // orthogonality constraints against earlier non-neighbors
        std::vector<const ExactVector*> constraints;
        for (int u : order) {
          if (u == v) break;
          if (!g.has_edge(u, v) && g.degree(u) > 0) constraints.push_back(&vecs[u]);
        }
        ExactMatrix sys(static_cast<int>(constraints.size()), d);
        for (size_t r = 0; r < constraints.size(); ++r)
          for (int c = 0; c < d; ++c) sys.at(int(r), c) = (*constraints[r])[c];
        auto basis = nullspace_basis_exact(sys);
        if (basis.empty()) return false;
        bool placed = false;
        for (int attempt = 0; attempt < 40 && !placed; ++attempt) {
          ExactVector cand(d);
          for (const auto& b : basis) {
            int x = coef(rng);
            for (int c = 0; c < d; ++c) cand[c] += ExactScalar(x) * b[c];
          }
          bool ok = false;
          for (const auto& x : cand)
            if (!x.is_zero()) ok = true;
          if (!ok) continue;
          // earlier neighbors need nonzero inner products
          for (int u : order) {
            if (u == v) break;
            if (!g.has_edge(u, v)) continue;
            ExactScalar dot;
            for (int c = 0; c < d; ++c) dot += vecs[u][c] * cand[c];
            if (dot.is_zero()) {
              ok = false;
              break;
            }
          }
          if (ok) {
            vecs[v] = cand;
            placed = true;
          }
        }
        if (!placed) return false;
      }
      return true;
    };

    std::vector<int> base_order(n);
    for (int i = 0; i < n; ++i) base_order[i] = i;
    int found_d = n;
    for (int d = 0; d <= n; ++d) {
      bool ok = false;
      // non-neighbors first tends to leave room; try a few shuffles
      std::vector<int> order = base_order;
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return g.degree(a) < g.degree(b); });
      ok = try_dimension(d, order);
      for (int t = 0; t < 20 && !ok; ++t) {
        std::shuffle(order.begin(), order.end(), rng);
        ok = try_dimension(d, order);
      }
      if (ok) {
        found_d = d;
        break;
      }
    }
    p.Mplus = n - found_d;
    p.mplus_source = Provenance::BruteForced;
  }

  if (n <= 10) {
    p.clique_cover_number = clique_cover_number_exact(g);
    p.cc_source = Provenance::BruteForced;
  }
  return p;
}

Bound q_lower(const Graph& g, const GraphParams& params) {
  Bound b;
  int n = g.order();
  bool has_edge = g.edge_count() > 0;
  b.rules.push_back({"edge", has_edge ? "G has an edge, so q >= 2 (q = 1 holds exactly for edgeless graphs)"
                                      : "G has no edges, so q >= 1",
                     has_edge ? 2 : 1});
  if (params.M) {
    int m = *params.M;
    b.rules.push_back({"nullity-floor",
                       "q >= ceil(n / M) = ceil(" + std::to_string(n) + "/" + std::to_string(m) +
                           ")",
                       ceil_div(n, m)});
    if (params.Mplus) {
      int mp = *params.Mplus;
      int val = 2 + ceil_div(n - 2 * mp, m);
      b.rules.push_back({"psd-floor",
                         "q >= 2 + ceil((n - 2*M+) / M) = 2 + ceil((" + std::to_string(n) +
                             " - 2*" + std::to_string(mp) + ")/" + std::to_string(m) + ")",
                         val});
    }
  }
  if (params.Mplus && 2 * *params.Mplus < n)
    b.rules.push_back({"psd-half", "M+ < n/2 forces q >= 3", 3});
  b.value = 0;
  for (const auto& r : b.rules) b.value = std::max(b.value, r.value);
  std::sort(b.rules.begin(), b.rules.end(),
            [](const Justification& x, const Justification& y) { return x.value > y.value; });
  return b;
}

Bound q_upper(const Graph& g, const std::vector<Certificate>& corpus, GraphParams params) {
  Bound b;
  int n = g.order();
  b.rules.push_back({"distinct-diagonal",
                     "a diagonal realization with distinct values gives q <= n", n});

  auto comps = g.components();
  if (comps.size() >= 2) {
    size_t biggest = 0;
    for (const auto& c : comps) biggest = std::max(biggest, c.size());
    b.rules.push_back({"disjoint-union",
                       "for disjoint unions q <= max component order = " +
                           std::to_string(biggest),
                       static_cast<int>(biggest)});
  }

  for (const auto& cert : corpus) {
    bool strong = (cert.claims.ssp && *cert.claims.ssp) || (cert.claims.smp && *cert.claims.smp);
    if (!strong || !cert.claims.q) continue;
    if (cert.graph.order() > n) continue;
    auto embed = contains_subgraph(g, cert.graph, SubgraphMode::Isomorphic);
    if (!embed) continue;
    int val = n - cert.graph.order() + *cert.claims.q;
    std::string where;
    for (size_t i = 0; i < embed->size(); ++i)
      where += (i ? "," : "") + std::to_string((*embed)[i] + 1);
    b.rules.push_back({"certificate-embedding",
                       "certificate '" + cert.id + "' embeds at vertices [" + where +
                           "], so q <= n - |H| + q(H) = " + std::to_string(n) + " - " +
                           std::to_string(cert.graph.order()) + " + " +
                           std::to_string(*cert.claims.q),
                       val});
  }

  if (auto cyc = longest_cycle(g)) {
    int k = static_cast<int>(cyc->size());
    b.rules.push_back({"cycle",
                       "a cycle of length " + std::to_string(k) +
                           " gives q <= n - floor(k/2) = " + std::to_string(n - k / 2),
                       n - k / 2});
  }

  if (disjoint_k3_or_k13_pair(g))
    b.rules.push_back({"disjoint-pieces",
                       "two vertex-disjoint K3/K13 pieces give q <= n - 2", n - 2});

  std::optional<int> cc = params.clique_cover_number;
  if (!cc && n <= 10) cc = clique_cover_number_exact(g);
  if (cc)
    b.rules.push_back({"clique-cover",
                       "a cover by " + std::to_string(*cc) +
                           " cliques gives q <= 2 * " + std::to_string(*cc),
                       2 * *cc});

  b.value = n;
  for (const auto& r : b.rules) b.value = std::min(b.value, r.value);
  std::sort(b.rules.begin(), b.rules.end(),
            [](const Justification& x, const Justification& y) { return x.value < y.value; });
  return b;
}

BoundReport q_bounds(const Graph& g, const std::vector<Certificate>& corpus,
                     const GraphParams& params) {
  return {q_lower(g, params), q_upper(g, corpus, params)};
}

std::string to_string(HighQClass c) {
  switch (c) {
    case HighQClass::QEqualsN: return "q_equals_n";
    case HighQClass::QAtLeastNMinus1: return "q_at_least_n_minus_1";
    case HighQClass::QAtMostNMinus2: return "q_at_most_n_minus_2";
  }
  return "";
}

std::optional<ForbiddenWitness> find_forbidden_structure(const Graph& g) {
  int n = g.order();
  auto comps = g.components();

  if (comps.size() >= 3)
    return ForbiddenWitness{"disconnection", "three or more components", {}};
  if (comps.size() == 2) {
    if (comps[0].size() >= 2 && comps[1].size() >= 2)
      return ForbiddenWitness{"disconnection", "two components with two or more vertices", {}};
    const auto& big = comps[0].size() == 1 ? comps[1] : comps[0];
    Graph sub = g.induced(big);
    if (sub.max_degree() >= 3 || !sub.is_forest())
      return ForbiddenWitness{"disconnection",
                              "isolated vertex beside a component that is not a path", big};
  }

  if (auto cyc = longest_cycle(g); cyc && cyc->size() >= 4)
    return ForbiddenWitness{"long-cycle",
                            "cycle of length " + std::to_string(cyc->size()), *cyc};

  if (auto pair = disjoint_k3_or_k13_pair(g)) {
    std::vector<int> verts = pair->first;
    verts.insert(verts.end(), pair->second.begin(), pair->second.end());
    return ForbiddenWitness{"disjoint-pieces", "two vertex-disjoint K3/K13 pieces", verts};
  }

  const std::pair<const char*, Graph> trees[] = {
      {"campstool", campstool()}, {"h-tree", h_tree()},
      {"long-y-tree", long_y_tree()}, {"three-sun", three_sun()}};
  for (const auto& [name, pattern] : trees) {
    if (auto embed = contains_subgraph(g, pattern, SubgraphMode::Isomorphic))
      return ForbiddenWitness{name, std::string(name) + " subgraph", *embed};
  }

  // Cut-vertex nullity argument: components of G - w of total maximum
  // nullity >= 4 force M(G) >= 3.  For forest components the path cover is
  // the exact nullity; anything else safely contributes at least 1.
  for (int w = 0; w < n; ++w) {
    Graph rest = g.remove_vertex(w);
    int total = 0;
    for (const auto& comp : rest.components()) {
      Graph sub = rest.induced(comp);
      total += sub.is_forest() ? forest_path_cover(sub) : 1;
    }
    if (total >= 4)
      return ForbiddenWitness{"cut-vertex",
                              "removing vertex " + std::to_string(w + 1) +
                                  " leaves components of total maximum nullity >= 4",
                              {w}};
  }
  return std::nullopt;
}

Classification classify_high_q(const Graph& g) {
  Classification c;
  c.family = recognize_high_q_family(g);
  if (c.family == HighQFamily::Path) {
    c.verdict = HighQClass::QEqualsN;
    return c;
  }
  if (c.family != HighQFamily::None) {
    c.verdict = HighQClass::QAtLeastNMinus1;
    return c;
  }
  c.verdict = HighQClass::QAtMostNMinus2;
  c.witness = find_forbidden_structure(g);
  if (!c.witness)
    throw Error("classification found no structural family and no forbidden structure");
  return c;
}

}  // namespace strongq
