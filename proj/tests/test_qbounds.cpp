#include "doctest.h"
#include "strongq/certificates.hpp"
#include "strongq/enumerate.hpp"
#include "strongq/qbounds.hpp"

using namespace strongq;

namespace {

const std::vector<Certificate>& corpus() {
  static std::vector<Certificate> c = load_corpus();
  return c;
}

}  // namespace

TEST_CASE("forest path cover equals maximum nullity for small trees") {
  CHECK(forest_path_cover(path_graph(5)) == 1);
  CHECK(forest_path_cover(star_graph(3)) == 2);
  CHECK(forest_path_cover(star_graph(4)) == 3);
  CHECK(forest_path_cover(h_tree()) == 2);
  CHECK(forest_path_cover(Graph(3)) == 3);  // three isolated vertices
  CHECK_THROWS_AS(forest_path_cover(cycle_graph(3)), DomainError);
}

TEST_CASE("brute-forced graph parameters on the key graphs") {
  GraphParams star = brute_force_params(star_graph(3));
  CHECK(star.M == 2);
  CHECK(star.Mplus == 1);
  CHECK(star.m_source == Provenance::BruteForced);

  GraphParams c5 = brute_force_params(cycle_graph(5));
  CHECK(c5.M == 2);

  GraphParams empty = brute_force_params(Graph(3));
  CHECK(empty.M == 3);
  CHECK(empty.Mplus == 3);  // the zero matrix is a PSD member

  GraphParams k4 = brute_force_params(complete_graph(4));
  CHECK(k4.M == 3);  // J - I style realizations reach nullity n - 1
  CHECK(k4.clique_cover_number == 1);
}

TEST_CASE("longest cycle and clique cover") {
  CHECK_FALSE(longest_cycle(path_graph(5)).has_value());
  CHECK(longest_cycle(cycle_graph(6))->size() == 6);
  Graph paw = star_graph(3);
  paw.add_edge(1, 2);
  CHECK(longest_cycle(paw)->size() == 3);

  CHECK(clique_cover_number_exact(complete_graph(5)) == 1);
  CHECK(clique_cover_number_exact(path_graph(4)) == 2);
  CHECK(clique_cover_number_exact(Graph(4)) == 4);
}

TEST_CASE("disjoint K3/K13 pieces") {
  Graph two_triangles = complete_graph(3).disjoint_union(complete_graph(3));
  CHECK(disjoint_k3_or_k13_pair(two_triangles).has_value());
  CHECK_FALSE(disjoint_k3_or_k13_pair(three_sun()).has_value());

  Graph triangle_plus_star = complete_graph(3).disjoint_union(star_graph(3));
  auto found = disjoint_k3_or_k13_pair(triangle_plus_star);
  REQUIRE(found.has_value());
  CHECK(found->first.size() + found->second.size() == 7);
}

TEST_CASE("q_lower on the stated examples") {
  GraphParams star;
  star.M = 2;
  star.Mplus = 1;
  Bound b = q_lower(star_graph(3), star);
  CHECK(b.value == 3);  // 2 + ceil((4 - 2)/2)

  for (int n = 4; n <= 8; ++n) {
    GraphParams p;
    p.M = 2;
    CHECK(q_lower(cycle_graph(n), p).value == (n + 1) / 2);
  }

  CHECK(q_lower(Graph(4), GraphParams{}).value == 1);
  CHECK(q_lower(path_graph(2), GraphParams{}).value == 2);
}

TEST_CASE("q_upper on the stated examples") {
  // 3-sun: the corpus certificate on the same graph gives n - 2 = 4
  Bound sun = q_upper(three_sun(), corpus());
  CHECK(sun.value <= 4);

  // an 8-vertex graph containing C6: cycle rule gives 8 - 3 = 5
  Graph g8(8);
  for (int i = 0; i < 6; ++i) g8.add_edge(i, (i + 1) % 6);
  g8.add_edge(5, 6);
  g8.add_edge(6, 7);
  Bound cyc = q_upper(g8, corpus());
  CHECK(cyc.value <= 5);

  // complement-bipartite graph: clique cover 2 gives q <= 4
  Graph two_cliques = complete_graph(3).disjoint_union(complete_graph(3));
  Graph joined = two_cliques;  // two disjoint triangles already cover it
  Bound cc = q_upper(joined, corpus());
  CHECK(cc.value <= 4);
}

TEST_CASE("path bounds are tight") {
  for (int n = 2; n <= 7; ++n) {
    GraphParams p;
    p.M = 1;
    p.m_source = Provenance::BruteForced;
    CHECK(q_lower(path_graph(n), p).value == n);
    CHECK(q_upper(path_graph(n), corpus()).value == n);
  }
}

TEST_CASE("disjoint unions respect the max-component bound") {
  Graph u = path_graph(4).disjoint_union(cycle_graph(3));
  Bound b = q_upper(u, corpus());
  CHECK(b.value <= 4);
  bool found_rule = false;
  for (const auto& r : b.rules)
    if (r.rule == "disjoint-union") found_rule = true;
  CHECK(found_rule);
}

TEST_CASE("classification on the stated examples") {
  CHECK(classify_high_q(path_graph(6)).verdict == HighQClass::QEqualsN);

  Graph chord = path_graph(5);
  chord.add_edge(1, 3);
  Classification c = classify_high_q(chord);
  CHECK(c.verdict == HighQClass::QAtLeastNMinus1);
  CHECK(c.family == HighQFamily::PathWithDistance2Chord);

  Classification c5 = classify_high_q(cycle_graph(5));
  CHECK(c5.verdict == HighQClass::QAtMostNMinus2);
  REQUIRE(c5.witness.has_value());
  CHECK(c5.witness->rule == "long-cycle");
}

TEST_CASE("characterization cross-check on all graphs with n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : nonisomorphic_graphs(n)) {
      bool family = recognize_high_q_family(g) != HighQFamily::None;
      bool clean = !find_forbidden_structure(g).has_value();
      CHECK(family == clean);
    }
}

namespace {

// Replays a forbidden-structure witness from its raw data alone.
bool witness_reverifies(const Graph& g, const ForbiddenWitness& w) {
  if (w.rule == "disconnection") return g.components().size() >= 2;
  if (w.rule == "long-cycle") {
    if (w.vertices.size() < 4) return false;
    for (size_t i = 0; i < w.vertices.size(); ++i)
      if (!g.has_edge(w.vertices[i], w.vertices[(i + 1) % w.vertices.size()])) return false;
    return true;
  }
  if (w.rule == "disjoint-pieces") return disjoint_k3_or_k13_pair(g).has_value();
  if (w.rule == "cut-vertex") {
    if (w.vertices.size() != 1) return false;
    Graph rest = g.remove_vertex(w.vertices[0]);
    int total = 0;
    for (const auto& comp : rest.components()) {
      Graph sub = rest.induced(comp);
      total += sub.is_forest() ? forest_path_cover(sub) : 1;
    }
    return total >= 4;
  }
  // named subgraph rules carry the image of an isomorphic embedding
  const Graph pattern = w.rule == "campstool" ? campstool()
                        : w.rule == "h-tree" ? h_tree()
                        : w.rule == "long-y-tree" ? long_y_tree()
                                                  : three_sun();
  if (w.vertices.size() != size_t(pattern.order())) return false;
  for (auto [u, v] : pattern.edges())
    if (!g.has_edge(w.vertices[u], w.vertices[v])) return false;
  return true;
}

}  // namespace

TEST_CASE("classification is consistent with the upper-bound engine (n <= 6)") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : nonisomorphic_graphs(n)) {
      Classification c = classify_high_q(g);
      int upper = q_upper(g, corpus()).value;
      if (c.verdict == HighQClass::QEqualsN) CHECK(upper == n);
      if (c.verdict == HighQClass::QAtLeastNMinus1) CHECK(upper >= n - 1);
      if (c.verdict == HighQClass::QAtMostNMinus2) {
        REQUIRE(c.witness.has_value());
        CHECK(witness_reverifies(g, *c.witness));
      }
    }
}
