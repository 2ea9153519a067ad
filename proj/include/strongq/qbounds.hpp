#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strongq/certificates.hpp"
#include "strongq/families.hpp"
#include "strongq/graph.hpp"

namespace strongq {

enum class Provenance { UserSupplied, BruteForced, Unknown };

// Maximum nullity M(G), its positive semidefinite variant M+(G) and the
// clique cover number are inputs with provenance: their exact computation is
// open in general.  The desk-scale brute forcer below supplies values that
// are exact for forests and cycles and best-found otherwise.
struct GraphParams {
  std::optional<int> M, Mplus, clique_cover_number;
  Provenance m_source = Provenance::Unknown;
  Provenance mplus_source = Provenance::Unknown;
  Provenance cc_source = Provenance::Unknown;
};

GraphParams brute_force_params(const Graph& g, int trials = 200, unsigned seed = 12345);

// Minimum path cover of a forest; equals the maximum nullity for forests.
int forest_path_cover(const Graph& g);

// Exhaustive longest cycle (vertex sequence), n <= 16.
std::optional<std::vector<int>> longest_cycle(const Graph& g);

// Exact chromatic number of the complement by branch and bound, n <= 10.
int clique_cover_number_exact(const Graph& g);

// Two vertex-disjoint subgraphs, each a triangle or a K_{1,3}.
std::optional<std::pair<std::vector<int>, std::vector<int>>> disjoint_k3_or_k13_pair(
    const Graph& g);

struct Justification {
  std::string rule;    // stable rule id
  std::string detail;  // human-readable account with the numbers used
  int value = 0;       // the bound this rule yields on its own
};

struct Bound {
  int value = 0;
  std::vector<Justification> rules;  // every applicable rule, best first
};

struct BoundReport {
  Bound lower, upper;
};

// Lower bounds: 1 (2 with an edge); ceil(n/M); 2 + ceil((n-2*M+)/M); and
// q >= 3 when M+ < n/2.  Takes the maximum of the applicable rules.
Bound q_lower(const Graph& g, const GraphParams& params);

// Upper bounds: n always; max component order for disjoint unions; corpus
// certificate embeddings n - |H| + q(H); n - floor(k/2) for a k-cycle;
// n - 2 for two disjoint K3/K13 pieces; twice the clique cover number.
Bound q_upper(const Graph& g, const std::vector<Certificate>& corpus,
              GraphParams params = {});

BoundReport q_bounds(const Graph& g, const std::vector<Certificate>& corpus,
                     const GraphParams& params);

enum class HighQClass { QEqualsN, QAtLeastNMinus1, QAtMostNMinus2 };

std::string to_string(HighQClass c);

struct ForbiddenWitness {
  std::string rule;
  std::string detail;
  std::vector<int> vertices;  // 0-based vertices realizing the structure
};

// Case analysis mirroring the high-q characterization: disconnection rules,
// cycles of length >= 4, disjoint K3/K13 pieces, the four tree/unicyclic
// obstructions, and the cut-vertex nullity argument.
std::optional<ForbiddenWitness> find_forbidden_structure(const Graph& g);

struct Classification {
  HighQClass verdict = HighQClass::QAtMostNMinus2;
  HighQFamily family = HighQFamily::None;
  std::optional<ForbiddenWitness> witness;
};

Classification classify_high_q(const Graph& g);

}  // namespace strongq
