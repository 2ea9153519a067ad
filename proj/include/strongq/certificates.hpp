#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "strongq/exact_matrix.hpp"
#include "strongq/graph.hpp"

namespace strongq {

// Ascending distinct eigenvalues with their multiplicities; exact, so a
// spectrum claim is only representable when all eigenvalues lie in one
// quadratic field.
struct SpectrumClaim {
  std::vector<std::pair<ExactScalar, int>> values;
};

struct Claims {
  std::optional<bool> sap, ssp, smp;
  std::optional<int> q;
  std::optional<SpectrumClaim> spectrum;
  std::optional<std::vector<int>> multiplicity_list;
};

// A stored (graph, matrix, verified claims) triple.  Every claim is
// machine-checkable in exact arithmetic and is re-verified on load.
struct Certificate {
  std::string id;
  Graph graph;
  ExactMatrix matrix;
  Claims claims;
  std::optional<ExactMatrix> witness;  // nonzero X for the failed property
  bool witness_spans_nullspace = false;
  std::string provenance;
};

// Throws CorpusIntegrityError naming the certificate and the failing claim.
void verify_certificate(const Certificate& c);

// --- generators ---------------------------------------------------------

// The flipped-cycle matrix C + C^T on the n-cycle: c_{i,i+1} = 1,
// c_{n,1} = -1.  Claims: q = ceil(n/2), SMP; SSP for n <= 4 only, with
// X = C^2 + (C^2)^T recorded as the failure witness for n >= 5.
Certificate flipped_cycle(int n);

// Diagonal certificate on the edgeless graph; values must be pairwise
// distinct (DistinctnessError otherwise).  Claims: SSP, q = |lambda|.
Certificate diag_distinct(const std::vector<ExactScalar>& lambda);

// Block-diagonal certificate on the disjoint union.  Strong-property claims
// propagate only when both blocks claim them and the spectra are exactly
// disjoint; otherwise they are dropped (never an error).  q is recomputed.
Certificate certificate_direct_sum(const Certificate& c1, const Certificate& c2);

// --- corpus ---------------------------------------------------------------

std::string default_corpus_path();
std::vector<Certificate> load_corpus(const std::string& path = default_corpus_path());
const Certificate& find_certificate(const std::vector<Certificate>& corpus,
                                    const std::string& id);

Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::ordered_json certificate_to_json(const Certificate& c);

}  // namespace strongq
