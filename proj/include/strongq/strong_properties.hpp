#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "strongq/exact_matrix.hpp"
#include "strongq/graph.hpp"
#include "strongq/linalg_float.hpp"
#include "strongq/pattern.hpp"
#include "strongq/spectra.hpp"

namespace strongq {

enum class StrongProperty { SAP, SSP, SMP };

std::string to_string(StrongProperty p);
StrongProperty property_from_string(const std::string& s);

enum class VerifyPath { RankCriterion, Definitional };
enum class VerifyMode { Exact, Float };

struct StrongPropertyReport {
  StrongProperty property = StrongProperty::SSP;
  bool verdict = false;
  int p = 0;     // number of non-edges of G (edges of the complement)
  int rank = 0;  // rank of the constraint matrix (verdict = (rank == p))
  std::optional<ExactMatrix> witness;  // exact nonzero X on a failed verdict
  VerifyMode mode = VerifyMode::Exact;
  std::optional<double> margin;        // float mode only
  VerifyPath path = VerifyPath::RankCriterion;
  bool ambiguous = false;  // float SMP with a shaky eigenvalue clustering
  int q_used = -1;         // SMP: number of distinct eigenvalues used
};

// --- constraint matrices of the rank criteria ------------------------------
// Rows are indexed by the non-edges of G (lexicographic); columns by the
// generators of the relevant tangent space.
//   SAP: vec(A E_ij + E_ij^T A) over all n^2 pairs (i,j), lexicographic.
//   SSP: vec([A, K_ij]) over K_ij = E_ij - E_ji, 1 <= i < j <= n.
//   SMP: the SSP columns followed by vec(A^k), k = 0..q-1.
ExactMatrix sap_constraint_matrix(const ExactMatrix& a, const Graph& g);
ExactMatrix ssp_constraint_matrix(const ExactMatrix& a, const Graph& g);
ExactMatrix smp_constraint_matrix(const ExactMatrix& a, const Graph& g, int q);
Eigen::MatrixXd sap_constraint_matrix(const Eigen::MatrixXd& a, const Graph& g);
Eigen::MatrixXd ssp_constraint_matrix(const Eigen::MatrixXd& a, const Graph& g);
Eigen::MatrixXd smp_constraint_matrix(const Eigen::MatrixXd& a, const Graph& g, int q);

// --- verifiers --------------------------------------------------------------
// Exact rank-criterion verdicts; on failure the witness is recovered from the
// definitional nullspace system.  Throws PatternError when pattern_of(A) != G.
StrongPropertyReport verify_sap(const ExactMatrix& a, const Graph& g);
StrongPropertyReport verify_ssp(const ExactMatrix& a, const Graph& g);
StrongPropertyReport verify_smp(const ExactMatrix& a, const Graph& g);
StrongPropertyReport verify_property(StrongProperty p, const ExactMatrix& a, const Graph& g);

// Independent oracle: assembles the full definitional linear system on the
// unknown entries of symmetric X and decides by exact nullspace computation.
StrongPropertyReport verify_by_definition(const ExactMatrix& a, const Graph& g,
                                          StrongProperty prop);

// Float-mode verdicts via rank_float on the same constraint matrices.
StrongPropertyReport verify_sap(const Eigen::MatrixXd& a, const Graph& g, double tol = 1e-9);
StrongPropertyReport verify_ssp(const Eigen::MatrixXd& a, const Graph& g, double tol = 1e-9);
StrongPropertyReport verify_smp(const Eigen::MatrixXd& a, const Graph& g, double tol = 1e-9);

// Checks that the witness solves its defining system exactly and is nonzero.
bool witness_is_valid(const ExactMatrix& a, const Graph& g, StrongProperty prop,
                      const ExactMatrix& x);

// --- Gershgorin sufficient test ---------------------------------------------
enum class GershgorinVerdict { ProvedSSP, Inconclusive };

struct GershgorinReport {
  GershgorinVerdict verdict = GershgorinVerdict::Inconclusive;
  Graph intersection_graph;  // i ~ j iff Gershgorin discs i and j intersect
};

// ProvedSSP iff the Gershgorin intersection graph is identically a subgraph
// of pattern_of(A).  Inconclusive never asserts SSP failure.
GershgorinReport gershgorin_ssp(const ExactMatrix& a);
GershgorinReport gershgorin_ssp(const Eigen::MatrixXd& a, double tol = 1e-9);

// --- direct sums -------------------------------------------------------------
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

struct DirectSumReport {
  StrongPropertyReport combined;
  bool block1_verdict = false;
  bool block2_verdict = false;
  bool spectra_disjoint = false;
  bool ambiguous = false;  // float: spectra too close to call at tolerance
};

// A1 (+) A2 has the SSP/SMP iff both blocks do and their spectra are
// disjoint.  Exact mode tests disjointness by q_exact(A1 (+) A2) =
// q_exact(A1) + q_exact(A2); float mode by cluster separation.
DirectSumReport direct_sum_verdict(StrongProperty prop, const ExactMatrix& a1,
                                   const ExactMatrix& a2);
DirectSumReport direct_sum_verdict(StrongProperty prop, const Eigen::MatrixXd& a1,
                                   const Eigen::MatrixXd& a2, double tol = 1e-8);

}  // namespace strongq
