#pragma once

#include <Eigen/Dense>
#include <vector>

#include "strongq/graph.hpp"
#include "strongq/spectra.hpp"

namespace strongq {

// Closed-form dimensions of the three tangent spaces at a symmetric matrix:
//   rank manifold:          C(n+1,2) - C(n-r+1,2)
//   isospectral manifold:   C(n,2) - sum C(m_i,2)
//   multiplicity manifold:  the spectral dimension + q
struct TangentDims {
  int n = 0;
  int r = 0;  // rank
  int q = 0;
  std::vector<int> m;  // ordered multiplicity list
  int dim_rank_tangent = 0;
  int dim_spec_tangent = 0;
  int dim_mult_tangent = 0;
};

TangentDims tangent_dims(int n, int rank, const std::vector<int>& mult_list);
TangentDims tangent_dims(const Eigen::MatrixXd& a, double tol = 1e-8);

// Numerically generated tangent spans, for cross-checking the closed forms:
// columns are vec of the generators over the full n^2 coordinates.
Eigen::MatrixXd rank_tangent_span(const Eigen::MatrixXd& a);   // A E_ij + E_ij^T A
Eigen::MatrixXd spec_tangent_span(const Eigen::MatrixXd& a);   // A K_ij - K_ij A
Eigen::MatrixXd mult_tangent_span(const Eigen::MatrixXd& a, int q);  // + A^k columns

// Necessary edge-count conditions for transversality.  The SAP bound uses the
// bipartite adjustment; an excluded flag means the inequality fails, ruling
// the corresponding transversal intersection out.
struct EdgeBoundCheck {
  bool applicable = true;  // false for scalar matrices (q == 1)
  int edge_count = 0;
  bool bipartite = false;
  int sap_bound = 0;
  bool sap_excluded = false;
  int ssp_bound = 0;
  bool ssp_excluded = false;
  int smp_bound = 0;
  bool smp_excluded = false;
};

EdgeBoundCheck edge_bound_check(const Graph& g, const std::vector<int>& mult_list, int rank);
EdgeBoundCheck edge_bound_check(const Graph& g, const Eigen::MatrixXd& a, double tol = 1e-8);

}  // namespace strongq
