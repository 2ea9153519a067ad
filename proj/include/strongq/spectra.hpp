#pragma once

#include <Eigen/Dense>
#include <vector>

#include "strongq/exact_matrix.hpp"

namespace strongq {

// Number of distinct eigenvalues, computed exactly as the degree of the
// minimal polynomial (symmetric matrices are diagonalizable, so the minimal
// polynomial is squarefree): the least k with I, A, ..., A^k dependent.
int q_exact(const ExactMatrix& a);

// tr(A^k) for k = 0..kmax, exact.
std::vector<ExactScalar> power_traces(const ExactMatrix& a, int kmax);

// Float eigendecomposition with greedy clustering of near-equal eigenvalues.
struct SpectralData {
  std::vector<double> eigenvalues;       // one representative per cluster, ascending
  std::vector<int> multiplicities;       // cluster sizes
  std::vector<Eigen::MatrixXd> projectors;
  // smallest inter-cluster gap divided by the merge threshold; +inf with a
  // single cluster.  Values below 10 flag the clustering as ambiguous.
  double cluster_gap = 0.0;
  bool ambiguous = false;
  double tol = 0.0;   // the relative tolerance used
  double scale = 0.0; // max(1, ||A||)
};

SpectralData eig_cluster(const Eigen::MatrixXd& a, double tol = 1e-8);

std::vector<int> multiplicity_list(const SpectralData& sd);

}  // namespace strongq
