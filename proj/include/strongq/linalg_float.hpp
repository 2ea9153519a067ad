#pragma once

#include <Eigen/Dense>

#include "strongq/errors.hpp"

namespace strongq {

struct FloatRank {
  int rank = 0;
  // smallest kept singular value / largest dropped one; +inf when nothing
  // was dropped, so a clean full-rank verdict reads as an infinite margin.
  double margin = 0.0;
};

// Numerical rank: number of singular values above tol * sigma_max.
// Deterministic for fixed input.  Throws NumericError on non-finite entries.
FloatRank rank_float(const Eigen::MatrixXd& m, double tol = 1e-9);

}  // namespace strongq
