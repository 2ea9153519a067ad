#pragma once

#include <Eigen/Dense>
#include <vector>

#include "strongq/exact_matrix.hpp"
#include "strongq/graph.hpp"

namespace strongq {

struct PatternViolation {
  enum class Reason { ZeroOnEdge, NonzeroOnNonedge, Ambiguous };
  int i, j;  // 0-based, i < j
  Reason reason;
};

struct PatternVerdict {
  bool in_class = true;
  std::vector<PatternViolation> violations;
};

// Graph of the off-diagonal support.  Exact mode uses exact zero tests.
Graph pattern_of(const ExactMatrix& a);
// Float mode: |a_ij| <= tol is zero, |a_ij| >= 10*tol is nonzero; the band
// in between reads as ambiguous and pattern_of rejects it with PatternError.
Graph pattern_of(const Eigen::MatrixXd& a, double tol);

PatternVerdict matches_pattern(const ExactMatrix& a, const Graph& g);
PatternVerdict matches_pattern(const Eigen::MatrixXd& a, const Graph& g, double tol);

}  // namespace strongq
