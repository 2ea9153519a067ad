#include "strongq/pattern.hpp"

#include <cmath>

namespace strongq {

namespace {

void require_symmetric(const ExactMatrix& a) {
  if (!a.is_symmetric()) throw ShapeError("pattern operations require a symmetric matrix");
}

void require_symmetric(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) throw ShapeError("pattern operations require a square matrix");
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > tol * scale)
    throw ShapeError("pattern operations require a symmetric matrix");
}

}  // namespace

Graph pattern_of(const ExactMatrix& a) {
  require_symmetric(a);
  Graph g(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) g.add_edge(i, j);
  return g;
}

Graph pattern_of(const Eigen::MatrixXd& a, double tol) {
  require_symmetric(a, tol);
  Graph g(static_cast<int>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) {
      double v = std::abs(a(i, j));
      if (v >= 10 * tol)
        g.add_edge(i, j);
      else if (v > tol)
        throw PatternError("ambiguous entry (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") in float pattern extraction");
    }
  return g;
}

PatternVerdict matches_pattern(const ExactMatrix& a, const Graph& g) {
  require_symmetric(a);
  if (a.rows() != g.order()) throw ShapeError("matrix size does not match graph order");
  PatternVerdict v;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) {
      bool nonzero = !a.at(i, j).is_zero();
      bool edge = g.has_edge(i, j);
      if (nonzero && !edge)
        v.violations.push_back({i, j, PatternViolation::Reason::NonzeroOnNonedge});
      else if (!nonzero && edge)
        v.violations.push_back({i, j, PatternViolation::Reason::ZeroOnEdge});
    }
  v.in_class = v.violations.empty();
  return v;
}

PatternVerdict matches_pattern(const Eigen::MatrixXd& a, const Graph& g, double tol) {
  require_symmetric(a, tol);
  if (a.rows() != g.order()) throw ShapeError("matrix size does not match graph order");
  PatternVerdict v;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) {
      double x = std::abs(a(i, j));
      bool edge = g.has_edge(i, j);
      if (x > tol && x < 10 * tol)
        v.violations.push_back({i, j, PatternViolation::Reason::Ambiguous});
      else if (x >= 10 * tol && !edge)
        v.violations.push_back({i, j, PatternViolation::Reason::NonzeroOnNonedge});
      else if (x <= tol && edge)
        v.violations.push_back({i, j, PatternViolation::Reason::ZeroOnEdge});
    }
  v.in_class = v.violations.empty();
  return v;
}

}  // namespace strongq
