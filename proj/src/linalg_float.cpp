#include "strongq/linalg_float.hpp"

#include <limits>

namespace strongq {

FloatRank rank_float(const Eigen::MatrixXd& m, double tol) {
  if (tol <= 0) throw DomainError("rank_float requires tol > 0");
  if (!m.allFinite()) throw NumericError("non-finite entries in rank_float input");
  const double inf = std::numeric_limits<double>::infinity();
  if (m.rows() == 0 || m.cols() == 0) return {0, inf};

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  double smax = sv(0);
  if (smax == 0.0) return {0, inf};

  double thresh = tol * smax;
  int rank = 0;
  while (rank < sv.size() && sv(rank) > thresh) ++rank;
  if (rank == sv.size()) return {rank, inf};
  double dropped = sv(rank);
  if (dropped == 0.0) return {rank, inf};
  double kept = rank > 0 ? sv(rank - 1) : smax;
  return {rank, kept / dropped};
}

}  // namespace strongq
