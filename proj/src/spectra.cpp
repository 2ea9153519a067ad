#include "strongq/spectra.hpp"

#include <limits>

namespace strongq {

namespace {

// Columns are vec(A^0), ..., vec(A^k); dependence is tested by exact rank.
ExactMatrix vec_powers(const std::vector<ExactMatrix>& powers) {
  int n = powers[0].rows();
  ExactMatrix m(n * n, static_cast<int>(powers.size()));
  for (size_t c = 0; c < powers.size(); ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i * n + j, int(c)) = powers[c].at(i, j);
  return m;
}

}  // namespace

int q_exact(const ExactMatrix& a) {
  if (!a.is_symmetric()) throw ShapeError("q_exact requires a symmetric matrix");
  int n = a.rows();
  if (n == 0) return 0;
  std::vector<ExactMatrix> powers{ExactMatrix::identity(n)};
  for (int k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * a);
    if (rank_exact(vec_powers(powers)) < k + 1) return k;
  }
  return n;  // unreachable: Cayley-Hamilton forces dependence at k = n
}

std::vector<ExactScalar> power_traces(const ExactMatrix& a, int kmax) {
  if (!a.is_square()) throw ShapeError("power_traces requires a square matrix");
  std::vector<ExactScalar> out;
  ExactMatrix p = ExactMatrix::identity(a.rows());
  out.push_back(p.trace());
  for (int k = 1; k <= kmax; ++k) {
    p = p * a;
    out.push_back(p.trace());
  }
  return out;
}

SpectralData eig_cluster(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) throw ShapeError("eig_cluster requires a square matrix");
  if (!a.allFinite()) throw NumericError("non-finite entries in eig_cluster input");
  int n = static_cast<int>(a.rows());
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > tol * scale)
    throw ShapeError("eig_cluster requires a symmetric matrix");

  SpectralData sd;
  sd.tol = tol;
  sd.scale = scale;
  sd.cluster_gap = std::numeric_limits<double>::infinity();
  if (n == 0) return sd;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (a + a.transpose()));
  const auto& ev = es.eigenvalues();  // ascending
  const auto& vecs = es.eigenvectors();

  double merge = tol * scale;
  std::vector<std::pair<int, int>> blocks;  // [first, last] eigen index per cluster
  int first = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || ev(i) - ev(i - 1) > merge) {
      blocks.emplace_back(first, i - 1);
      first = i;
    }
  }
  for (auto [lo, hi] : blocks) {
    int mult = hi - lo + 1;
    double rep = ev.segment(lo, mult).mean();
    sd.eigenvalues.push_back(rep);
    sd.multiplicities.push_back(mult);
    Eigen::MatrixXd block = vecs.middleCols(lo, mult);
    sd.projectors.push_back(block * block.transpose());
  }
  for (size_t j = 1; j < blocks.size(); ++j) {
    double gap = ev(blocks[j].first) - ev(blocks[j - 1].second);
    sd.cluster_gap = std::min(sd.cluster_gap, gap / merge);
  }
  sd.ambiguous = sd.cluster_gap < 10.0;
  return sd;
}

std::vector<int> multiplicity_list(const SpectralData& sd) { return sd.multiplicities; }

}  // namespace strongq
