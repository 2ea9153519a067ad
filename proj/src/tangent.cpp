#include "strongq/tangent.hpp"

#include <numeric>

#include "strongq/linalg_float.hpp"

namespace strongq {

namespace {

int choose2(int k) { return k * (k - 1) / 2; }

}  // namespace

TangentDims tangent_dims(int n, int rank, const std::vector<int>& mult_list) {
  TangentDims td;
  td.n = n;
  td.r = rank;
  td.q = static_cast<int>(mult_list.size());
  td.m = mult_list;
  if (std::accumulate(mult_list.begin(), mult_list.end(), 0) != n)
    throw ShapeError("multiplicities must sum to n");
  td.dim_rank_tangent = choose2(n + 1) - choose2(n - rank + 1);
  int pairs_within = 0;
  for (int mi : mult_list) pairs_within += choose2(mi);
  td.dim_spec_tangent = choose2(n) - pairs_within;
  td.dim_mult_tangent = td.dim_spec_tangent + td.q;
  return td;
}

TangentDims tangent_dims(const Eigen::MatrixXd& a, double tol) {
  SpectralData sd = eig_cluster(a, tol);
  int rank = rank_float(a, tol).rank;
  return tangent_dims(static_cast<int>(a.rows()), rank, sd.multiplicities);
}

namespace {

Eigen::MatrixXd vec_columns(const std::vector<Eigen::MatrixXd>& gens) {
  int n = static_cast<int>(gens.front().rows());
  Eigen::MatrixXd m(n * n, static_cast<int>(gens.size()));
  for (size_t c = 0; c < gens.size(); ++c)
    m.col(int(c)) = Eigen::Map<const Eigen::VectorXd>(gens[c].data(), n * n);
  return m;
}

}  // namespace

Eigen::MatrixXd rank_tangent_span(const Eigen::MatrixXd& a) {
  int n = static_cast<int>(a.rows());
  std::vector<Eigen::MatrixXd> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
      e(i, j) = 1.0;
      gens.push_back(a * e + e.transpose() * a);
    }
  return vec_columns(gens);
}

Eigen::MatrixXd spec_tangent_span(const Eigen::MatrixXd& a) {
  int n = static_cast<int>(a.rows());
  std::vector<Eigen::MatrixXd> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
      k(i, j) = 1.0;
      k(j, i) = -1.0;
      gens.push_back(a * k - k * a);
    }
  return vec_columns(gens);
}

Eigen::MatrixXd mult_tangent_span(const Eigen::MatrixXd& a, int q) {
  int n = static_cast<int>(a.rows());
  Eigen::MatrixXd spec = spec_tangent_span(a);
  Eigen::MatrixXd m(n * n, spec.cols() + q);
  m.leftCols(spec.cols()) = spec;
  Eigen::MatrixXd pw = Eigen::MatrixXd::Identity(n, n);
  for (int k = 0; k < q; ++k) {
    if (k > 0) pw = pw * a;
    // Normalize power columns so ill-scaled high powers do not mask rank.
    Eigen::VectorXd col = Eigen::Map<const Eigen::VectorXd>(pw.data(), n * n);
    m.col(spec.cols() + k) = col / std::max(1.0, col.norm());
  }
  return m;
}

EdgeBoundCheck edge_bound_check(const Graph& g, const std::vector<int>& mult_list, int rank) {
  EdgeBoundCheck c;
  c.edge_count = g.edge_count();
  c.bipartite = g.is_bipartite();
  if (mult_list.size() <= 1) {
    c.applicable = false;  // scalar matrix: the corollary assumes otherwise
    return c;
  }
  int n = g.order();
  int q = static_cast<int>(mult_list.size());
  c.sap_bound = choose2(n - rank + 1) - (c.bipartite ? 1 : 0);
  c.sap_excluded = c.edge_count < c.sap_bound;
  int pairs_within = 0;
  for (int mi : mult_list) pairs_within += choose2(mi);
  c.ssp_bound = pairs_within;
  c.ssp_excluded = c.edge_count < c.ssp_bound;
  c.smp_bound = pairs_within - q + 2;
  c.smp_excluded = c.edge_count < c.smp_bound;
  return c;
}

EdgeBoundCheck edge_bound_check(const Graph& g, const Eigen::MatrixXd& a, double tol) {
  SpectralData sd = eig_cluster(a, tol);
  int rank = rank_float(a, tol).rank;
  return edge_bound_check(g, sd.multiplicities, rank);
}

}  // namespace strongq
