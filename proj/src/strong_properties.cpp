#include "strongq/strong_properties.hpp"

#include <cmath>
#include <limits>

#include "strongq/subgraph.hpp"

namespace strongq {

std::string to_string(StrongProperty p) {
  switch (p) {
    case StrongProperty::SAP: return "sap";
    case StrongProperty::SSP: return "ssp";
    case StrongProperty::SMP: return "smp";
  }
  return "ssp";
}

StrongProperty property_from_string(const std::string& s) {
  if (s == "sap" || s == "SAP") return StrongProperty::SAP;
  if (s == "ssp" || s == "SSP") return StrongProperty::SSP;
  if (s == "smp" || s == "SMP") return StrongProperty::SMP;
  throw ParseError("unknown property '" + s + "'");
}

namespace {

void require_pattern(const ExactMatrix& a, const Graph& g) {
  if (!a.is_symmetric()) throw ShapeError("verifier requires a symmetric matrix");
  if (!(pattern_of(a) == g)) throw PatternError("matrix pattern does not match the graph");
}

void require_pattern(const Eigen::MatrixXd& a, const Graph& g, double tol) {
  if (!(pattern_of(a, tol) == g)) throw PatternError("matrix pattern does not match the graph");
}

// Entry (u,v) of A E_ij + E_ij^T A.
template <typename M, typename S>
S sap_entry(const M& a, int i, int j, int u, int v) {
  S val{};
  if (v == j) val += a(u, i);
  if (u == j) val += a(i, v);
  return val;
}

// Entry (u,v) of [A, K_ij] with K_ij = E_ij - E_ji.
template <typename M, typename S>
S ssp_entry(const M& a, int i, int j, int u, int v) {
  S val{};
  if (v == j) val += a(u, i);
  if (v == i) val -= a(u, j);
  if (u == i) val -= a(j, v);
  if (u == j) val += a(i, v);
  return val;
}

struct ExactAccess {
  const ExactMatrix& m;
  ExactScalar operator()(int i, int j) const { return m.at(i, j); }
};

struct FloatAccess {
  const Eigen::MatrixXd& m;
  double operator()(int i, int j) const { return m(i, j); }
};

}  // namespace

ExactMatrix sap_constraint_matrix(const ExactMatrix& a, const Graph& g) {
  auto ne = g.non_edges();
  int n = g.order();
  ExactMatrix m(static_cast<int>(ne.size()), n * n);
  ExactAccess acc{a};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (size_t r = 0; r < ne.size(); ++r)
        m.at(int(r), i * n + j) =
            sap_entry<ExactAccess, ExactScalar>(acc, i, j, ne[r].first, ne[r].second);
  return m;
}

Eigen::MatrixXd sap_constraint_matrix(const Eigen::MatrixXd& a, const Graph& g) {
  auto ne = g.non_edges();
  int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<int>(ne.size()), n * n);
  FloatAccess acc{a};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (size_t r = 0; r < ne.size(); ++r)
        m(int(r), i * n + j) = sap_entry<FloatAccess, double>(acc, i, j, ne[r].first, ne[r].second);
  return m;
}

ExactMatrix ssp_constraint_matrix(const ExactMatrix& a, const Graph& g) {
  auto ne = g.non_edges();
  int n = g.order();
  ExactMatrix m(static_cast<int>(ne.size()), n * (n - 1) / 2);
  ExactAccess acc{a};
  int col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++col)
      for (size_t r = 0; r < ne.size(); ++r)
        m.at(int(r), col) =
            ssp_entry<ExactAccess, ExactScalar>(acc, i, j, ne[r].first, ne[r].second);
  return m;
}

Eigen::MatrixXd ssp_constraint_matrix(const Eigen::MatrixXd& a, const Graph& g) {
  auto ne = g.non_edges();
  int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<int>(ne.size()), n * (n - 1) / 2);
  FloatAccess acc{a};
  int col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++col)
      for (size_t r = 0; r < ne.size(); ++r)
        m(int(r), col) = ssp_entry<FloatAccess, double>(acc, i, j, ne[r].first, ne[r].second);
  return m;
}

ExactMatrix smp_constraint_matrix(const ExactMatrix& a, const Graph& g, int q) {
  auto ne = g.non_edges();
  ExactMatrix ssp = ssp_constraint_matrix(a, g);
  ExactMatrix m(ssp.rows(), ssp.cols() + q);
  for (int r = 0; r < ssp.rows(); ++r)
    for (int c = 0; c < ssp.cols(); ++c) m.at(r, c) = ssp.at(r, c);
  ExactMatrix pw = ExactMatrix::identity(a.rows());
  for (int k = 0; k < q; ++k) {
    if (k > 0) pw = pw * a;
    for (size_t r = 0; r < ne.size(); ++r)
      m.at(int(r), ssp.cols() + k) = pw.at(ne[r].first, ne[r].second);
  }
  return m;
}

Eigen::MatrixXd smp_constraint_matrix(const Eigen::MatrixXd& a, const Graph& g, int q) {
  auto ne = g.non_edges();
  Eigen::MatrixXd ssp = ssp_constraint_matrix(a, g);
  Eigen::MatrixXd m(ssp.rows(), ssp.cols() + q);
  m.leftCols(ssp.cols()) = ssp;
  Eigen::MatrixXd pw = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  for (int k = 0; k < q; ++k) {
    if (k > 0) pw = pw * a;
    for (size_t r = 0; r < ne.size(); ++r)
      m(int(r), ssp.cols() + k) = pw(ne[r].first, ne[r].second);
  }
  return m;
}

namespace {

// Constraint matrix of the definitional system on the unknown non-edge
// entries of symmetric X.  SAP rows: AX = O (all n^2 entries).  SSP rows:
// [A,X] = O (strict upper triangle; the commutator of symmetric matrices is
// skew).  SMP adds tr(A^k X) = 0 for k = 0..q-1.
ExactMatrix definitional_system(const ExactMatrix& a, const Graph& g, StrongProperty prop,
                                int q) {
  auto ne = g.non_edges();
  int n = g.order();
  int p = static_cast<int>(ne.size());

  int rows = prop == StrongProperty::SAP ? n * n : n * (n - 1) / 2;
  if (prop == StrongProperty::SMP) rows += q;
  ExactMatrix m(rows, p);

  std::vector<ExactMatrix> powers;
  if (prop == StrongProperty::SMP) {
    powers.push_back(ExactMatrix::identity(n));
    for (int k = 1; k < q; ++k) powers.push_back(powers.back() * a);
  }

  for (int c = 0; c < p; ++c) {
    auto [u, v] = ne[c];
    if (prop == StrongProperty::SAP) {
      // A (E_uv + E_vu): column v gets A col u, column u gets A col v.
      for (int k = 0; k < n; ++k) {
        m.at(k * n + v, c) += a.at(k, u);
        m.at(k * n + u, c) += a.at(k, v);
      }
    } else {
      // [A, E_uv + E_vu] at strict upper-triangle positions (i, j).
      int row = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++row) {
          ExactScalar val;
          if (j == v) val += a.at(i, u);
          if (j == u) val += a.at(i, v);
          if (i == u) val -= a.at(v, j);
          if (i == v) val -= a.at(u, j);
          m.at(row, c) = val;
        }
      if (prop == StrongProperty::SMP)
        for (int k = 0; k < q; ++k)
          m.at(n * (n - 1) / 2 + k, c) = ExactScalar(2) * powers[k].at(u, v);
    }
  }
  return m;
}

ExactMatrix assemble_witness(const Graph& g, const ExactVector& coeffs) {
  auto ne = g.non_edges();
  ExactMatrix x(g.order(), g.order());
  for (size_t c = 0; c < ne.size(); ++c) {
    x.at(ne[c].first, ne[c].second) = coeffs[c];
    x.at(ne[c].second, ne[c].first) = coeffs[c];
  }
  return x;
}

StrongPropertyReport rank_criterion_report(StrongProperty prop, const ExactMatrix& a,
                                           const Graph& g) {
  StrongPropertyReport rep;
  rep.property = prop;
  rep.mode = VerifyMode::Exact;
  rep.path = VerifyPath::RankCriterion;
  rep.p = static_cast<int>(g.non_edges().size());
  switch (prop) {
    case StrongProperty::SAP:
      rep.rank = rank_exact(sap_constraint_matrix(a, g));
      break;
    case StrongProperty::SSP:
      rep.rank = rank_exact(ssp_constraint_matrix(a, g));
      break;
    case StrongProperty::SMP:
      rep.q_used = q_exact(a);
      rep.rank = rank_exact(smp_constraint_matrix(a, g, rep.q_used));
      break;
  }
  rep.verdict = rep.rank == rep.p;
  if (!rep.verdict) {
    int q = rep.q_used >= 0 ? rep.q_used : 0;
    if (prop == StrongProperty::SMP && q == 0) q = q_exact(a);
    auto basis = nullspace_basis_exact(definitional_system(a, g, prop, q));
    if (!basis.empty()) rep.witness = assemble_witness(g, basis.front());
  }
  return rep;
}

}  // namespace

StrongPropertyReport verify_sap(const ExactMatrix& a, const Graph& g) {
  require_pattern(a, g);
  return rank_criterion_report(StrongProperty::SAP, a, g);
}

StrongPropertyReport verify_ssp(const ExactMatrix& a, const Graph& g) {
  require_pattern(a, g);
  return rank_criterion_report(StrongProperty::SSP, a, g);
}

StrongPropertyReport verify_smp(const ExactMatrix& a, const Graph& g) {
  require_pattern(a, g);
  return rank_criterion_report(StrongProperty::SMP, a, g);
}

StrongPropertyReport verify_property(StrongProperty p, const ExactMatrix& a, const Graph& g) {
  switch (p) {
    case StrongProperty::SAP: return verify_sap(a, g);
    case StrongProperty::SSP: return verify_ssp(a, g);
    case StrongProperty::SMP: return verify_smp(a, g);
  }
  throw DomainError("bad property");
}

StrongPropertyReport verify_by_definition(const ExactMatrix& a, const Graph& g,
                                          StrongProperty prop) {
  require_pattern(a, g);
  StrongPropertyReport rep;
  rep.property = prop;
  rep.mode = VerifyMode::Exact;
  rep.path = VerifyPath::Definitional;
  rep.p = static_cast<int>(g.non_edges().size());
  int q = prop == StrongProperty::SMP ? q_exact(a) : 0;
  if (prop == StrongProperty::SMP) rep.q_used = q;
  ExactMatrix sys = definitional_system(a, g, prop, q);
  rep.rank = rank_exact(sys);
  rep.verdict = rep.rank == rep.p;
  if (!rep.verdict) {
    auto basis = nullspace_basis_exact(sys);
    if (!basis.empty()) rep.witness = assemble_witness(g, basis.front());
  }
  return rep;
}

StrongPropertyReport verify_sap(const Eigen::MatrixXd& a, const Graph& g, double tol) {
  require_pattern(a, g, tol);
  StrongPropertyReport rep;
  rep.property = StrongProperty::SAP;
  rep.mode = VerifyMode::Float;
  rep.p = static_cast<int>(g.non_edges().size());
  auto fr = rank_float(sap_constraint_matrix(a, g), tol);
  rep.rank = fr.rank;
  rep.margin = fr.margin;
  rep.verdict = rep.rank == rep.p;
  return rep;
}

StrongPropertyReport verify_ssp(const Eigen::MatrixXd& a, const Graph& g, double tol) {
  require_pattern(a, g, tol);
  StrongPropertyReport rep;
  rep.property = StrongProperty::SSP;
  rep.mode = VerifyMode::Float;
  rep.p = static_cast<int>(g.non_edges().size());
  auto fr = rank_float(ssp_constraint_matrix(a, g), tol);
  rep.rank = fr.rank;
  rep.margin = fr.margin;
  rep.verdict = rep.rank == rep.p;
  return rep;
}

StrongPropertyReport verify_smp(const Eigen::MatrixXd& a, const Graph& g, double tol) {
  require_pattern(a, g, tol);
  StrongPropertyReport rep;
  rep.property = StrongProperty::SMP;
  rep.mode = VerifyMode::Float;
  rep.p = static_cast<int>(g.non_edges().size());
  SpectralData sd = eig_cluster(a);
  rep.q_used = static_cast<int>(sd.eigenvalues.size());
  rep.ambiguous = sd.cluster_gap < 100.0;
  auto fr = rank_float(smp_constraint_matrix(a, g, rep.q_used), tol);
  rep.rank = fr.rank;
  rep.margin = fr.margin;
  rep.verdict = rep.rank == rep.p;
  return rep;
}

bool witness_is_valid(const ExactMatrix& a, const Graph& g, StrongProperty prop,
                      const ExactMatrix& x) {
  if (x.rows() != a.rows() || x.cols() != a.cols()) return false;
  if (!x.is_symmetric() || x.is_zero()) return false;
  for (int i = 0; i < x.rows(); ++i)
    if (!x.at(i, i).is_zero()) return false;
  for (auto [u, v] : g.edges())
    if (!x.at(u, v).is_zero()) return false;
  if (prop == StrongProperty::SAP) return (a * x).is_zero();
  if (!(a * x - x * a).is_zero()) return false;
  if (prop == StrongProperty::SMP) {
    int q = q_exact(a);
    ExactMatrix pw = ExactMatrix::identity(a.rows());
    for (int k = 0; k < q; ++k) {
      if (k > 0) pw = pw * a;
      if (!(pw * x).trace().is_zero()) return false;
    }
  }
  return true;
}

namespace {

// Discs i and j intersect exactly when |a_ii - a_jj| <= R_i + R_j with
// R_i the off-diagonal absolute row sum.
template <typename Scalar, typename AbsFn, typename DiagFn>
Graph gershgorin_graph(int n, AbsFn abs_entry, DiagFn diag) {
  std::vector<Scalar> radius(n, Scalar{});
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      if (l != i) radius[i] += abs_entry(i, l);
  Graph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar sep = diag(i) - diag(j);
      Scalar gap = sep < Scalar{} ? Scalar{} - sep : sep;
      if (!(radius[i] + radius[j] < gap)) h.add_edge(i, j);
    }
  return h;
}

}  // namespace

GershgorinReport gershgorin_ssp(const ExactMatrix& a) {
  if (!a.is_symmetric()) throw ShapeError("gershgorin_ssp requires a symmetric matrix");
  int n = a.rows();
  GershgorinReport rep;
  rep.intersection_graph = gershgorin_graph<ExactScalar>(
      n, [&](int i, int l) { return a.at(i, l).abs(); }, [&](int i) { return a.at(i, i); });
  Graph pattern = pattern_of(a);
  bool subset = contains_subgraph(pattern, rep.intersection_graph, SubgraphMode::Identical)
                    .has_value();
  rep.verdict = subset ? GershgorinVerdict::ProvedSSP : GershgorinVerdict::Inconclusive;
  return rep;
}

GershgorinReport gershgorin_ssp(const Eigen::MatrixXd& a, double tol) {
  int n = static_cast<int>(a.rows());
  GershgorinReport rep;
  rep.intersection_graph = gershgorin_graph<double>(
      n, [&](int i, int l) { return std::abs(a(i, l)); }, [&](int i) { return a(i, i); });
  Graph pattern = pattern_of(a, tol);
  bool subset = contains_subgraph(pattern, rep.intersection_graph, SubgraphMode::Identical)
                    .has_value();
  rep.verdict = subset ? GershgorinVerdict::ProvedSSP : GershgorinVerdict::Inconclusive;
  return rep;
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

DirectSumReport direct_sum_verdict(StrongProperty prop, const ExactMatrix& a1,
                                   const ExactMatrix& a2) {
  if (prop == StrongProperty::SAP)
    throw DomainError("direct_sum_verdict applies to SSP and SMP only");
  Graph g1 = pattern_of(a1), g2 = pattern_of(a2);
  DirectSumReport rep;
  rep.block1_verdict = verify_property(prop, a1, g1).verdict;
  rep.block2_verdict = verify_property(prop, a2, g2).verdict;
  int q1 = q_exact(a1), q2 = q_exact(a2);
  ExactMatrix sum = direct_sum(a1, a2);
  rep.spectra_disjoint = q_exact(sum) == q1 + q2;
  bool composed = rep.block1_verdict && rep.block2_verdict && rep.spectra_disjoint;

  Graph gsum = g1.disjoint_union(g2);
  rep.combined = verify_by_definition(sum, gsum, prop);
  if (rep.combined.verdict != composed)
    throw Error("direct sum composition disagrees with the definitional verdict");
  return rep;
}

DirectSumReport direct_sum_verdict(StrongProperty prop, const Eigen::MatrixXd& a1,
                                   const Eigen::MatrixXd& a2, double tol) {
  if (prop == StrongProperty::SAP)
    throw DomainError("direct_sum_verdict applies to SSP and SMP only");
  Graph g1 = pattern_of(a1, tol), g2 = pattern_of(a2, tol);
  DirectSumReport rep;
  auto verify_float = [&](const Eigen::MatrixXd& m, const Graph& g) {
    return prop == StrongProperty::SSP ? verify_ssp(m, g, tol) : verify_smp(m, g, tol);
  };
  rep.block1_verdict = verify_float(a1, g1).verdict;
  rep.block2_verdict = verify_float(a2, g2).verdict;

  SpectralData s1 = eig_cluster(a1), s2 = eig_cluster(a2);
  double scale = std::max(s1.scale, s2.scale);
  double sep = std::numeric_limits<double>::infinity();
  for (double x : s1.eigenvalues)
    for (double y : s2.eigenvalues) sep = std::min(sep, std::abs(x - y));
  rep.spectra_disjoint = sep > s1.tol * scale;
  rep.ambiguous = sep <= 100 * s1.tol * scale;

  bool composed = rep.block1_verdict && rep.block2_verdict && rep.spectra_disjoint;
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(a1.rows() + a2.rows(), a1.cols() + a2.cols());
  sum.topLeftCorner(a1.rows(), a1.cols()) = a1;
  sum.bottomRightCorner(a2.rows(), a2.cols()) = a2;
  rep.combined = verify_float(sum, g1.disjoint_union(g2));
  if (rep.combined.verdict != composed) rep.ambiguous = true;
  rep.combined.verdict = composed;
  rep.combined.ambiguous = rep.combined.ambiguous || rep.ambiguous;
  return rep;
}

}  // namespace strongq
