#include "strongq/lifting.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

#include "strongq/spectra.hpp"
#include "strongq/strong_properties.hpp"

namespace strongq {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::vector<std::pair<int, int>> skew_basis_index(int n) {
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) idx.emplace_back(i, j);
  return idx;
}

double default_t_target(const MatrixXd& a, const Graph& g) {
  double smallest = std::numeric_limits<double>::infinity();
  for (auto [u, v] : g.edges()) smallest = std::min(smallest, std::abs(a(u, v)));
  if (std::isfinite(smallest)) return 0.1 * smallest;
  // edgeless seed: scale by the smallest eigenvalue gap instead
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(a);
  double gap = std::numeric_limits<double>::infinity();
  for (int i = 1; i < a.rows(); ++i)
    gap = std::min(gap, es.eigenvalues()(i) - es.eigenvalues()(i - 1));
  return std::isfinite(gap) && gap > 0 ? 0.1 * gap : 0.1;
}

VectorXd sorted_eigenvalues(const MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(a);
  return es.eigenvalues();
}

struct ContinuationState {
  // B = W diag(lambda) W^T; W stays orthogonal (matrix exponentials of skew
  // steps), lambda moves only in multiplicity-list mode.
  MatrixXd W;
  VectorXd lambda;
  std::vector<int> cluster_of;  // eigen index -> cluster id (ascending)
  int q = 0;

  MatrixXd matrix() const { return W * lambda.asDiagonal() * W.transpose(); }
};

ContinuationState make_state(const MatrixXd& a, double cluster_tol, bool snap_clusters) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(a);
  ContinuationState st;
  st.W = es.eigenvectors();
  st.lambda = es.eigenvalues();
  int n = static_cast<int>(a.rows());
  st.cluster_of.assign(n, 0);
  double merge = cluster_tol * std::max(1.0, a.cwiseAbs().maxCoeff());
  int cluster = 0;
  for (int i = 1; i < n; ++i) {
    if (st.lambda(i) - st.lambda(i - 1) > merge) ++cluster;
    st.cluster_of[i] = cluster;
  }
  st.q = cluster + 1;
  if (!snap_clusters) return st;
  // Multiplicity mode: snap members of one cluster to their mean so equal
  // eigenvalues stay bitwise equal under the diagonal polynomial updates.
  for (int c = 0; c <= cluster; ++c) {
    double sum = 0;
    int count = 0;
    for (int i = 0; i < n; ++i)
      if (st.cluster_of[i] == c) {
        sum += st.lambda(i);
        ++count;
      }
    for (int i = 0; i < n; ++i)
      if (st.cluster_of[i] == c) st.lambda(i) = sum / count;
  }
  return st;
}

// Residual over the non-edges of g: entries on delta must equal t, entries
// off gtilde must vanish.
VectorXd residual(const MatrixXd& b, const std::vector<std::pair<int, int>>& rows,
                  const std::vector<bool>& is_delta, double t) {
  VectorXd r(rows.size());
  for (size_t k = 0; k < rows.size(); ++k) {
    auto [u, v] = rows[k];
    r(k) = b(u, v) - (is_delta[k] ? t : 0.0);
  }
  return r;
}

struct NewtonOutcome {
  bool converged = false;
  int iters = 0;
  double final_residual = 0.0;
};

NewtonOutcome newton_drive(ContinuationState& st, const std::vector<std::pair<int, int>>& rows,
                           const std::vector<bool>& is_delta, double t, double tol,
                           bool multiplicity_mode) {
  const int n = static_cast<int>(st.W.rows());
  const auto skew = skew_basis_index(n);
  const int p = static_cast<int>(rows.size());
  const int unknowns = static_cast<int>(skew.size()) + (multiplicity_mode ? st.q : 0);

  ContinuationState backup = st;
  NewtonOutcome out;
  double best = std::numeric_limits<double>::infinity();
  int since_improvement = 0;

  for (out.iters = 0; out.iters < 40; ++out.iters) {
    MatrixXd b = st.matrix();
    VectorXd r = residual(b, rows, is_delta, t);
    out.final_residual = r.lpNorm<Eigen::Infinity>();
    if (out.final_residual <= tol) {
      out.converged = true;
      return out;
    }
    if (out.final_residual < best / 2) {
      best = out.final_residual;
      since_improvement = 0;
    } else if (++since_improvement >= 5) {
      break;  // stalled
    }

    MatrixXd jac(p, unknowns);
    // skew directions: d/ds e^{sK} B e^{-sK} = [K, B]
    for (size_t c = 0; c < skew.size(); ++c) {
      auto [i, j] = skew[c];
      for (int k = 0; k < p; ++k) {
        auto [u, v] = rows[k];
        double val = 0;
        if (u == i) val += b(j, v);
        if (u == j) val -= b(i, v);
        if (v == i) val += b(u, j);
        if (v == j) val -= b(u, i);
        jac(k, int(c)) = val;
      }
    }
    std::vector<double> power_scale(multiplicity_mode ? st.q : 0, 1.0);
    if (multiplicity_mode) {
      MatrixXd pw = MatrixXd::Identity(n, n);
      for (int kk = 0; kk < st.q; ++kk) {
        if (kk > 0) pw = pw * b;
        double norm = std::max(1.0, pw.norm());
        power_scale[kk] = norm;
        for (int k = 0; k < p; ++k) {
          auto [u, v] = rows[k];
          jac(k, int(skew.size()) + kk) = pw(u, v) / norm;
        }
      }
    }

    VectorXd step = jac.completeOrthogonalDecomposition().solve(-r);

    MatrixXd K = MatrixXd::Zero(n, n);
    for (size_t c = 0; c < skew.size(); ++c) {
      auto [i, j] = skew[c];
      K(i, j) = step(int(c));
      K(j, i) = -step(int(c));
    }
    MatrixXd rot = K.exp();
    st.W = rot * st.W;
    if (multiplicity_mode) {
      VectorXd lam = st.lambda;
      for (int kk = 0; kk < st.q; ++kk) {
        double coef = step(int(skew.size()) + kk) / power_scale[kk];
        for (int i = 0; i < n; ++i) st.lambda(i) += coef * std::pow(lam(i), kk);
      }
    }
  }
  st = backup;
  return out;
}

LiftResult run_lift(const LiftProblem& p, bool multiplicity_mode) {
  const int n = p.g.order();
  if (p.gtilde.order() != n) throw DomainError("supergraph must share the vertex set");
  for (auto [u, v] : p.g.edges())
    if (!p.gtilde.has_edge(u, v)) throw DomainError("gtilde is not a supergraph of g");
  if (matches_pattern(p.A, p.g, p.newton_tol).in_class == false)
    throw PatternError("lift seed does not realize its declared graph");

  // Gate on the seed's verified strong property and margin.
  StrongPropertyReport seed_report =
      multiplicity_mode ? verify_smp(p.A, p.g) : verify_ssp(p.A, p.g);
  if (!seed_report.verdict)
    throw RejectedSeedError("lift seed fails " + to_string(seed_report.property) +
                            " verification");
  if (seed_report.margin && *seed_report.margin < p.seed_margin_threshold)
    throw RejectedSeedError("lift seed margin below threshold");

  LiftResult res;
  Eigen::SelfAdjointEigenSolver<MatrixXd> seed_eig(p.A);
  res.seed_spectrum.assign(seed_eig.eigenvalues().data(),
                           seed_eig.eigenvalues().data() + n);

  auto rows = p.g.non_edges();
  std::vector<bool> is_delta(rows.size(), false);
  int delta_count = 0;
  for (size_t k = 0; k < rows.size(); ++k)
    if (p.gtilde.has_edge(rows[k].first, rows[k].second)) {
      is_delta[k] = true;
      ++delta_count;
    }

  ContinuationState st = make_state(p.A, 1e-8, multiplicity_mode);
  std::vector<int> seed_mults(st.q, 0);
  for (int c : st.cluster_of) ++seed_mults[c];

  if (delta_count == 0) {
    res.B = p.A;  // identity lift
  } else {
    double t_target = p.t_target > 0 ? p.t_target : default_t_target(p.A, p.g);
    double t_cur = 0.0;
    double dt = t_target / std::max(1, p.steps);
    double dt_floor = t_target / (std::max(1, p.steps) * 1024.0);
    while (t_cur < t_target * (1 - 1e-12)) {
      double t_next = std::min(t_cur + dt, t_target);
      NewtonOutcome out = newton_drive(st, rows, is_delta, t_next, p.newton_tol,
                                       multiplicity_mode);
      if (out.converged) {
        t_cur = t_next;
        res.path_log.push_back({t_next, out.final_residual, out.iters});
      } else {
        dt /= 2;
        if (dt < dt_floor)
          throw ContinuationError("Newton continuation stalled at t = " +
                                  std::to_string(t_cur));
      }
    }
    res.B = st.matrix();
  }

  res.pattern_report = matches_pattern(res.B, p.gtilde, p.newton_tol);
  VectorXd lifted = sorted_eigenvalues(res.B);
  double err = 0;
  for (int i = 0; i < n; ++i) err = std::max(err, std::abs(lifted(i) - res.seed_spectrum[i]));
  res.spectrum_error = err;

  res.min_edge_entry = std::numeric_limits<double>::infinity();
  for (auto [u, v] : p.g.edges())
    res.min_edge_entry = std::min(res.min_edge_entry, std::abs(res.B(u, v)));

  StrongPropertyReport reverify = multiplicity_mode ? verify_smp(res.B, p.gtilde)
                                                    : verify_ssp(res.B, p.gtilde);
  res.ssp_margin = reverify.margin.value_or(0.0);
  if (!reverify.verdict)
    throw LiftIntegrityError("lifted matrix fails " + to_string(reverify.property) +
                             " re-verification");

  if (multiplicity_mode) {
    SpectralData after = eig_cluster(res.B);
    if (after.multiplicities != seed_mults)
      throw LiftIntegrityError("ordered multiplicity list changed during the lift");
  }
  return res;
}

}  // namespace

LiftResult lift_ssp(const LiftProblem& p) {
  if (p.mode != LiftMode::PreserveSpectrum)
    throw DomainError("lift_ssp expects preserve-spectrum mode");
  return run_lift(p, false);
}

LiftResult lift_smp(const LiftProblem& p) {
  if (p.mode != LiftMode::PreserveMultiplicityList)
    throw DomainError("lift_smp expects preserve-multiplicity-list mode");
  return run_lift(p, true);
}

LiftResult augment_and_lift(const Certificate& c, const Graph& ghat,
                            const std::vector<double>& extra, LiftMode mode,
                            double t_target) {
  int n = c.graph.order();
  int m = ghat.order();
  if (m - n != static_cast<int>(extra.size()))
    throw DomainError("need exactly |ghat| - |G| extra eigenvalues");
  for (auto [u, v] : c.graph.edges())
    if (!ghat.has_edge(u, v))
      throw DomainError("certificate graph does not sit identically inside ghat");

  MatrixXd a = c.matrix.to_double();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(a);
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  for (size_t i = 0; i < extra.size(); ++i) {
    for (size_t j = i + 1; j < extra.size(); ++j)
      if (std::abs(extra[i] - extra[j]) <= 1e-8 * scale)
        throw SpectrumCollisionError("extra eigenvalues are not distinct");
    for (int j = 0; j < n; ++j)
      if (std::abs(extra[i] - es.eigenvalues()(j)) <= 1e-8 * scale)
        throw SpectrumCollisionError("extra eigenvalue " + std::to_string(extra[i]) +
                                     " collides with the seed spectrum");
  }

  MatrixXd b0 = MatrixXd::Zero(m, m);
  b0.topLeftCorner(n, n) = a;
  for (size_t i = 0; i < extra.size(); ++i) b0(n + int(i), n + int(i)) = extra[i];

  MatrixXd diag_block = MatrixXd::Zero(static_cast<int>(extra.size()),
                                       static_cast<int>(extra.size()));
  for (size_t i = 0; i < extra.size(); ++i) diag_block(int(i), int(i)) = extra[i];
  StrongProperty prop = mode == LiftMode::PreserveSpectrum ? StrongProperty::SSP
                                                           : StrongProperty::SMP;
  if (!extra.empty()) {
    DirectSumReport sum_rep = direct_sum_verdict(prop, a, diag_block);
    if (!sum_rep.combined.verdict)
      throw RejectedSeedError("augmented block matrix fails the direct-sum verdict");
  }

  Graph g0(m);
  for (auto [u, v] : c.graph.edges()) g0.add_edge(u, v);

  LiftProblem problem;
  problem.A = b0;
  problem.g = g0;
  problem.gtilde = ghat;
  problem.mode = mode;
  problem.t_target = t_target;
  return mode == LiftMode::PreserveSpectrum ? lift_ssp(problem) : lift_smp(problem);
}

}  // namespace strongq
