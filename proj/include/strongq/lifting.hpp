#pragma once

#include <Eigen/Dense>
#include <vector>

#include "strongq/certificates.hpp"
#include "strongq/graph.hpp"
#include "strongq/pattern.hpp"

namespace strongq {

enum class LiftMode { PreserveSpectrum, PreserveMultiplicityList };

struct LiftProblem {
  Eigen::MatrixXd A;  // seed, pattern = g, must pass the matching verifier
  Graph g;
  Graph gtilde;       // supergraph on the same vertex set
  LiftMode mode = LiftMode::PreserveSpectrum;
  // Desired magnitude of the new-edge entries; 0 picks
  // 0.1 * (smallest |a_ij| over edges of g), falling back to the smallest
  // eigenvalue gap for edgeless seeds.
  double t_target = 0.0;
  int steps = 16;
  double newton_tol = 1e-10;
  double seed_margin_threshold = 1e3;
};

struct LiftStep {
  double t;
  double residual;
  int newton_iters;
};

struct LiftResult {
  Eigen::MatrixXd B;
  double spectrum_error = 0.0;  // max sorted-eigenvalue deviation from the seed
  PatternVerdict pattern_report;
  double ssp_margin = 0.0;      // margin of the re-verification on gtilde
  double min_edge_entry = 0.0;  // smallest |B_ij| over the original edges
  std::vector<LiftStep> path_log;
  std::vector<double> seed_spectrum;
};

// Continuation along t of orthogonal conjugations B -> e^K B e^-K driving
// the new-edge entries to t and the non-edges of gtilde to zero; the
// iteration is isospectral by construction.
LiftResult lift_ssp(const LiftProblem& p);

// Same continuation with extra diagonal-polynomial unknowns so eigenvalues
// may move while the ordered multiplicity list is preserved.
LiftResult lift_smp(const LiftProblem& p);

// Augments the certificate with a diagonal block of prescribed extra
// eigenvalues and lifts A (+) diag(extra) to ghat, realizing
// q = |ghat| - |G| + q(A) distinct eigenvalues.  The certificate's graph
// must sit identically on the first vertices of ghat.
LiftResult augment_and_lift(const Certificate& c, const Graph& ghat,
                            const std::vector<double>& extra,
                            LiftMode mode = LiftMode::PreserveSpectrum,
                            double t_target = 0.0);

}  // namespace strongq
