#include <cmath>
#include <random>

#include "doctest.h"
#include "strongq/spectra.hpp"

using namespace strongq;

namespace {

ExactMatrix flipped_cycle_matrix(int n) {
  ExactMatrix c(n, n);
  for (int i = 0; i + 1 < n; ++i) c.at(i, i + 1) = ExactScalar(1);
  c.at(n - 1, 0) = ExactScalar(-1);
  return c + c.transpose();
}

ExactMatrix star_matrix() {
  return ExactMatrix(4, 4, {0, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0});
}

ExactMatrix random_rational_symmetric(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ExactScalar v{ExactScalar(entry(rng))};
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

}  // namespace

TEST_CASE("q_exact on the stated examples") {
  CHECK(q_exact(ExactMatrix::identity(6)) == 1);
  CHECK(q_exact(flipped_cycle_matrix(5)) == 3);
  CHECK(q_exact(star_matrix()) == 3);
}

TEST_CASE("power traces") {
  ExactMatrix zero(3, 3);
  auto traces = power_traces(zero, 3);
  REQUIRE(traces.size() == 4);
  CHECK(traces[0] == ExactScalar(3));
  for (int k = 1; k <= 3; ++k) CHECK(traces[k].is_zero());

  ExactMatrix p2(2, 2, {0, 1, 1, 0});
  auto t2 = power_traces(p2, 2);
  CHECK(t2[0] == ExactScalar(2));
  CHECK(t2[1].is_zero());
  CHECK(t2[2] == ExactScalar(2));

  // oracle: direct exact multiplication
  ExactMatrix a = flipped_cycle_matrix(4);
  ExactMatrix a2 = a * a;
  CHECK(power_traces(a, 2)[2] == a2.trace());
  CHECK(power_traces(a, 2)[2] == ExactScalar(8));
}

TEST_CASE("eig_cluster on the stated examples") {
  Eigen::MatrixXd diag = Eigen::Vector3d(1, 2, 3).asDiagonal();
  SpectralData sd = eig_cluster(diag);
  CHECK(sd.eigenvalues == std::vector<double>{1, 2, 3});
  CHECK(sd.multiplicities == std::vector<int>{1, 1, 1});

  SpectralData star = eig_cluster(star_matrix().to_double());
  REQUIRE(star.eigenvalues.size() == 3);
  CHECK(star.eigenvalues[0] == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));
  CHECK(star.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(star.eigenvalues[2] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(star.multiplicities == std::vector<int>{1, 2, 1});
  CHECK(multiplicity_list(star) == std::vector<int>{1, 2, 1});
}

TEST_CASE("spectral data invariants: projectors and reconstruction") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + int(rng() % 6);
    ExactMatrix a = random_rational_symmetric(rng, n);
    Eigen::MatrixXd ad = a.to_double();
    SpectralData sd = eig_cluster(ad);

    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd recon = Eigen::MatrixXd::Zero(n, n);
    double trace_from_clusters = 0;
    for (size_t j = 0; j < sd.eigenvalues.size(); ++j) {
      const Eigen::MatrixXd& e = sd.projectors[j];
      CHECK((e * e - e).cwiseAbs().maxCoeff() <= n * 1e-8);
      CHECK((e - e.transpose()).cwiseAbs().maxCoeff() <= n * 1e-10);
      sum += e;
      recon += sd.eigenvalues[j] * e;
      trace_from_clusters += sd.eigenvalues[j] * sd.multiplicities[j];
    }
    CHECK((sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= n * 1e-10);
    CHECK((recon - ad).cwiseAbs().maxCoeff() <= n * 1e-8 * std::max(1.0, ad.norm()));
    CHECK(std::abs(trace_from_clusters - ad.trace()) <= n * 1e-8 * std::max(1.0, ad.norm()));

    // orthogonality between different clusters
    for (size_t j = 0; j + 1 < sd.projectors.size(); ++j)
      CHECK((sd.projectors[j] * sd.projectors[j + 1]).cwiseAbs().maxCoeff() <= n * 1e-8);
  }
}

TEST_CASE("q_exact equals the float cluster count on random rational matrices") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + int(rng() % 6);
    ExactMatrix a = random_rational_symmetric(rng, n);
    SpectralData sd = eig_cluster(a.to_double(), 1e-8);
    if (sd.cluster_gap > 1e2)
      CHECK(q_exact(a) == int(sd.eigenvalues.size()));
  }
}

TEST_CASE("q_exact is shift invariant") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + int(rng() % 5);
    ExactMatrix a = random_rational_symmetric(rng, n);
    ExactMatrix shifted = a + (ExactScalar(Rational(3, 2)) * ExactMatrix::identity(n));
    CHECK(q_exact(a) == q_exact(shifted));
  }
}

TEST_CASE("flipped cycle multiplicity lists follow the paired-cosine pattern") {
  // oracle: eigenvalues 2cos(2pi(2j-1)/(2n)) pairing j and n+1-j
  for (int n = 4; n <= 8; ++n) {
    std::vector<double> expected;
    for (int j = 1; j <= n; ++j)
      expected.push_back(2 * std::cos(2 * M_PI * (2 * j - 1) / (2 * n)));
    std::sort(expected.begin(), expected.end());

    SpectralData sd = eig_cluster(flipped_cycle_matrix(n).to_double());
    int idx = 0;
    for (size_t c = 0; c < sd.eigenvalues.size(); ++c)
      for (int k = 0; k < sd.multiplicities[c]; ++k, ++idx)
        CHECK(sd.eigenvalues[c] == doctest::Approx(expected[idx]).epsilon(1e-10));
  }
  SpectralData six = eig_cluster(flipped_cycle_matrix(6).to_double());
  CHECK(multiplicity_list(six) == std::vector<int>{2, 2, 2});
}
