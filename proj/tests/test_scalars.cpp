#include <random>

#include "doctest.h"
#include "strongq/exact_matrix.hpp"
#include "strongq/linalg_float.hpp"
#include "strongq/scalar.hpp"

using namespace strongq;

namespace {

ExactScalar sqrt3() { return ExactScalar::sqrt_of(3); }

ExactMatrix random_rational_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  ExactMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = ExactScalar(entry(rng));
  return m;
}

// The 4x4 submatrix of SSP constraint columns for the bowtie example.
ExactMatrix bowtie_mhat() {
  return ExactMatrix(4, 4,
                     {-3, -1, 1, 0,
                      -1, -3, 0, 1,
                      1, 0, -3, -1,
                      0, 1, -1, -3});
}

}  // namespace

TEST_CASE("exact scalar arithmetic in a quadratic field") {
  ExactScalar x(Rational(1, 2), Rational(3, 4), 6);
  ExactScalar y(Rational(-2), Rational(1, 3), 6);
  CHECK((x + y) == ExactScalar(Rational(-3, 2), Rational(13, 12), 6));
  // (1/2 + 3/4 s)(-2 + 1/3 s) with s^2 = 6: rational part -1 + 3/2, surd 1/6 - 3/2
  CHECK((x * y) == ExactScalar(Rational(1, 2), Rational(-4, 3), 6));
  CHECK((x / x) == ExactScalar(1));
  CHECK((x - x).is_zero());

  // normalization pulls square factors out of the radicand
  CHECK(ExactScalar(Rational(0), Rational(1), 12) == ExactScalar(Rational(0), Rational(2), 3));
  CHECK(ExactScalar(Rational(2), Rational(5), 1) == ExactScalar(7));
  CHECK(ExactScalar(Rational(1), Rational(0), 7).radicand() == 0);
}

TEST_CASE("mixed radicands are rejected") {
  ExactScalar a = ExactScalar::sqrt_of(2);
  ExactScalar b = ExactScalar::sqrt_of(3);
  CHECK_THROWS_AS(a + b, InvalidFieldError);
  CHECK_THROWS_AS(a * b, InvalidFieldError);
  CHECK_NOTHROW(a + ExactScalar(5));  // rationals live in every field
}

TEST_CASE("exact sign and ordering") {
  CHECK(sqrt3().sign() == 1);
  CHECK((-sqrt3()).sign() == -1);
  // 2 - sqrt(3) > 0 but 3/2 - sqrt(3) < 0... (sqrt(3) ~ 1.732)
  CHECK((ExactScalar(2) - sqrt3()).sign() == 1);
  CHECK((ExactScalar(Rational(3, 2)) - sqrt3()).sign() == -1);
  CHECK((ExactScalar(0)).sign() == 0);
  CHECK(ExactScalar(Rational(-1), Rational(1), 3) > ExactScalar(0));  // sqrt(3) - 1 > 0
  CHECK((ExactScalar(2) - sqrt3()).abs() == ExactScalar(2) - sqrt3());
  CHECK((sqrt3() - ExactScalar(2)).abs() == ExactScalar(2) - sqrt3());
}

TEST_CASE("scalar strings round-trip and parse leniently") {
  ExactScalar vals[] = {ExactScalar(0), ExactScalar(Rational(-7, 3)),
                        ExactScalar(Rational(1, 2), Rational(3, 4), 6),
                        ExactScalar(Rational(0), Rational(-1), 3), ExactScalar(42)};
  for (const auto& v : vals) CHECK(ExactScalar::parse(v.to_string()) == v);

  CHECK(ExactScalar::parse(" 1/2 + 3/4 * sqrt( 6 ) ") ==
        ExactScalar(Rational(1, 2), Rational(3, 4), 6));
  CHECK(ExactScalar::parse("sqrt(3)") == sqrt3());
  CHECK(ExactScalar::parse("-sqrt(3)") == -sqrt3());
  CHECK(ExactScalar::parse("2-sqrt(3)") == ExactScalar(2) - sqrt3());
  CHECK_THROWS_AS(ExactScalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(ExactScalar::parse("banana"), ParseError);
  CHECK_THROWS_AS(ExactScalar::parse(""), ParseError);
}

TEST_CASE("rank_exact on the stated examples") {
  CHECK(rank_exact(ExactMatrix::identity(3)) == 3);
  CHECK(rank_exact(ExactMatrix(4, 4)) == 0);
  CHECK(rank_exact(bowtie_mhat()) == 4);
}

TEST_CASE("nullspace_basis_exact produces verified kernels") {
  CHECK(nullspace_basis_exact(ExactMatrix::identity(3)).empty());

  ExactMatrix row(1, 2, {1, -1});
  auto basis = nullspace_basis_exact(row);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == basis[0][1]);  // spanned by (1, 1)
  CHECK_FALSE(basis[0][0].is_zero());

  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 6);
    ExactMatrix m = random_rational_matrix(rng, rows, cols);
    auto null_basis = nullspace_basis_exact(m);
    CHECK(int(null_basis.size()) == cols - rank_exact(m));
    for (const auto& v : null_basis)
      for (const auto& entry : matvec(m, v)) CHECK(entry.is_zero());
  }
}

TEST_CASE("rank_exact is transpose- and permutation-invariant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = size(rng), cols = size(rng);
    ExactMatrix m = random_rational_matrix(rng, rows, cols);
    int r = rank_exact(m);
    CHECK(rank_exact(m.transpose()) == r);

    std::vector<int> perm(rows);
    for (int i = 0; i < rows; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    ExactMatrix shuffled(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) shuffled.at(perm[i], j) = m.at(i, j);
    CHECK(rank_exact(shuffled) == r);
  }
}

TEST_CASE("rank_float agrees with rank_exact and reports margins") {
  auto [rank_id, margin_id] = rank_float(Eigen::MatrixXd::Identity(5, 5), 1e-10);
  CHECK(rank_id == 5);
  CHECK(std::isinf(margin_id));

  Eigen::VectorXd u(4);
  u << 1, -2, 0.5, 3;
  auto [rank_outer, margin_outer] = rank_float(u * u.transpose(), 1e-10);
  CHECK(rank_outer == 1);
  CHECK(margin_outer > 1e6);

  // oracle: rank_exact on the same (rational) matrix
  ExactMatrix mhat = bowtie_mhat();
  CHECK(rank_float(mhat.to_double()).rank == rank_exact(mhat));

  Eigen::MatrixXd bad(2, 2);
  bad << 1, std::numeric_limits<double>::quiet_NaN(), 0, 1;
  CHECK_THROWS_AS(rank_float(bad), NumericError);

  std::mt19937 rng(13);
  std::uniform_int_distribution<int> size(1, 8);
  for (int trial = 0; trial < 60; ++trial) {
    ExactMatrix m = random_rational_matrix(rng, size(rng), size(rng));
    CHECK(rank_float(m.to_double(), 1e-9).rank == rank_exact(m));
  }
}
