#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <vector>

#include "strongq/scalar.hpp"

namespace strongq {

using ExactVector = std::vector<ExactScalar>;

// Dense matrix over Q(sqrt(d)), row-major.  All entries must live in one
// quadratic field; radicand() computes (and validates) the common d.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
  // Row-major construction from integer literals, for tests and builders.
  ExactMatrix(int rows, int cols, std::initializer_list<long> vals);

  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  ExactScalar& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const ExactScalar& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  ExactMatrix transpose() const;
  ExactScalar trace() const;
  std::uint64_t radicand() const;

  ExactMatrix operator-() const;
  friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator*(const ExactScalar& c, ExactMatrix m);
  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y);

  Eigen::MatrixXd to_double() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<ExactScalar> e_;
};

// Reduces M to reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref_inplace(ExactMatrix& m);

// Rank over Q(sqrt(d)) by fraction-managed Gaussian elimination with exact
// zero tests.  Throws InvalidFieldError on mixed radicands.
int rank_exact(const ExactMatrix& m);

// Exactly (cols - rank) independent vectors v with M v = 0.
std::vector<ExactVector> nullspace_basis_exact(const ExactMatrix& m);

// M v over the common field.
ExactVector matvec(const ExactMatrix& m, const ExactVector& v);

}  // namespace strongq
