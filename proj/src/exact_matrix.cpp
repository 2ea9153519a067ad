#include "strongq/exact_matrix.hpp"

namespace strongq {

ExactMatrix::ExactMatrix(int rows, int cols, std::initializer_list<long> vals)
    : ExactMatrix(rows, cols) {
  if (vals.size() != e_.size()) throw ShapeError("initializer size mismatch");
  size_t k = 0;
  for (long v : vals) e_[k++] = ExactScalar(v);
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ExactScalar(1);
  return m;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ExactScalar ExactMatrix::trace() const {
  if (!is_square()) throw ShapeError("trace of non-square matrix");
  ExactScalar s;
  for (int i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

std::uint64_t ExactMatrix::radicand() const {
  std::uint64_t d = 0;
  for (const auto& x : e_) d = ExactScalar::join_radicand(d, x.radicand());
  return d;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw ShapeError("addition shape mismatch");
  ExactMatrix r = x;
  for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += y.e_[k];
  return r;
}

ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) { return x + (-y); }

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.cols_ != y.rows_) throw ShapeError("product shape mismatch");
  ExactMatrix r(x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i)
    for (int k = 0; k < x.cols_; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (int j = 0; j < y.cols_; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

ExactMatrix operator*(const ExactScalar& c, ExactMatrix m) {
  for (auto& x : m.e_) x *= c;
  return m;
}

bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
}

Eigen::MatrixXd ExactMatrix::to_double() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).to_double();
  return m;
}

std::vector<int> rref_inplace(ExactMatrix& m) {
  m.radicand();  // validates one common field up front
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    ExactScalar inv = ExactScalar(1) / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      ExactScalar f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank_exact(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    m.radicand();
    return 0;
  }
  ExactMatrix work = m;
  return static_cast<int>(rref_inplace(work).size());
}

std::vector<ExactVector> nullspace_basis_exact(const ExactMatrix& m) {
  ExactMatrix work = m;
  std::vector<int> pivots = (m.rows() > 0 && m.cols() > 0) ? rref_inplace(work)
                                                           : std::vector<int>{};
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<ExactVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = ExactScalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(int(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactVector matvec(const ExactMatrix& m, const ExactVector& v) {
  if (v.size() != size_t(m.cols())) throw ShapeError("apply shape mismatch");
  ExactVector r(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

}  // namespace strongq
