#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "homalg/fields.hpp"

namespace homalg {

// Dense matrix over an exact field. Immutable by convention: operations
// return new values.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<K> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw std::invalid_argument("entry count mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!homalg::is_zero(x)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& x = at(i, k);
        if (homalg::is_zero(x)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }
  Matrix scaled(const K& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
  }

  // (a kron b)(v kron w) = av kron bw under lexicographic (left-major) bases.
  Matrix kronecker(const Matrix& b) const {
    Matrix r(rows_ * b.rows_, cols_ * b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const K& x = at(i, j);
        if (homalg::is_zero(x)) continue;
        for (std::size_t p = 0; p < b.rows_; ++p)
          for (std::size_t q = 0; q < b.cols_; ++q)
            r.at(i * b.rows_ + p, j * b.cols_ + q) = x * b.at(p, q);
      }
    return r;
  }

  Matrix hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
    Matrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }
  Matrix vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vstack col mismatch");
    Matrix r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
  }

  Matrix column(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
  }
  Matrix columns(const std::vector<std::size_t>& idx) const {
    Matrix c(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = 0; i < rows_; ++i) c.at(i, j) = at(i, idx[j]);
    return c;
  }

  struct Rref {
    Matrix<K> reduced;
    std::vector<std::size_t> pivot_cols;
  };

  Rref rref() const {
    Matrix r = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = rows_;
      for (std::size_t i = row; i < rows_; ++i)
        if (!homalg::is_zero(r.at(i, col))) { sel = i; break; }
      if (sel == rows_) continue;
      if (sel != row)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(r.at(sel, j), r.at(row, j));
      K inv = K(1) / r.at(row, col);
      for (std::size_t j = col; j < cols_; ++j) r.at(row, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || homalg::is_zero(r.at(i, col))) continue;
        K f = r.at(i, col);
        for (std::size_t j = col; j < cols_; ++j) r.at(i, j) -= f * r.at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return {std::move(r), std::move(pivots)};
  }

  std::size_t rank() const { return rref().pivot_cols.size(); }

  // Columns span ker(*this); column count = cols - rank.
  Matrix kernel_basis() const {
    auto [r, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!is_pivot[j]) free_cols.push_back(j);
    Matrix k(cols_, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
      std::size_t fc = free_cols[f];
      k.at(fc, f) = K(1);
      for (std::size_t i = 0; i < pivots.size(); ++i) k.at(pivots[i], f) = -r.at(i, fc);
    }
    return k;
  }

  // Solves (*this) x = b columnwise; absent when inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const {
    if (b.rows() != rows_) throw std::invalid_argument("solve shape mismatch");
    auto [r, pivots] = hstack(b).rref();
    Matrix x(cols_, b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (pivots[i] >= cols_) return std::nullopt;  // pivot in the augmented part
      for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = r.at(i, cols_ + j);
    }
    return x;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve(identity(rows_));
    if (!x) return std::nullopt;
    if (rank() != rows_) return std::nullopt;
    return x;
  }

  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  // Flattens row-major into a single column (vec of the matrix).
  Matrix vectorized() const {
    Matrix v(rows_ * cols_, 1);
    for (std::size_t i = 0; i < a_.size(); ++i) v.at(i, 0) = a_[i];
    return v;
  }
  static Matrix from_vectorized(const Matrix& v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols)
      throw std::invalid_argument("from_vectorized shape mismatch");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v.at(i * cols + j, 0);
    return m;
  }

  const std::vector<K>& data() const { return a_; }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

// Independent subset of the given columns, as a matrix of columns.
template <class K>
Matrix<K> column_basis(const Matrix<K>& span) {
  return span.columns(span.rref().pivot_cols);
}

// Coordinates of vecs in the given column basis, when representable.
template <class K>
std::optional<Matrix<K>> coords_in(const Matrix<K>& basis, const Matrix<K>& vecs) {
  return basis.solve(vecs);
}

// Quotient of an ambient coordinate space by the column span of `span`.
// proj * lift = identity on the quotient; proj annihilates the span.
template <class K>
struct QuotientSpace {
  Matrix<K> proj;  // dim_quotient x dim_ambient
  Matrix<K> lift;  // dim_ambient x dim_quotient, standard-vector section
  std::size_t dim() const { return proj.rows(); }
};

template <class K>
QuotientSpace<K> quotient_by(const Matrix<K>& span, std::size_t ambient_dim) {
  if (span.rows() != ambient_dim) throw std::invalid_argument("quotient ambient mismatch");
  Matrix<K> basis = column_basis(span);
  std::size_t r = basis.cols();
  // complete with standard vectors
  auto [red, pivots] = basis.hstack(Matrix<K>::identity(ambient_dim)).rref();
  std::vector<std::size_t> comp;
  for (auto p : pivots)
    if (p >= r) comp.push_back(p - r);
  Matrix<K> lift(ambient_dim, comp.size());
  for (std::size_t j = 0; j < comp.size(); ++j) lift.at(comp[j], j) = K(1);
  // full change of basis [basis | lift] and its inverse; quotient coords are
  // the rows of the inverse matching the complement block
  Matrix<K> full = basis.hstack(lift);
  auto inv = full.inverse();
  if (!inv) throw std::logic_error("quotient basis completion failed");
  Matrix<K> proj(comp.size(), ambient_dim);
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) proj.at(i, j) = inv->at(r + i, j);
  return {std::move(proj), std::move(lift)};
}

}  // namespace homalg
