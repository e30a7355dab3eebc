#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cadef/error.hpp"
#include "cadef/exactnum/ratfunc.hpp"
#include "cadef/exactnum/rational.hpp"

namespace cadef {

template <typename T>
using Vec = std::vector<T>;

/// Dense row-major matrix over an exact field (Rational or RatFunc).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error(ErrorCode::DimensionMismatch, "matrix entry count");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `height`).
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t height) {
    Matrix m(height, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != height) throw Error(ErrorCode::DimensionMismatch, "column length");
      for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      T acc{};
      for (std::size_t j = 0; j < cols_; ++j) {
        const T& a = (*this)(i, j);
        if (a.is_zero() || v[j].is_zero()) continue;
        acc += a * v[j];
      }
      out[i] = std::move(acc);
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (!y.is_zero()) c(i, j) += x * y;
        }
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using QVec = Vec<Rational>;

/// Result of Gauss-Jordan elimination: the reduced row echelon form and the
/// pivot column of each nonzero row.
template <typename T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

template <typename T>
Echelon<T> rref(Matrix<T> m) {
  Echelon<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (!m(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    T inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) = m(i, j) - f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename T>
std::size_t mat_rank(const Matrix<T>& m) {
  // Forward elimination only; cheaper than full rref.
  Matrix<T> a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (!a(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == a.rows()) continue;
    if (pivot != r)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
    T inv = a(r, c).inverse();
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      T f = a(i, c) * inv;
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) = a(i, j) - f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Basis of the right null space {v : M v = 0}.
template <typename T>
std::vector<std::vector<T>> mat_kernel(const Matrix<T>& m) {
  Echelon<T> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols());
    v[free] = T(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      const T& a = e.reduced(r, free);
      if (!a.is_zero()) v[e.pivot_cols[r]] = -a;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves M x = b; returns nullopt when inconsistent. Free variables are zero.
template <typename T>
std::optional<std::vector<T>> mat_solve(const Matrix<T>& m, std::span<const T> b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve rhs length");
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon<T> e = rref(std::move(aug));
  std::vector<T> x(m.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] == m.cols()) return std::nullopt;
    x[e.pivot_cols[r]] = e.reduced(r, m.cols());
  }
  return x;
}

template <typename T>
bool is_zero_vector(std::span<const T> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Maximal linearly independent subfamily of `vectors`, in input order.
template <typename T>
std::vector<std::size_t> independent_subset(const std::vector<std::vector<T>>& vectors, std::size_t dim) {
  // Incremental echelon basis keyed by pivot coordinate.
  std::vector<std::pair<std::size_t, std::vector<T>>> basis;
  std::vector<std::size_t> chosen;
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    std::vector<T> v = vectors[idx];
    if (v.size() != dim) throw Error(ErrorCode::DimensionMismatch, "vector length");
    for (const auto& [p, b] : basis) {
      if (v[p].is_zero()) continue;
      T f = v[p];
      for (std::size_t j = 0; j < dim; ++j)
        if (!b[j].is_zero()) v[j] = v[j] - f * b[j];
    }
    std::size_t p = 0;
    while (p < dim && v[p].is_zero()) ++p;
    if (p == dim) continue;
    T inv = v[p].inverse();
    for (auto& x : v)
      if (!x.is_zero()) x = x * inv;
    // keep basis fully reduced on pivot coordinates
    for (auto& [q, b] : basis) {
      if (b[p].is_zero()) continue;
      T f = b[p];
      for (std::size_t j = 0; j < dim; ++j)
        if (!v[j].is_zero()) b[j] = b[j] - f * v[j];
    }
    basis.emplace_back(p, std::move(v));
    chosen.push_back(idx);
  }
  return chosen;
}

template <typename T>
std::size_t span_dimension(const std::vector<std::vector<T>>& vectors, std::size_t dim) {
  return independent_subset(vectors, dim).size();
}

/// Coordinates with respect to a fixed linearly independent family. Built once
/// by inverting the family on a set of pivot rows; `coords` then costs one
/// small matrix-vector product plus a membership check.
template <typename T>
class CoordinateSystem {
 public:
  CoordinateSystem() = default;
  CoordinateSystem(const std::vector<std::vector<T>>& basis, std::size_t ambient)
      : ambient_(ambient), basis_(basis) {
    std::size_t r = basis.size();
    Matrix<T> cols = Matrix<T>::from_columns(basis, ambient);
    // Row-reduce [B | I] to find pivot rows and the left inverse on them.
    Matrix<T> bt = cols.transpose();  // r x ambient
    Echelon<T> e = rref(bt);
    if (e.rank() != r) throw Error(ErrorCode::InvalidInput, "coordinate basis is not independent");
    pivot_rows_ = e.pivot_cols;
    Matrix<T> square(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) square(i, j) = cols(pivot_rows_[i], j);
    inverse_ = invert(square);
  }

  std::size_t size() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<std::vector<T>>& basis() const { return basis_; }

  /// Coordinates of v, or nullopt when v is outside the span.
  std::optional<std::vector<T>> try_coords(std::span<const T> v) const {
    std::size_t r = basis_.size();
    std::vector<T> sel(r);
    for (std::size_t i = 0; i < r; ++i) sel[i] = v[pivot_rows_[i]];
    std::vector<T> c = inverse_.apply(sel);
    for (std::size_t i = 0; i < ambient_; ++i) {
      T acc{};
      for (std::size_t j = 0; j < r; ++j)
        if (!c[j].is_zero() && !basis_[j][i].is_zero()) acc += c[j] * basis_[j][i];
      if (!(acc == v[i])) return std::nullopt;
    }
    return c;
  }

  std::vector<T> coords(std::span<const T> v) const {
    auto c = try_coords(v);
    if (!c) throw Error(ErrorCode::InvalidInput, "vector outside the span of the coordinate basis");
    return *c;
  }

  std::vector<T> combine(std::span<const T> c) const {
    std::vector<T> out(ambient_);
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      if (c[j].is_zero()) continue;
      for (std::size_t i = 0; i < ambient_; ++i)
        if (!basis_[j][i].is_zero()) out[i] += c[j] * basis_[j][i];
    }
    return out;
  }

  static Matrix<T> invert(const Matrix<T>& square) {
    std::size_t n = square.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = square(i, j);
      aug(i, n + i) = T(1);
    }
    Echelon<T> e = rref(std::move(aug));
    if (e.rank() < n || (n > 0 && e.pivot_cols[n - 1] >= n))
      throw Error(ErrorCode::NotInvertible, "singular matrix");
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<std::vector<T>> basis_;
  std::vector<std::size_t> pivot_rows_;
  Matrix<T> inverse_;
};

/// Entrywise specialization of a polynomial matrix at t = at.
QMatrix evaluate(const Matrix<RatFunc>& m, const Rational& at);

/// Exact rank of a sparse matrix given as rows of (column, value) pairs.
/// Uses incremental elimination with sparsest-first row ordering.
using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;
std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t ncols);

}  // namespace cadef
