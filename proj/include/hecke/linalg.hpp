#pragma once

/**
 * @file linalg.hpp
 * @brief Dense exact matrices, row reduction, rank and kernels.
 *
 * Vectors are 1-column matrices. Elimination requires a field, so kernel()
 * and rank() are only available over CyclotomicScalar; over LaurentScalar
 * they throw std::domain_error (specialize first).
 */

#include <algorithm>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

template <class S>
concept FieldScalar = requires(const S a) {
  { a.inverse() } -> std::same_as<S>;
  { a * a } -> std::same_as<S>;
  { a - a } -> std::same_as<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

template <class S>
class Matrix {
 public:
  Matrix(int rows, int cols, const S& zero) : rows_(rows), cols_(cols), zero_(zero), data_(std::size_t(rows) * cols, zero) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static Matrix identity(int n, const S& zero, const S& one) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  template <ScalarRing R>
  static Matrix identity(int n, const R& ring) {
    return identity(n, ring.zero(), ring.one());
  }
  /// Column vector from entries.
  static Matrix column_vector(const std::vector<S>& entries, const S& zero) {
    Matrix m(static_cast<int>(entries.size()), 1, zero);
    for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = entries[i];
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const S& zero() const noexcept { return zero_; }

  S& operator()(int r, int c) { return data_[index(r, c)]; }
  const S& operator()(int r, int c) const { return data_[index(r, c)]; }

  Matrix column(int c) const {
    Matrix out(rows_, 1, zero_);
    for (int r = 0; r < rows_; ++r) out.data_[r] = (*this)(r, c);
    return out;
  }
  void set_column(int c, const Matrix& v) {
    if (v.rows_ != rows_ || v.cols_ != 1) throw std::invalid_argument("set_column: shape mismatch");
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v.data_[r];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  S trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
    S t = zero_;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Applies f entrywise, e.g. to specialize a generic matrix.
  template <class F>
  auto map(F&& f, const std::invoke_result_t<F, const S&>& new_zero) const {
    Matrix<std::invoke_result_t<F, const S&>> out(rows_, cols_, new_zero);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const S& s, Matrix m) {
    for (auto& x : m.data_)
      if (!x.is_zero()) x = s * x;
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Exact product; zero entries of `a` are skipped.
  friend Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("mat_mul: " + a.dims() + " times " + b.dims());
    Matrix out(a.rows_, b.cols_, a.zero_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const S& bkj = b(k, j);
          if (!bkj.is_zero()) out(i, j) += aik * bkj;
        }
      }
    return out;
  }

  /// Stacks matrices with equal column counts.
  static Matrix vstack(const std::vector<Matrix>& blocks, int cols, const S& zero) {
    int total = 0;
    for (const auto& b : blocks) {
      if (b.cols_ != cols) throw std::invalid_argument("vstack: column count mismatch");
      total += b.rows_;
    }
    Matrix out(total, cols, zero);
    int r0 = 0;
    for (const auto& b : blocks) {
      std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + std::size_t(r0) * cols);
      r0 += b.rows_;
    }
    return out;
  }

  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).to_string());
    return out;
  }

  std::string dims() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") in " + dims());
    return std::size_t(r) * cols_ + c;
  }
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch: " + dims() + " vs " + o.dims());
  }

  int rows_, cols_;
  S zero_;
  std::vector<S> data_;
};

inline CyclotomicScalar one_like(const CyclotomicScalar& z) { return CyclotomicScalar(z.order(), Rational(1)); }

/// Reduced row echelon form; returns pivot columns in increasing order.
/// Pivot = first nonzero entry in column order, normalized to 1.
template <FieldScalar S>
std::vector<int> rref_in_place(Matrix<S>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const S inv = m(row, col).inverse();
    for (int c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) = m(row, c) * inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const S f = m(r, col);
      for (int c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <FieldScalar S>
int rank(Matrix<S> m) {
  return static_cast<int>(rref_in_place(m).size());
}

/// Basis of the right null space. One vector per free column f, with a 1 in
/// position f and zeros in the other free positions.
template <FieldScalar S>
std::vector<Matrix<S>> kernel(Matrix<S> m) {
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Matrix<S>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Matrix<S> v(m.cols(), 1, m.zero());
    v(f, 0) = one_like(m.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i], 0) = -m(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline int rank(const Matrix<LaurentScalar>&) {
  throw std::domain_error("rank needs a field: specialize the Laurent matrix at a root of unity first");
}
inline std::vector<Matrix<LaurentScalar>> kernel(const Matrix<LaurentScalar>&) {
  throw std::domain_error("kernel needs a field: specialize the Laurent matrix at a root of unity first");
}

/// Incrementally maintained row-echelon basis of a subspace of column vectors.
template <FieldScalar S>
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim) : dim_(dim) {}

  int dimension() const noexcept { return static_cast<int>(rows_.size()); }

  /// Adds v (a dim x 1 matrix) if it is not in the span; returns whether it was added.
  bool insert(const Matrix<S>& v) {
    if (v.rows() != dim_ || v.cols() != 1) throw std::invalid_argument("EchelonBasis: wrong vector shape");
    std::vector<S> w;
    w.reserve(dim_);
    for (int i = 0; i < dim_; ++i) w.push_back(v(i, 0));
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const S f = w[pivots_[k]];
      if (f.is_zero()) continue;
      for (int i = pivots_[k]; i < dim_; ++i)
        if (!rows_[k][i].is_zero()) w[i] -= f * rows_[k][i];
    }
    int pivot = -1;
    for (int i = 0; i < dim_; ++i)
      if (!w[i].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    const S inv = w[pivot].inverse();
    for (int i = pivot; i < dim_; ++i)
      if (!w[i].is_zero()) w[i] = w[i] * inv;
    rows_.push_back(std::move(w));
    pivots_.push_back(pivot);
    return true;
  }

 private:
  int dim_;
  std::vector<std::vector<S>> rows_;
  std::vector<int> pivots_;
};

}  // namespace hecke
