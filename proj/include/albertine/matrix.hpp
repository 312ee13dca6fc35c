/*
 * Copyright 2026 The Albertine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "albertine/quaternion.hpp"
#include "albertine/scalar.hpp"

namespace albertine {

/// Dense row-major matrix over a ring T. Dimensions are checked on every
/// arithmetic operation; element access is unchecked.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ShapeError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows_ == cols_; }
  [[nodiscard]] const std::vector<T>& data() const { return data_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix& operator+=(const Matrix& o) {
    check_same(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x = x * s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw ShapeError("matrix product of " + a.shape() + " and " + b.shape());
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Conjugate transpose; for quaternion entries this is the standard
  /// involution A -> conj(A)^T.
  [[nodiscard]] Matrix adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conj((*this)(i, j));
    return t;
  }

  [[nodiscard]] Matrix conjugate() const {
    Matrix t(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = conj(data_[k]);
    return t;
  }

  [[nodiscard]] Matrix submatrix(const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  [[nodiscard]] std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void check_same(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw ShapeError(std::string("matrix ") + op + " of " + shape() + " and " + o.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatR = Matrix<double>;
using MatC = Matrix<Complex>;
using MatH = Matrix<Quaternion>;
using MatZ = Matrix<Int>;
using MatG = Matrix<GaussInt>;
using MatHZ = Matrix<QuatInt>;

template <class T, class U, class F>
Matrix<U> map_entries(const Matrix<T>& m, F&& f) {
  Matrix<U> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  return out;
}

/// Block-diagonal direct sum.
template <class T>
Matrix<T> direct_sum(const std::vector<Matrix<T>>& blocks) {
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix<T> out(r, c);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, unsigned exponent) {
  if (!m.square()) throw ShapeError("power of non-square matrix " + m.shape());
  Matrix<T> result = Matrix<T>::identity(m.rows());
  Matrix<T> base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MatC to_complex(const MatG& m);
MatC to_complex(const MatZ& m);
MatH to_quaternion(const MatHZ& m);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const MatC& a, const MatC& b);

}  // namespace albertine
