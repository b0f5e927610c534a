// Copyright 2026 The chowform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Small dense exact linear algebra over a field (in practice Rational).
// Sizes here are at most a dozen rows, so plain Gaussian elimination with
// the first nonzero pivot is all that is needed; there is no rounding to
// worry about.

#include <algorithm>
#include <array>
#include <cassert>
#include <initializer_list>
#include <span>
#include <vector>

#include "chowform/error.hpp"
#include "chowform/rational.hpp"

namespace chowform {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Matrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
      assert(static_cast<int>(row.size()) == c);
      std::copy(row.begin(), row.end(), m.data_.begin() + i * c);
      ++i;
    }
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      detail::require(static_cast<int>(rows[i].size()) == c, "ragged matrix rows");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * c);
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(int i) const { return {data_.data() + i * cols_, std::size_t(cols_)}; }
  std::vector<T> row_vector(int i) const { return {row(i).begin(), row(i).end()}; }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(values.size());
    detail::require(static_cast<int>(values.size()) == cols_, "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using Vec = std::vector<Rational>;

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<int> reduce_row_echelon(Matrix<T>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const T inv = T(1) / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const T f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
int rank(Matrix<T> m) {
  return static_cast<int>(reduce_row_echelon(m).size());
}

template <class T>
T determinant(Matrix<T> m) {
  detail::require(m.rows() == m.cols(), "determinant of a non-square matrix");
  const int n = m.rows();
  T det(1);
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) return T(0);
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const T inv = T(1) / m(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const T f = m(i, col) * inv;
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

/// Basis of {v : m v = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
  const std::vector<int> pivots = reduce_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::vector<T> multiply(const Matrix<T>& m, std::span<const T> v) {
  detail::require(static_cast<int>(v.size()) == m.cols(), "matrix-vector size mismatch");
  std::vector<T> out(m.rows(), T(0));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

/// Row vector times matrix.
template <class T>
std::vector<T> multiply(std::span<const T> v, const Matrix<T>& m) {
  detail::require(static_cast<int>(v.size()) == m.rows(), "vector-matrix size mismatch");
  std::vector<T> out(m.cols(), T(0));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require(a.cols() == b.rows(), "matrix product size mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      T s(0);
      for (int l = 0; l < a.cols(); ++l) s += a(i, l) * b(l, j);
      out(i, j) = s;
    }
  }
  return out;
}

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  detail::require(a.size() == b.size(), "dot product size mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
std::vector<T> cross(std::span<const T> a, std::span<const T> b) {
  detail::require(a.size() == 3 && b.size() == 3, "cross product needs 3-vectors");
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class T>
bool is_zero(std::span<const T> v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return x == 0; });
}

/// Same point of projective space: both nonzero and parallel.
template <class T>
bool projectively_equal(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

/// Matrix whose rows are the given vectors.
template <class T>
Matrix<T> stack_rows(std::span<const std::vector<T>> rows) {
  return Matrix<T>::from_rows(std::vector<std::vector<T>>(rows.begin(), rows.end()));
}

}  // namespace chowform
