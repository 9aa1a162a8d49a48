/*
 * Copyright 2026 The halfspin Authors
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
#include <optional>
#include <string>
#include <vector>

#include "halfspin/rational.hpp"

namespace halfspin {

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  void append_row(const std::vector<Rational>& values);
  Matrix transpose() const;
  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);

  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each kept row
};

// Gauss-Jordan elimination choosing the first nonzero entry in each column.
Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

// Rows of the result span {x : m x = 0}; the basis is in reduced echelon form.
Matrix nullspace(const Matrix& m);

Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

// Solves x·m = b for a row vector x when possible.
std::optional<std::vector<Rational>> solve_left(const Matrix& m, const std::vector<Rational>& b);

// Canonical basis (reduced echelon) of the row space.
Matrix row_space(const Matrix& m);
bool same_row_space(const Matrix& a, const Matrix& b);
Matrix stack(const Matrix& top, const Matrix& bottom);
// Basis of rowspace(a) ∩ rowspace(b).
Matrix intersect_row_spaces(const Matrix& a, const Matrix& b);

// Echelon basis of the row space made of primitive integer rows, dividing out the content
// after every update. Far cheaper than rational elimination for tall matrices with large
// entries; feed the result to nullspace or row_space for a canonical form.
Matrix fraction_free_row_basis(const Matrix& m);
// Reduced row echelon form of the row space (as rref(m).reduced), computed fraction-free.
Matrix fraction_free_rref(const Matrix& m);

// Fraction-free Bareiss determinant for integer matrices.
Integer integer_determinant(std::vector<std::vector<Integer>> m);

// Appends rows one at a time and keeps a reduced echelon basis of their span.
// Used when many rows arrive and only the rank or span matters.
class IncrementalRowSpace {
 public:
  explicit IncrementalRowSpace(std::size_t cols) : cols_(cols) {}
  // Returns true when the row enlarged the span.
  bool add(std::vector<Rational> row);
  std::size_t rank() const { return basis_.size(); }
  Matrix basis() const;

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace halfspin
