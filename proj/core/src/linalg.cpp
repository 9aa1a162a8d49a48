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

#include "halfspin/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace halfspin {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Matrix::append_row(const std::vector<Rational>& values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const {
  Matrix s(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = (*this)(rows[r], cols[c]);
  return s;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (sgn(x) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (sgn(b(k, c)) != 0) p(r, c) += x * b(k, c);
      }
    }
  }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix p = a;
  for (auto& x : p.data_) x *= s;
  return p;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Echelon rref(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t k = c; k < cols; ++k) std::swap(m(p, k), m(lead, k));
    const Rational inv = 1 / m(lead, c);
    for (std::size_t k = c; k < cols; ++k)
      if (sgn(m(lead, k)) != 0) m(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      factor = m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(m(lead, k)) != 0) m(r, k) -= factor * m(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix reduced(lead, cols);
  for (std::size_t r = 0; r < lead; ++r)
    for (std::size_t c = 0; c < cols; ++c) reduced(r, c) = m(r, c);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  IncrementalRowSpace space(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) space.add(m.row(r));
  return space.rank();
}

Matrix nullspace(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return row_space(Matrix::from_rows(basis, m.cols()));
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = 1 / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (sgn(m(c, k)) != 0) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::optional<std::vector<Rational>> solve_left(const Matrix& m, const std::vector<Rational>& b) {
  // x·m = b  <=>  mᵀ xᵀ = bᵀ; augment and eliminate.
  const std::size_t unknowns = m.rows();
  const std::size_t equations = m.cols();
  if (b.size() != equations) throw std::invalid_argument("right-hand side length mismatch");
  Matrix aug(equations, unknowns + 1);
  for (std::size_t r = 0; r < equations; ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) aug(r, c) = m(c, r);
    aug(r, unknowns) = b[r];
  }
  const Echelon e = rref(std::move(aug));
  std::vector<Rational> x(unknowns);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == unknowns) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, unknowns);
  }
  return x;
}

Matrix row_space(const Matrix& m) { return rref(m).reduced; }

bool same_row_space(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  return row_space(a) == row_space(b);
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw std::invalid_argument("stack width mismatch");
  Matrix s(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) s(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) s(top.rows() + r, c) = bottom(r, c);
  return s;
}

Matrix intersect_row_spaces(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0 || b.rows() == 0) return Matrix(0, std::max(a.cols(), b.cols()));
  // Solve x·A = y·B: kernel of the stacked matrix [A; -B] acting from the left.
  const Matrix stacked = stack(a, Rational(-1) * b);
  const Matrix left_kernel = nullspace(stacked.transpose());
  Matrix result(0, a.cols());
  for (std::size_t r = 0; r < left_kernel.rows(); ++r) {
    std::vector<Rational> v(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Rational& x = left_kernel(r, i);
      if (sgn(x) == 0) continue;
      for (std::size_t c = 0; c < a.cols(); ++c) v[c] += x * a(i, c);
    }
    result.append_row(v);
  }
  return row_space(result);
}

Integer integer_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

void make_primitive(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& v : row)
    if (sgn(v) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& v : row)
    if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

struct IntegerEchelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivots;
};

IntegerEchelon integer_echelon(const Matrix& m) {
  const std::size_t cols = m.cols();
  IntegerEchelon e;
  auto& basis = e.rows;
  auto& pivots = e.pivots;
  for (std::size_t r = 0; r < m.rows() && basis.size() < cols; ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
    std::vector<Integer> row(cols);
    for (std::size_t c = 0; c < cols; ++c) row[c] = m(r, c).get_num() * (den / m(r, c).get_den());
    // Rows inserted earlier vanish on later pivots, so one pass clears every pivot column.
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const std::size_t p = pivots[i];
      if (sgn(row[p]) == 0) continue;
      const Integer a = basis[i][p];
      const Integer b = row[p];
      for (std::size_t c = 0; c < cols; ++c) {
        if (sgn(basis[i][c]) == 0) {
          if (sgn(row[c]) != 0) row[c] *= a;
        } else {
          row[c] = a * row[c] - b * basis[i][c];
        }
      }
      make_primitive(row);
    }
    std::size_t p = 0;
    while (p < cols && sgn(row[p]) == 0) ++p;
    if (p == cols) continue;
    basis.push_back(std::move(row));
    pivots.push_back(p);
  }
  return e;
}

}  // namespace

Matrix fraction_free_row_basis(const Matrix& m) {
  const IntegerEchelon e = integer_echelon(m);
  Matrix out(e.rows.size(), m.cols());
  for (std::size_t r = 0; r < e.rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = e.rows[r][c];
  return out;
}

Matrix fraction_free_rref(const Matrix& m) {
  IntegerEchelon e = integer_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<std::size_t> order(e.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return e.pivots[a] < e.pivots[b]; });
  // Clear every pivot column above and below its pivot, still in integers.
  for (std::size_t i : order) {
    const std::size_t p = e.pivots[i];
    const Integer a = e.rows[i][p];
    for (std::size_t j = 0; j < e.rows.size(); ++j) {
      if (j == i || sgn(e.rows[j][p]) == 0) continue;
      const Integer b = e.rows[j][p];
      for (std::size_t c = 0; c < cols; ++c) {
        if (sgn(e.rows[i][c]) == 0) {
          if (sgn(e.rows[j][c]) != 0) e.rows[j][c] *= a;
        } else {
          e.rows[j][c] = a * e.rows[j][c] - b * e.rows[i][c];
        }
      }
      make_primitive(e.rows[j]);
    }
  }
  Matrix out(order.size(), cols);
  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto& row = e.rows[order[r]];
    const Integer& piv = row[e.pivots[order[r]]];
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(row[c]) != 0) out(r, c) = Rational(row[c], piv);
    for (std::size_t c = 0; c < cols; ++c) out(r, c).canonicalize();
  }
  return out;
}

bool IncrementalRowSpace::add(std::vector<Rational> row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(row[p]) == 0) continue;
    const Rational f = row[p];
    const auto& b = basis_[i];
    for (std::size_t c = p; c < cols_; ++c)
      if (sgn(b[c]) != 0) row[c] -= f * b[c];
  }
  std::size_t p = 0;
  while (p < cols_ && sgn(row[p]) == 0) ++p;
  if (p == cols_) return false;
  const Rational inv = 1 / row[p];
  for (std::size_t c = p; c < cols_; ++c)
    if (sgn(row[c]) != 0) row[c] *= inv;
  // Keep the basis fully reduced so later reductions stay single-pass.
  for (auto& b : basis_) {
    if (sgn(b[p]) == 0) continue;
    const Rational f = b[p];
    for (std::size_t c = p; c < cols_; ++c)
      if (sgn(row[c]) != 0) b[c] -= f * row[c];
  }
  basis_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

Matrix IncrementalRowSpace::basis() const {
  std::vector<std::size_t> order(basis_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
  Matrix m(0, cols_);
  for (auto i : order) m.append_row(basis_[i]);
  return m;
}

}  // namespace halfspin
