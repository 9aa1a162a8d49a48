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

#include <gtest/gtest.h>

#include <random>

#include "halfspin/linalg.hpp"

namespace halfspin {
namespace {

Matrix m2(long a, long b, long c, long d) {
  Matrix m(2, 2);
  m(0, 0) = a; m(0, 1) = b; m(1, 0) = c; m(1, 1) = d;
  return m;
}

TEST(Linalg, DeterminantAndInverse) {
  const Matrix m = m2(2, 1, 7, 4);
  EXPECT_EQ(determinant(m), 1);
  const auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, Matrix::identity(2));
  EXPECT_FALSE(inverse(m2(1, 2, 2, 4)).has_value());
}

TEST(Linalg, NullspaceOfRankOneMatrix) {
  const Matrix m = m2(1, 2, 2, 4);
  const Matrix k = nullspace(m);
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_TRUE((m * k.transpose()).is_zero());
  EXPECT_EQ(rank(m), 1u);
}

TEST(Linalg, IntegerDeterminantMatchesRational) {
  std::vector<std::vector<Integer>> a{{2, -1, 0, 3}, {1, 4, 2, 0}, {0, 5, -3, 1}, {7, 0, 1, 2}};
  Matrix q(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) q(i, j) = Rational(a[i][j]);
  EXPECT_EQ(Rational(integer_determinant(a)), determinant(q));
}

TEST(Linalg, RowSpaceIntersection) {
  Matrix a(2, 3), b(2, 3);
  a(0, 0) = 1; a(1, 1) = 1;  // xy-plane
  b(0, 1) = 1; b(1, 2) = 1;  // yz-plane
  const Matrix i = intersect_row_spaces(a, b);
  ASSERT_EQ(i.rows(), 1u);
  EXPECT_EQ(i(0, 1), 1);
}

TEST(Linalg, SolveLeft) {
  const Matrix m = m2(1, 2, 3, 4);
  const auto x = solve_left(m, {Rational(5), Rational(8)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0] * 1 + (*x)[1] * 3, 5);
  EXPECT_EQ((*x)[0] * 2 + (*x)[1] * 4, 8);
}

TEST(Linalg, FractionFreeEliminationMatchesRationalRref) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> entry(-40, 40);
  for (int trial = 0; trial < 20; ++trial) {
    // Tall, rank-deficient: rows are combinations of a few seeds.
    const std::size_t cols = 7;
    const std::size_t seeds = 2 + static_cast<std::size_t>(trial % 5);
    Matrix base(seeds, cols);
    for (std::size_t r = 0; r < seeds; ++r)
      for (std::size_t c = 0; c < cols; ++c) base(r, c) = make_rational(entry(rng), 1 + trial % 3);
    Matrix m(0, cols);
    for (int r = 0; r < 25; ++r) {
      std::vector<Rational> row(cols);
      for (std::size_t s = 0; s < seeds; ++s) {
        const Rational w = entry(rng);
        for (std::size_t c = 0; c < cols; ++c) row[c] += w * base(s, c);
      }
      m.append_row(row);
    }
    EXPECT_EQ(fraction_free_rref(m), rref(m).reduced);
    EXPECT_TRUE(same_row_space(fraction_free_row_basis(m), m));
    EXPECT_EQ(nullspace(fraction_free_rref(m)), nullspace(m));
  }
  EXPECT_EQ(fraction_free_rref(Matrix(3, 4)).rows(), 0u);
}

}  // namespace
}  // namespace halfspin
