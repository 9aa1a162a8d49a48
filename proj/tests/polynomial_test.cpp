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

#include "halfspin/polynomial.hpp"
#include "support/oracles.hpp"

namespace halfspin {
namespace {

Polynomial x(int n, std::initializer_list<int> idx, const Rational& c = 1) {
  Mask m = 0;
  for (int i : idx) m |= bit(i);
  return Polynomial::variable(n, m, c);
}

TEST(Polynomial, ConstantsAndCoordinates) {
  const Polynomial seven = Polynomial::constant(3, Parity::Even, 7);
  EXPECT_EQ(eval_poly(seven, SpinVector::omega1(3)), 7);
  EXPECT_EQ(seven.homogeneous_degree(), 0);

  const Polynomial p = x(2, {1, 2});
  EXPECT_EQ(eval_poly(p, SpinVector::omega0(2)), 1);
  EXPECT_EQ(eval_poly(p, SpinVector::unit(2)), 0);
}

TEST(Polynomial, RejectsWrongLevelAndParity) {
  const Polynomial p = x(3, {1, 2});
  EXPECT_THROW(eval_poly(p, SpinVector::unit(2)), std::invalid_argument);
  EXPECT_THROW(eval_poly(p, SpinVector::basis(3, bit(1))), std::invalid_argument);
  EXPECT_THROW(p + x(3, {1}), std::invalid_argument);
  EXPECT_THROW(Polynomial::variable(2, bit(3)), std::out_of_range);
  Polynomial q(3, Parity::Even);
  EXPECT_THROW(q.add_term({bit(1)}, 1), std::invalid_argument);
}

TEST(Polynomial, ArithmeticMatchesPointwiseEvaluation) {
  std::mt19937_64 rng(31);
  const int n = 4;
  const Polynomial a = x(n, {1, 2}, 3) + x(n, {}, -1) * x(n, {3, 4});
  const Polynomial b = x(n, {1, 3}) + Polynomial::constant(n, Parity::Even, 2);
  const Polynomial prod = a * b;
  const Polynomial cube = pow(b, 3);
  for (int t = 0; t < 20; ++t) {
    const SpinVector pt = testing::random_spin(n, Parity::Even, rng);
    const Rational va = eval_poly(a, pt);
    const Rational vb = eval_poly(b, pt);
    EXPECT_EQ(eval_poly(prod, pt), va * vb);
    EXPECT_EQ(eval_poly(a + b, pt), va + vb);
    EXPECT_EQ(eval_poly(a - b, pt), va - vb);
    EXPECT_EQ(eval_poly(cube, pt), vb * vb * vb);
  }
  EXPECT_FALSE(prod.homogeneous_degree().has_value());
  EXPECT_EQ(prod.degree(), 3);
  EXPECT_EQ(homogeneous_part(prod, 3), Rational(-1) * (x(n, {}) * x(n, {3, 4}) * x(n, {1, 3})));
  EXPECT_EQ(homogeneous_part(prod, 1), x(n, {1, 2}, 6));
}

TEST(Polynomial, PartialDerivativeCountsMultiplicity) {
  const int n = 4;
  const Polynomial v = x(n, {1, 2});
  const Polynomial w = x(n, {3, 4});
  const Polynomial p = pow(v, 3) * w + 5 * w;
  EXPECT_EQ(partial(p, bit(1) | bit(2)), 3 * (pow(v, 2) * w));
  EXPECT_EQ(partial(p, bit(3) | bit(4)), pow(v, 3) + Polynomial::constant(n, Parity::Even, 5));
  EXPECT_TRUE(partial(p, 0).is_zero());
}

TEST(Polynomial, SerializationUsesIndexLists) {
  const Polynomial p = x(4, {1, 2}) * x(4, {}) + x(4, {3, 4}, Rational(-1, 2)) * x(4, {3, 4});
  EXPECT_EQ(p.to_string(), "1*x[]*x[1,2] + -1/2*x[3,4]^2");
  EXPECT_EQ(to_limit(p).to_string(), "-1/2*x[~1,2]^2 + 1*x[~3,4]*x[~1,2,3,4]");
  EXPECT_EQ(Polynomial(2, Parity::Odd).to_string(), "0");
}

TEST(Polynomial, LimitImageComplementsAndTracksParity) {
  const Polynomial p = x(3, {1});
  const Polynomial l = to_limit(p);
  EXPECT_TRUE(l.is_limit());
  EXPECT_EQ(l.parity(), Parity::Even);
  EXPECT_TRUE(l.contains_variable(bit(2) | bit(3)));
  EXPECT_EQ(l.max_key_size(), 2);
  EXPECT_EQ(l.max_index(), 3);
}

TEST(Polynomial, MonomialEnumerationHasBinomialSize) {
  const std::vector<Mask> vars = {5, 3, 9, 3, 6};
  EXPECT_EQ(monomials_of_degree(vars, 0).size(), 1u);
  EXPECT_EQ(monomials_of_degree(vars, 2).size(), 10u);  // 4 distinct variables
  EXPECT_EQ(monomials_of_degree(vars, 3).size(), 20u);
  for (const auto& m : monomials_of_degree(vars, 3)) EXPECT_TRUE(std::is_sorted(m.begin(), m.end()));
}

TEST(Polynomial, SubstitutionComposesLinearForms) {
  const int n = 2;
  // x[] -> x[] + x[1,2], x[1,2] -> 2x[]
  const Polynomial p = x(n, {}) * x(n, {1, 2});
  const Polynomial s = substitute(
      p, [&](Mask k) { return k == 0 ? x(n, {}) + x(n, {1, 2}) : x(n, {}, 2); }, n, Parity::Even);
  EXPECT_EQ(s, 2 * (x(n, {}) * x(n, {}) + x(n, {}) * x(n, {1, 2})));
  EXPECT_EQ(restrict_to(s, [](Mask k) { return k == 0; }), 2 * (x(n, {}) * x(n, {})));
}

}  // namespace
}  // namespace halfspin
