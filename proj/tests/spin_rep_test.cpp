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

#include "halfspin/grassmann.hpp"
#include "halfspin/spin_rep.hpp"
#include "support/oracles.hpp"

namespace halfspin {
namespace {

VectorInV e_vec(int n, int i) { return VectorInV::basis(n, e_sym(i)); }
VectorInV f_vec(int n, int i) { return VectorInV::basis(n, f_sym(i)); }

std::vector<SoElement> basis_two_forms(int n) {
  std::vector<SoElement> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i < j) {
        out.push_back(SoElement::ee(n, i, j));
        out.push_back(SoElement::ff(n, i, j));
      }
      out.push_back(SoElement::ef(n, i, j));
    }
  return out;
}

TEST(Outer, WedgesWithPositionSign) {
  EXPECT_EQ(outer(e_vec(2, 1), SpinVector::unit(2)), SpinVector::basis(2, bit(1)));
  EXPECT_TRUE(outer(e_vec(2, 1), SpinVector::basis(2, bit(1))).is_zero());
  EXPECT_EQ(outer(e_vec(2, 2), SpinVector::basis(2, bit(1))), SpinVector::basis(2, bit(1) | bit(2), -1));
  // Cross-check against the Clifford product e_2·e_1 f.
  const auto via_clifford = clifford_act(CliffordElement::generator(2, e_sym(2)), SpinVector::basis(2, bit(1)));
  EXPECT_EQ(via_clifford, SpinVector::basis(2, bit(1) | bit(2), -1));
  EXPECT_THROW(outer(f_vec(2, 1), SpinVector::unit(2)), std::invalid_argument);
}

TEST(Inner, ContractsWithPositionSign) {
  EXPECT_EQ(inner(f_vec(2, 1), SpinVector::basis(2, bit(1))), SpinVector::unit(2));
  EXPECT_EQ(inner(f_vec(2, 2), SpinVector::basis(2, bit(1) | bit(2))), SpinVector::basis(2, bit(1), -1));
  EXPECT_TRUE(inner(f_vec(3, 3), SpinVector::basis(3, bit(1) | bit(2))).is_zero());
  EXPECT_THROW(inner(e_vec(2, 1), SpinVector::unit(2)), std::invalid_argument);
}

TEST(VectorAction, MatchesCliffordLeftMultiplication) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const VectorInV v = testing::random_vector(n, rng);
    const SpinVector x = testing::random_spin(n, Parity::Mixed, rng, 60);
    ASSERT_EQ(vector_action(v, x), clifford_act(CliffordElement::from_vector(v), x));
  }
}

TEST(RhoSo, DiagonalFormsScaleTopWedgeByHalf) {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      EXPECT_EQ(rho_so(SoElement::ef(n, i, i), SpinVector::omega0(n)), Rational(1, 2) * SpinVector::omega0(n));
}

TEST(RhoSo, ChevalleyWeightsOfHighestWeightVectors) {
  for (int n = 2; n <= 5; ++n) {
    const SpinVector w0 = SpinVector::omega0(n), w1 = SpinVector::omega1(n);
    for (int i = 1; i < n; ++i) EXPECT_TRUE(rho_so(chevalley_h(n, i), w0).is_zero());
    EXPECT_EQ(rho_so(chevalley_h(n, n), w0), w0);
    for (int i = 1; i <= n; ++i) {
      if (i == n - 1) EXPECT_EQ(rho_so(chevalley_h(n, i), w1), w1);
      else EXPECT_TRUE(rho_so(chevalley_h(n, i), w1).is_zero()) << "n=" << n << " i=" << i;
    }
  }
}

TEST(RhoSo, PositiveRootVectorsKillTopWedge) {
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i < j) EXPECT_TRUE(rho_so(SoElement::ee(n, i, j), SpinVector::omega0(n)).is_zero());
        if (i != j) EXPECT_TRUE(rho_so(SoElement::ef(n, i, j), SpinVector::omega0(n)).is_zero());
      }
}

TEST(RhoSo, IsotropicPairOnTopWedgeHasFactorTwo) {
  const auto y = rho_so(SoElement::ff(2, 1, 2), SpinVector::omega0(2));
  EXPECT_EQ(y, Rational(-2) * SpinVector::unit(2));
  // The same scalar from ½f_1f_2 · e_1e_2f in the Clifford algebra.
  EXPECT_EQ(clifford_act(so_to_clifford(SoElement::ff(2, 1, 2)), SpinVector::omega0(2)), y);
}

TEST(RhoSo, AgreesWithCliffordModelAndPreservesParity) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 4; ++n)
    for (const auto& x : basis_two_forms(n)) {
      const SpinVector w = testing::random_spin(n, n % 2 ? Parity::Odd : Parity::Even, rng);
      const SpinVector y = rho_so(x, w);
      ASSERT_EQ(y, clifford_act(so_to_clifford(x), w)) << x.to_string();
      if (!y.is_zero()) ASSERT_EQ(y.parity(), w.parity());
    }
}

TEST(RhoSo, RespectsBrackets) {
  for (int n = 1; n <= 4; ++n) {
    const auto forms = basis_two_forms(n);
    std::vector<Matrix> mats;
    for (const auto& x : forms) mats.push_back(rho_matrix(x));
    for (std::size_t a = 0; a < forms.size(); ++a)
      for (std::size_t b = 0; b < forms.size(); ++b) {
        const Matrix lhs = rho_matrix(bracket(forms[a], forms[b]));
        ASSERT_EQ(lhs, mats[a] * mats[b] - mats[b] * mats[a]) << forms[a].to_string() << " " << forms[b].to_string();
      }
  }
}

TEST(LeftIdeal, RoundTrip) {
  EXPECT_EQ(to_left_ideal(SpinVector::omega0(3)), CliffordElement::monomial(3, {7, 7}));
  EXPECT_EQ(to_left_ideal(SpinVector::unit(3)), CliffordElement::monomial(3, {0, 7}));
  std::mt19937_64 rng(1);
  const SpinVector x = testing::random_spin(4, Parity::Mixed, rng);
  EXPECT_EQ(from_left_ideal(to_left_ideal(x)), x);
  EXPECT_THROW(from_left_ideal(CliffordElement::scalar(2, 1)), std::domain_error);
}

TEST(Exponential, ZeroParameterIsIdentity) {
  const auto g = exp_nilpotent(SoElement::ee(3, 1, 2), 0);
  EXPECT_EQ(g.op(), Matrix::identity(8));
}

TEST(Exponential, InverseParameterCancels) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& root : root_vectors(n)) {
      const auto g = exp_nilpotent(root.to_so(n), 3);
      const auto h = exp_nilpotent(root.to_so(n), -3);
      ASSERT_EQ(g.op() * h.op(), Matrix::identity(std::size_t{1} << n));
      ASSERT_EQ(determinant(g.op()), 1);
    }
}

TEST(Exponential, IsotropicPairOnTopWedge) {
  const Rational t(5, 3);
  const auto g = exp_nilpotent(SoElement::ff(2, 1, 2), t);
  EXPECT_EQ(g.apply(SpinVector::omega0(2)), SpinVector::omega0(2) - (2 * t) * SpinVector::unit(2));
}

TEST(Exponential, RejectsNonNilpotentForms) {
  EXPECT_THROW(exp_nilpotent(SoElement::ef(2, 1, 1), 1), std::invalid_argument);
  EXPECT_THROW(exp_nilpotent(SoElement::ee(2, 1, 2) + SoElement::ff(2, 1, 2), 1), std::invalid_argument);
}

TEST(GroupElement, SoImageIntertwinesVectorAction) {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 4; ++n) {
    const auto g = random_group_element(n, 100 + static_cast<std::uint64_t>(n), 8);
    const Matrix s = g.so_image();
    ASSERT_TRUE(is_isometry(s, n));
    const SpinVector x = testing::random_spin(n, Parity::Mixed, rng);
    const VectorInV v = testing::random_vector(n, rng);
    // g(v·x) = (g v)·(g x)
    ASSERT_EQ(g.apply(vector_action(v, x)), vector_action(apply_matrix(s, v), g.apply(x)));
  }
}

TEST(GroupElement, InverseAndDeterminism) {
  const auto g = random_group_element(4, 42, 12);
  const auto h = random_group_element(4, 42, 12);
  EXPECT_EQ(g.to_string(), h.to_string());
  EXPECT_EQ(g.op() * g.inverse().op(), Matrix::identity(16));
  EXPECT_THROW(random_group_element(3, 1, 0), std::invalid_argument);
  const auto single = GroupElement(2, {{RootVector{{TwoFormKind::EE, 1, 2}}, Rational(1)}});
  EXPECT_EQ(single.op(), exp_nilpotent(SoElement::ee(2, 1, 2), 1).op());
}

TEST(GroupElement, PreservesParityAndCone) {
  for (int n = 2; n <= 5; ++n) {
    const auto g = random_group_element(n, 7, orbit_word_length(n));
    const SpinVector y = g.apply(SpinVector::omega0(n));
    EXPECT_NE(y.parity(), Parity::Mixed);
    EXPECT_EQ(is_pure(y).verdict, PurityVerdict::Pure);
  }
}

TEST(Twist, DiagonalFormShiftsByHalfTrace) {
  EXPECT_TRUE(gl_twist_residual(SoElement::ef(3, 1, 1)).is_zero());
  EXPECT_EQ(rho_so(SoElement::ef(3, 1, 1), SpinVector::unit(3)), Rational(-1, 2) * SpinVector::unit(3));
}

TEST(Twist, OffDiagonalFormsActIdentically) {
  const SoElement a = SoElement::ef(3, 1, 2);
  EXPECT_TRUE(gl_twist_residual(a).is_zero());
  for (Mask m = 0; m < 8; ++m)
    EXPECT_EQ(rho_so(a, SpinVector::basis(3, m)), rho_tilde(a, SpinVector::basis(3, m)));
}

TEST(Twist, RandomGlElementsSatisfyTwist) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      SoElement a(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a += SoElement::ef(n, i, j, testing::small_rational(rng));
      ASSERT_TRUE(gl_twist_residual(a).is_zero());
    }
  EXPECT_THROW(gl_twist_residual(SoElement::ee(2, 1, 2)), std::invalid_argument);
}

TEST(Serialization, SpinVectorText) {
  SpinVector x(3);
  x.add_term(bit(1) | bit(3), Rational(1, 2));
  x.add_term(0, -2);
  EXPECT_EQ(x.to_string(), "-2*1 + 1/2*e1e3");
  EXPECT_EQ(RootVector::parse("e1^f2").to_string(), "e1^f2");
  EXPECT_THROW(RootVector::parse("e2^e1"), std::invalid_argument);
}

}  // namespace
}  // namespace halfspin
