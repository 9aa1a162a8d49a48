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

#include "halfspin/cartan.hpp"
#include "halfspin/transfer.hpp"
#include "support/oracles.hpp"

namespace halfspin {
namespace {

Mask f_bits(int n, Mask s) { return s << n; }

TEST(Nu2, AdaptedOmegaScalesPluecker) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& h : coordinate_subspaces(n)) {
      const int k = adapted_basis(h).k;
      ASSERT_EQ(nu2(omega_of(h)), power_of_two(n - k) * pluecker(h)) << h.canonical().to_string();
    }
  }
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const IsotropicSubspace h = random_maximal_isotropic(n, 40 + seed);
      const int k = adapted_basis(h).k;
      ASSERT_EQ(nu2(omega_of(h)), power_of_two(n - k) * pluecker(h));
    }
}

TEST(Nu2, UnitMapsToFullFWedge) {
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(nu2(SpinVector::unit(n)), ExteriorVector::basis(n, f_bits(n, full_mask(n))));
  EXPECT_EQ(nu2(SpinVector::omega0(3)), Rational(8) * ExteriorVector::basis(3, 0b111));
}

TEST(Nu2, IsHomogeneousQuadratic) {
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 4; ++n) {
    const SpinVector x = testing::random_spin(n, Parity::Even, rng);
    const Rational t = testing::small_rational(rng) + Rational(7, 3);
    EXPECT_EQ(nu2(t * x), t * t * nu2(x));
    EXPECT_EQ(nu2(x).degree().value_or(n), n);
  }
}

TEST(Nu2, EquivariantUnderGroupElements) {
  for (int n = 2; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const GroupElement g = random_group_element(n, seed, 6);
      std::mt19937_64 rng(seed);
      const SpinVector x = testing::random_spin(n, Parity::Even, rng);
      ASSERT_EQ(nu2(g.apply(x)), exterior_transform(g.so_image(), nu2(x)));
    }
}

TEST(Nu2, ConePointsMapToPureWedges) {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const ExteriorVector w = nu2(sample_cone_point(n, seed, Parity::Even));
      ASSERT_FALSE(w.is_zero());
      ASSERT_TRUE(is_pure_wedge(w));
    }
  // ω_∅ + ω_full at level 4 is off the cone and its image is not a pure wedge.
  EXPECT_FALSE(is_pure_wedge(nu2(SpinVector::unit(4) + SpinVector::omega0(4))));
}

TEST(ContractLast, Examples) {
  const int n = 3;
  const Mask e12 = bit(1) | bit(2);
  EXPECT_EQ(contract_last(ExteriorVector::basis(n, e12 | bit(n + 3))), ExteriorVector::basis(2, e12));
  EXPECT_TRUE(contract_last(ExteriorVector::basis(n, 0b111)).is_zero());
  // Only f_n pairs with e_n; the sign follows its position.
  EXPECT_EQ(contract_last(ExteriorVector::basis(n, bit(n + 3) | bit(n + 1) | bit(1))),
            ExteriorVector::basis(2, bit(1) | bit(2 + 1)));
}

TEST(ContractLast, InvertsMultiplication) {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 5; ++n) {
    ExteriorVector w(n - 1);
    for (Mask m = 0; m < (Mask{1} << (2 * (n - 1))); ++m)
      if (popcount(m) == n - 1 && rng() % 3 == 0) w.add_term(m, testing::small_rational(rng));
    EXPECT_EQ(contract_last(mult_last(w)), w);
  }
}

TEST(ContractCe, GeneralFramesInvertMultiplication) {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      const IsotropicSubspace h = random_maximal_isotropic(n, 70 + trial);
      const VectorInV e = h.vectors().front();
      const ExteriorContraction probe = contract_ce(ExteriorVector::unit(n), e);
      ExteriorVector w(n - 1);
      for (Mask m = 0; m < (Mask{1} << (2 * (n - 1))); ++m)
        if (popcount(m) == n - 1 && rng() % 2 == 0) w.add_term(m, testing::small_rational(rng));
      const ExteriorVector up = mult_mh(w, probe.frame);
      EXPECT_EQ(contract_ce(up, probe.frame), w);
      EXPECT_TRUE(outer_v(probe.frame.f(n), up).is_zero());
    }
  EXPECT_THROW(contract_ce(ExteriorVector::unit(2), VectorInV::basis(2, e_sym(1)) + VectorInV::basis(2, f_sym(1))),
               std::invalid_argument);
}

TEST(ContractCe, ContractionOfAPlueckerVectorIsThePlueckerVectorOfTheQuotient) {
  for (int n = 2; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const IsotropicSubspace h = random_maximal_isotropic(n, 400 + seed);
      const SpinVector probe = sample_cone_point(n, 900 + seed, Parity::Even);
      const Matrix ann = annihilator(probe);
      const VectorInV e(n, ann.row(0));
      const ExteriorContraction c = contract_ce(pluecker(h), e);
      if (h.contains(e)) {
        EXPECT_TRUE(c.result.is_zero());
        continue;
      }
      ASSERT_TRUE(is_pure_wedge(c.result));
      for (const auto& v : h.vectors()) {
        if (!is_zero(bilinear(v, e))) continue;
        ASSERT_TRUE(outer_v(reduce_to_quotient(c.frame, v), c.result).is_zero());
      }
    }
}

TEST(DiagramPi, VanishesOnBasesWithStandardSigns) {
  for (int n = 1; n <= 3; ++n)
    for (Parity p : {Parity::Even, Parity::Odd})
      for (Mask m : parity_basis(n, p)) ASSERT_TRUE(diagram_pi_residual(SpinVector::basis(n, m)).is_zero());
}

TEST(DiagramPi, VanishesOnDenseVectors) {
  std::mt19937_64 rng(21);
  for (int n = 2; n <= 5; ++n)
    for (Parity p : {Parity::Even, Parity::Odd})
      for (int s = 0; s < 6; ++s)
        ASSERT_TRUE(diagram_pi_residual(testing::random_spin(n, p, rng)).is_zero()) << n;
}

TEST(DiagramPi, FlippedSignIsDetected) {
  std::mt19937_64 rng(22);
  const SpinVector x = testing::random_spin(4, Parity::Even, rng);
  CartanContext ctx = CartanContext::standard(4);
  ctx.contraction_even = -ctx.contraction_even;
  EXPECT_FALSE(diagram_pi_residual(x, ctx).is_zero());
  EXPECT_THROW(diagram_pi_residual(SpinVector::unit(3) + SpinVector::omega0(3)), std::invalid_argument);
}

TEST(DiagramTau, VanishesOnBasesAndDenseVectors) {
  for (int n = 1; n <= 3; ++n)
    for (Parity p : {Parity::Even, Parity::Odd})
      for (Mask m : parity_basis(n, p)) ASSERT_TRUE(diagram_tau_residual(SpinVector::basis(n, m)).is_zero());
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 4; ++n)
    for (Parity p : {Parity::Even, Parity::Odd})
      for (int s = 0; s < 6; ++s) ASSERT_TRUE(diagram_tau_residual(testing::random_spin(n, p, rng)).is_zero());
}

TEST(DiagramTau, UnsignedReadingFailsAtEvenLevels) {
  CartanContext plain = CartanContext::standard(2);
  plain.multiplication_even = 1;
  plain.multiplication_odd = -1;
  EXPECT_FALSE(diagram_tau_residual(SpinVector::unit(1), plain).is_zero());
  EXPECT_EQ(nu2(tau_last(SpinVector::unit(1))), Rational(-1) * mult_last(nu2(SpinVector::unit(1))));
}

TEST(Injectivity, ImagesSeparateLines) {
  EXPECT_TRUE(injectivity_witness(SpinVector::omega0(4), SpinVector::omega0(4)).images_nonzero);
  for (int n = 3; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const SpinVector x = sample_cone_point(n, seed, Parity::Even);
      const SpinVector y = sample_cone_point(n, seed + 100, Parity::Even);
      const InjectivityVerdict v = injectivity_witness(x, y);
      ASSERT_TRUE(v.images_nonzero);
      ASSERT_FALSE(v.counterexample());
      ASSERT_EQ(v.inputs_proportional, same_row_space(annihilator(x), annihilator(y)));
      EXPECT_TRUE(injectivity_witness(x, Rational(-3) * x).images_proportional);
    }
  EXPECT_THROW(injectivity_witness(SpinVector(3), SpinVector::unit(3)), std::invalid_argument);
}

TEST(SpinIntertwiner, MatchesGroupOperatorsUpToScalar) {
  for (int n = 2; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const GroupElement g = random_group_element(n, seed, 8);
      const Matrix s = spin_intertwiner(g.so_image(), n);
      const Matrix& op = g.op();
      Rational lambda = 0;
      for (std::size_t r = 0; r < op.rows() && is_zero(lambda); ++r)
        for (std::size_t c = 0; c < op.cols(); ++c)
          if (!is_zero(op(r, c))) {
            lambda = s(r, c) / op(r, c);
            break;
          }
      ASSERT_FALSE(is_zero(lambda));
      ASSERT_EQ(s, lambda * op);
    }
}

TEST(FrameWithLastSpan, LastVectorsSpanTheInput) {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const IsotropicSubspace h = random_maximal_isotropic(n, 600 + seed);
      for (std::size_t m = 0; m <= h.dim(); ++m) {
        std::vector<std::size_t> rows(m), cols(static_cast<std::size_t>(2 * n));
        for (std::size_t i = 0; i < m; ++i) rows[i] = i;
        for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
        const Matrix u = h.rows().submatrix(rows, cols);
        const HyperbolicFrame fr = frame_with_last_span(n, u);
        ASSERT_TRUE(is_isometry(fr.to_standard, n));
        Matrix last(0, static_cast<std::size_t>(2 * n));
        for (int i = n - static_cast<int>(m) + 1; i <= n; ++i) last.append_row(fr.e(i).coords());
        ASSERT_TRUE(same_row_space(last, u));
      }
    }
}

TEST(LowerFactorization, IdentityWordIsTrivial) {
  const LowerFactorization r = lower_factorization(4, 4, 4, GroupElement(4));
  ASSERT_TRUE(r.generic);
  EXPECT_EQ(r.g_prime, Matrix::identity(8));
  EXPECT_EQ(r.g_double_prime, Matrix::identity(8));
  EXPECT_TRUE(r.exterior_identity);
  EXPECT_EQ(r.exterior_scalar, 1);
  EXPECT_TRUE(r.spin_identity);
  EXPECT_EQ(r.spin_scalar, 1);
  EXPECT_THROW(lower_factorization(4, 4, 3, GroupElement(4)), std::invalid_argument);
}

TEST(LowerFactorization, RandomElementsFactorExactly) {
  const int configs[][3] = {{5, 5, 4}, {6, 5, 4}, {6, 6, 4}};
  for (const auto& cfg : configs) {
    int verified = 0;
    for (std::uint64_t seed = 0; verified < 2 && seed < 20; ++seed) {
      const GroupElement g = random_group_element(cfg[0], 5000 + seed, orbit_word_length(cfg[0]));
      const LowerFactorization r = lower_factorization(cfg[0], cfg[1], cfg[2], g);
      if (!r.generic) continue;
      ASSERT_TRUE(r.exterior_identity) << cfg[0] << cfg[1] << cfg[2] << " seed " << seed;
      ASSERT_TRUE(r.spin_identity) << cfg[0] << cfg[1] << cfg[2] << " seed " << seed;
      EXPECT_TRUE(is_isometry(r.g_prime, cfg[1]));
      EXPECT_EQ(determinant(r.g_prime), 1);
      ++verified;
    }
    EXPECT_EQ(verified, 2);
  }
}

TEST(LowerFactorization, DegenerateElementIsRejected) {
  // A Weyl element moving e_6 onto the e_4 line puts all of E'' inside V_5 ⊕ <f_6>.
  const auto x = RootVector::parse("e4^f6"), y = RootVector::parse("e6^f4");
  const GroupElement w(6, {{x, 1}, {y, -1}, {x, 1}});
  const LowerFactorization r = lower_factorization(6, 5, 4, w);
  EXPECT_FALSE(r.generic);
  EXPECT_FALSE(r.genericity_report.empty());
}

}  // namespace
}  // namespace halfspin
