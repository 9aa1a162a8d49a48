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
#include "halfspin/ideal.hpp"
#include "halfspin/transfer.hpp"
#include "support/oracles.hpp"

namespace halfspin {
namespace {

// L·x on mask-indexed coordinates.
SpinVector apply_dense(const Matrix& L, const SpinVector& x, int target_level) {
  const auto out = L.apply(x.dense());
  return SpinVector::from_dense(target_level, out);
}

SpinVector random_even(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-3, 3);
  SpinVector x(n);
  for (Mask m : parity_basis(n, Parity::Even)) x.add_term(m, coord(rng));
  return x;
}

TEST(VanishingForms, LevelFourConeHasOneQuadric) {
  const auto found = discover_vanishing_forms(4, Parity::Even, 2, 17);
  ASSERT_EQ(found.forms.size(), 1u);
  EXPECT_EQ(found.points_per_seed, 3u * 36u);
  // The discovery is seed independent.
  EXPECT_TRUE(same_row_space(coefficient_matrix(found.forms, all_monomials({found.forms[0], i4_quadric()})),
                             coefficient_matrix({i4_quadric()}, all_monomials({found.forms[0], i4_quadric()}))));
}

TEST(VanishingForms, GenericPointsAdmitNoQuadric) {
  std::mt19937_64 rng(3);
  std::vector<SpinVector> pts;
  for (int i = 0; i < 3 * 36; ++i) pts.push_back(random_even(4, rng));
  EXPECT_TRUE(vanishing_forms(pts, 2).empty());
}

TEST(VanishingForms, RefusesTooFewPoints) {
  const auto pts = cone_samples(4, Parity::Even, 50, 1);
  try {
    vanishing_forms(pts, 2);
    FAIL() << "expected InsufficientPointsError";
  } catch (const InsufficientPointsError& e) {
    EXPECT_EQ(e.points, 50u);
    EXPECT_EQ(e.required, 108u);
  }
}

TEST(VanishingForms, RejectsMixedParity) {
  auto pts = cone_samples(4, Parity::Even, 108, 1);
  pts.push_back(SpinVector::basis(4, bit(1)));
  EXPECT_THROW(vanishing_forms(pts, 2), std::invalid_argument);
}

TEST(I4Quadric, ProportionalToBetaNorm) {
  const Polynomial& q = i4_quadric();
  EXPECT_EQ(q.homogeneous_degree(), 2);
  std::mt19937_64 rng(20);
  std::optional<Rational> ratio;
  int checked = 0;
  for (int t = 0; t < 40 && checked < 20; ++t) {
    const SpinVector x = random_even(4, rng);
    const Rational b = beta(x, x);
    if (sgn(b) == 0) {
      EXPECT_EQ(eval_poly(q, x), 0);
      continue;
    }
    const Rational r = eval_poly(q, x) / b;
    if (ratio) EXPECT_EQ(r, *ratio);
    ratio = r;
    ++checked;
  }
  EXPECT_EQ(checked, 20);
  ASSERT_TRUE(ratio.has_value());
  EXPECT_NE(*ratio, 0);
  // Same polynomial through the Gram matrix.
  EXPECT_EQ(*ratio * beta_norm_quadric(4, Parity::Even), q);
}

TEST(I4Quadric, VanishesExactlyOnPureVectors) {
  EXPECT_EQ(eval_poly(i4_quadric(), SpinVector::omega0(4)), 0);
  // 1 on e_∅ and on e_{1234}: not pure.
  SpinVector x(4);
  x.add_term(0, 1);
  x.add_term(full_mask(4), 1);
  EXPECT_EQ(is_pure(x).verdict, PurityVerdict::NotPure);
  EXPECT_NE(eval_poly(i4_quadric(), x), 0);
  for (const auto& p : cone_samples(4, Parity::Even, 30, 9)) EXPECT_EQ(eval_poly(i4_quadric(), p), 0);
}

TEST(Pullback, IdentityAndFunctoriality) {
  const Polynomial& q = i4_quadric();
  EXPECT_EQ(pullback(q, Matrix::identity(16)), q);

  const GroupElement g = random_group_element(5, 3, 8);
  const GroupElement h = random_group_element(5, 4, 8);
  const Matrix L = pi_tower_matrix(5, 4) * g.op();
  const Matrix M = h.op();
  EXPECT_EQ(pullback(pullback(q, L), M), pullback(q, L * M));
  EXPECT_THROW(pullback(q, Matrix::identity(8)), std::invalid_argument);
}

TEST(Pullback, ContractionPullbackAvoidsTheLastIndex) {
  const Polynomial p = pullback(i4_quadric(), pi_tower_matrix(5, 4));
  EXPECT_EQ(p.level(), 5);
  for (Mask v : p.variables()) EXPECT_FALSE(contains(v, 5));
  EXPECT_EQ(p.terms().size(), i4_quadric().terms().size());
}

TEST(Pullback, EvaluationIdentity) {
  std::mt19937_64 rng(41);
  for (int n = 5; n <= 6; ++n) {
    const GroupElement g = random_group_element(n, 100 + n, orbit_word_length(n));
    const Matrix L = pi_tower_matrix(n, 4) * g.op();
    const Polynomial p = pullback(i4_quadric(), L);
    EXPECT_EQ(p.homogeneous_degree(), 2);
    for (int t = 0; t < 10; ++t) {
      const SpinVector x = testing::random_spin(n, Parity::Even, rng);
      const SpinVector y = pi_tower(g.apply(x), 4);
      EXPECT_EQ(apply_dense(L, x, 4), y);
      EXPECT_EQ(eval_poly(p, x), eval_poly(i4_quadric(), y));
    }
  }
}

TEST(OrbitFamily, FirstMemberIsThePlainContraction) {
  const auto fam = orbit_pullback_family(5, 1, 1);
  ASSERT_EQ(fam.members.size(), 1u);
  EXPECT_TRUE(fam.members[0].g.is_identity_word());
  EXPECT_EQ(fam.members[0].quadric, pullback(i4_quadric(), pi_tower_matrix(5, 4)));
  EXPECT_THROW(orbit_pullback_family(3, 1, 1), std::invalid_argument);
}

TEST(OrbitFamily, DeterministicInSeed) {
  const auto a = orbit_pullback_family(5, 8, 6);
  const auto b = orbit_pullback_family(5, 8, 6);
  const auto c = orbit_pullback_family(5, 9, 6);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(a.members[i].quadric, b.members[i].quadric);
  EXPECT_NE(a.members[5].quadric, c.members[5].quadric);
}

TEST(OrbitFamily, MembersVanishOnTheCone) {
  for (int n = 5; n <= 6; ++n) {
    const auto fam = orbit_pullback_family(n, 2, 12);
    for (const auto& x : cone_samples(n, Parity::Even, 15, 77))
      for (const auto& m : fam.members) ASSERT_EQ(eval_poly(m.quadric, x), 0);
  }
}

TEST(OrbitFamily, SpanStabilizesAtTheVanishingQuadrics) {
  const auto fam = orbit_pullback_family(5, 5, 64);
  std::vector<std::size_t> ranks;
  for (std::size_t count : {4u, 16u, 32u, 64u}) {
    PullbackFamily part{5, 5, {fam.members.begin(), fam.members.begin() + static_cast<std::ptrdiff_t>(count)}};
    ranks.push_back(family_rank(part));
  }
  EXPECT_TRUE(std::is_sorted(ranks.begin(), ranks.end()));
  EXPECT_EQ(ranks[2], ranks[3]);

  const auto found = discover_vanishing_forms(5, Parity::Even, 2, 23);
  std::vector<Polynomial> qs;
  for (const auto& m : fam.members) qs.push_back(m.quadric);
  std::vector<Polynomial> all = qs;
  all.insert(all.end(), found.forms.begin(), found.forms.end());
  const auto monos = all_monomials(all);
  EXPECT_EQ(ranks.back(), found.forms.size());
  EXPECT_TRUE(same_row_space(coefficient_matrix(qs, monos), coefficient_matrix(found.forms, monos)));
}

TEST(CertifyMembership, AgreesWithAnnihilatorOracle) {
  std::mt19937_64 rng(66);
  const auto fam = orbit_pullback_family(5, 13, 64);
  EXPECT_TRUE(certify_membership(SpinVector::omega1(5), fam).passes);
  for (const auto& x : cone_samples(5, Parity::Even, 20, 400)) {
    ASSERT_EQ(is_pure(x).verdict, PurityVerdict::Pure);
    EXPECT_TRUE(certify_membership(x, fam).passes);
  }
  int off = 0;
  while (off < 20) {
    const SpinVector x = random_even(5, rng);
    if (is_pure(x).verdict != PurityVerdict::NotPure) continue;
    ++off;
    const auto v = certify_membership(x, fam);
    ASSERT_FALSE(v.passes);
    ASSERT_TRUE(v.witness_member.has_value());
    EXPECT_NE(v.witness_value, 0);
    EXPECT_EQ(v.witness_word, fam.members[*v.witness_member].g.to_string());
  }
  EXPECT_THROW(certify_membership(SpinVector::unit(5), PullbackFamily{5, 0, {}}), std::invalid_argument);
}

TEST(IdealMembership, FindsCofactorsOrReportsFailure) {
  const int n = 4;
  const Polynomial a = Polynomial::variable(n, 0);
  const Polynomial b = Polynomial::variable(n, bit(1) | bit(2));
  const Polynomial target = a * a * b - 3 * (b * b);
  const auto cert = ideal_membership(target, {a * b, b}, {{{0}}, {{bit(1) | bit(2)}}});
  ASSERT_TRUE(cert.member);
  EXPECT_EQ(cert.cofactors[0] * (a * b) + cert.cofactors[1] * b, target);
  EXPECT_FALSE(ideal_membership(a, {b}, {{{0}}}).member);
}

}  // namespace
}  // namespace halfspin
