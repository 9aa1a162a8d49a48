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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "halfspin/linalg.hpp"
#include "halfspin/polynomial.hpp"
#include "halfspin/spin_rep.hpp"

namespace halfspin {

// Independent stream `stream` of a seed (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Points g_i·ω for count seeded group elements.
std::vector<SpinVector> cone_samples(int n, Parity parity, std::size_t count, std::uint64_t seed);

class InsufficientPointsError : public std::invalid_argument {
 public:
  InsufficientPointsError(std::size_t have, std::size_t need)
      : std::invalid_argument("vanishing_forms needs " + std::to_string(need) + " points, got " +
                              std::to_string(have)),
        points(have), required(need) {}
  std::size_t points;
  std::size_t required;
};

// Points per monomial demanded by vanishing_forms.
inline constexpr std::size_t kPointsPerMonomial = 3;

// Basis of the degree-d forms vanishing on every point, as the reduced echelon nullspace of
// the evaluation matrix (so the leading coefficient of each form is 1). Points share one
// level and parity; fewer than kPointsPerMonomial·#monomials points is an error.
std::vector<Polynomial> vanishing_forms(const std::vector<SpinVector>& points, int d);

struct VanishingDiscovery {
  std::vector<Polynomial> forms;
  std::uint64_t seed = 0;
  std::size_t points_per_seed = 0;
  int rounds = 0;  // doublings of the point count before two seeds agreed
};

// vanishing_forms on cone samples from two independent streams of seed, doubling the point
// count until both return the same space (at most max_rounds doublings).
VanishingDiscovery discover_vanishing_forms(int n, Parity parity, int d, std::uint64_t seed,
                                            int max_rounds = 3);

// The degree-2 generator of the ideal of the even cone at level 4.
const Polynomial& i4_quadric();

// x ↦ β(x, x) on one parity block of level n.
Polynomial beta_norm_quadric(int n, Parity parity);

// (p∘L) for a linear map L given as a 2^m × 2^n matrix on mask-indexed bases.
Polynomial pullback(const Polynomial& p, const Matrix& L);

// Matrix of π_{n,m}: the rows of masks inside {1..m}.
Matrix pi_tower_matrix(int n, int m);

struct PullbackMember {
  GroupElement g;
  Matrix linear;  // π_{n,4}∘g
  Polynomial quadric;
};

struct PullbackFamily {
  int source_level = 0;
  std::uint64_t seed = 0;
  std::vector<PullbackMember> members;
};

// Member 0 uses g = 1; member i > 0 uses a word drawn from stream i of seed.
PullbackFamily orbit_pullback_family(int n, std::uint64_t seed, std::size_t count);

// Coefficient rows of the given polynomials over the listed monomials.
Matrix coefficient_matrix(const std::vector<Polynomial>& ps, const std::vector<Monomial>& monomials);
std::vector<Monomial> all_monomials(const std::vector<Polynomial>& ps);

// Dimension of the span of the family's quadrics.
std::size_t family_rank(const PullbackFamily& family);

struct MembershipVerdict {
  bool passes = true;
  std::optional<std::size_t> witness_member;
  std::string witness_word;  // group word of the failing member
  Rational witness_value;
};

MembershipVerdict certify_membership(const SpinVector& x, const PullbackFamily& family);

// Target expressed as Σ c_i·G_i with c_i supported on the given multiplier monomials,
// found by an exact linear solve.
struct IdealCertificate {
  bool member = false;
  std::vector<Polynomial> cofactors;
};

IdealCertificate ideal_membership(const Polynomial& target, const std::vector<Polynomial>& generators,
                                  const std::vector<std::vector<Monomial>>& multipliers);

}  // namespace halfspin
