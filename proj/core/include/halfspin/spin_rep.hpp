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
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "halfspin/clifford.hpp"
#include "halfspin/linalg.hpp"
#include "halfspin/so_algebra.hpp"

namespace halfspin {

// Mixed means both parities occur; the zero vector reports Even.
enum class Parity { Even, Odd, Mixed };

std::string to_string(Parity p);

// Vector of ∧E_n, identified with Cl(V_n)f through ω ↦ ωf. Keys are subsets of {1..n}.
class SpinVector {
 public:
  using Terms = std::map<Mask, Rational>;

  explicit SpinVector(int n);
  static SpinVector unit(int n);
  static SpinVector basis(int n, Mask subset, const Rational& c = 1);
  static SpinVector omega0(int n);  // e_1∧…∧e_n
  static SpinVector omega1(int n);  // e_1∧…∧e_{n-1}
  static SpinVector from_dense(int n, const std::vector<Rational>& coords);

  int level() const { return n_; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(Mask subset) const;
  void add_term(Mask subset, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  Parity parity() const;
  SpinVector parity_part(Parity p) const;
  std::vector<Rational> dense() const;

  SpinVector& operator+=(const SpinVector& o);
  SpinVector& operator-=(const SpinVector& o);
  SpinVector& operator*=(const Rational& s);
  friend SpinVector operator+(SpinVector a, const SpinVector& b) { return a += b; }
  friend SpinVector operator-(SpinVector a, const SpinVector& b) { return a -= b; }
  friend SpinVector operator*(const Rational& s, SpinVector a) { return a *= s; }
  friend bool operator==(const SpinVector&, const SpinVector&) = default;

  // Terms by mask, e.g. "1/2*e1e3 + -2*1".
  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

std::string subset_name(Mask subset);

// Masks of the given parity at level n, ascending.
std::vector<Mask> parity_basis(int n, Parity p);

SpinVector outer(const VectorInV& v, const SpinVector& x);  // v ∈ E
SpinVector inner(const VectorInV& v, const SpinVector& x);  // v ∈ F
// Clifford action of a vector: o(v') + 2ι(v'').
SpinVector vector_action(const VectorInV& v, const SpinVector& x);
SpinVector rho_so(const SoElement& x, const SpinVector& w);
// Standard derivation action of gl(E_n) (efTerms only) on ∧E_n.
SpinVector rho_tilde(const SoElement& a, const SpinVector& w);

CliffordElement to_left_ideal(const SpinVector& x);
SpinVector from_left_ideal(const CliffordElement& a);
// Left multiplication in Cl(V_n) transported to ∧E_n.
SpinVector clifford_act(const CliffordElement& a, const SpinVector& x);

// Dense matrix of a linear map on the 2^n basis indexed by mask.
Matrix operator_matrix(int n, const std::function<SpinVector(const SpinVector&)>& op);
Matrix rho_matrix(const SoElement& x);

// ρ(A) − ρ̃(A) + ½tr(A)·Id for A ∈ gl(E_n).
Matrix gl_twist_residual(const SoElement& a);

// Nilpotent root vectors e_i∧e_j, f_i∧f_j (i<j) and e_i∧f_j (i≠j).
struct RootVector {
  TwoForm form;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
  SoElement to_so(int n) const { return SoElement::wedge(n, form.left(), form.right()); }
  std::string to_string() const { return form.to_string(); }
  static RootVector parse(const std::string& text);
};

std::vector<RootVector> root_vectors(int n);

struct Generator {
  RootVector root;
  Rational t;
};

// Product exp(t_1 ρ(X_1))⋯exp(t_k ρ(X_k)); the rightmost factor acts first.
class GroupElement {
 public:
  explicit GroupElement(int n);
  GroupElement(int n, std::vector<Generator> word);

  int level() const { return n_; }
  const std::vector<Generator>& word() const { return word_; }
  bool is_identity_word() const { return word_.empty(); }

  SpinVector apply(const SpinVector& x) const;
  GroupElement inverse() const;
  // this ∘ other.
  GroupElement compose(const GroupElement& other) const;
  // Same word read at a larger level, fixing the new hyperbolic pairs.
  GroupElement lifted(int m) const;

  // Dense operator on ∧E_n, computed once (n ≤ 6).
  const Matrix& op() const;
  // Image in SO(V_n) as a 2n×2n matrix.
  Matrix so_image() const;

  std::string to_string() const;

 private:
  struct Cache;
  int n_;
  std::vector<Generator> word_;
  std::shared_ptr<Cache> cache_;
};

// One exponential; x must be a nonzero multiple of a root vector.
GroupElement exp_nilpotent(const SoElement& x, const Rational& t);

// Deterministic word of `length` exponentials, generators uniform over root_vectors(n)
// and parameters uniform over {-2,-1,1,2}.
GroupElement random_group_element(int n, std::uint64_t seed, int length);

inline constexpr int kDenseLimit = 6;

}  // namespace halfspin
