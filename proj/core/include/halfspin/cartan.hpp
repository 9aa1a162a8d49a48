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
#include <string>

#include "halfspin/clifford.hpp"
#include "halfspin/grassmann.hpp"
#include "halfspin/linalg.hpp"
#include "halfspin/spin_rep.hpp"

namespace halfspin {

// Signs relating ν̂₂∘π to c∘ν̂₂ and ν̂₂∘τ to m∘ν̂₂ on each parity. For both squares the
// standard context uses (−1)^{n−1} on even vectors and (−1)^n on odd ones, n the larger level.
// The f_n in f = f̄·f_n has to move past n−1 factors to reach the front, which is where the
// multiplication square picks up its (−1)^{n−1}.
struct CartanContext {
  int n = 0;
  int contraction_even = 1;
  int contraction_odd = -1;
  int multiplication_even = 1;
  int multiplication_odd = -1;

  static CartanContext standard(int n);
  int contraction_sign(Parity p) const;
  int multiplication_sign(Parity p) const;
};

// Degree-n component of (a f a^*)•1 where x = af with a ∈ Cl(E).
ExteriorVector nu2(const SpinVector& x);

// Reindexing of ∧V between levels: symbols keep their names.
ExteriorVector lower_exterior(const ExteriorVector& w);  // must not involve e_n, f_n
ExteriorVector raise_exterior(const ExteriorVector& w, int m);

// c_{e_n}: ι(e_n) followed by reduction mod e_n. Level n -> n-1.
ExteriorVector contract_last(const ExteriorVector& w);
// m_{f_n}: f_n ∧ ω. Level n-1 -> n.
ExteriorVector mult_last(const ExteriorVector& w);

struct ExteriorContraction {
  ExteriorVector result;  // in the frame's ∧V_{n-1}
  HyperbolicFrame frame;
};
// c_e for any nonzero isotropic e, read through a frame whose last pair is (e, h).
ExteriorContraction contract_ce(const ExteriorVector& w, const VectorInV& e);
ExteriorVector contract_ce(const ExteriorVector& w, const HyperbolicFrame& frame);
// h∧ω with ω given in the frame's ∧V_{n-1} and h = frame.f(n).
ExteriorVector mult_mh(const ExteriorVector& w, const HyperbolicFrame& frame);

ExteriorVector diagram_pi_residual(const SpinVector& x, const CartanContext& ctx);
ExteriorVector diagram_pi_residual(const SpinVector& x);
ExteriorVector diagram_tau_residual(const SpinVector& x, const CartanContext& ctx);
ExteriorVector diagram_tau_residual(const SpinVector& x);

// λ with a = λ·b, if b ≠ 0 and such λ exists.
std::optional<Rational> ratio(const ExteriorVector& a, const ExteriorVector& b);
std::optional<Rational> ratio(const SpinVector& a, const SpinVector& b);

struct InjectivityVerdict {
  bool images_nonzero = false;
  bool images_proportional = false;
  bool inputs_proportional = false;
  // Proportional images from non-proportional inputs.
  bool counterexample() const { return images_proportional && !inputs_proportional; }
};
InjectivityVerdict injectivity_witness(const SpinVector& x, const SpinVector& y);

// Rows span {v ∈ V_n : v∧ω = 0}; a nonzero ω of degree k is a pure wedge iff there are k rows.
Matrix wedge_annihilator(const ExteriorVector& w);
bool is_pure_wedge(const ExteriorVector& w);

// Operator S on ∧E_n with S(v·x) = (gv)·S(x) for an isometry g, normalized by S(1) = ω_{gF}.
Matrix spin_intertwiner(const Matrix& g, int n);

// Frame of V_n whose last rows(u) e-vectors span the isotropic row space of u.
HyperbolicFrame frame_with_last_span(int n, const Matrix& u);

struct LowerFactorization {
  int q = 0, n = 0, n0 = 0;
  bool generic = false;
  std::string genericity_report;  // why g was rejected
  Matrix g;                        // SO(V_q) image of the sampled element
  Matrix g_prime;                  // SO(V_n)
  Matrix g_double_prime;           // isometry of V_{n0}
  Rational det_g_double_prime;
  bool exterior_identity = false;
  Rational exterior_scalar;
  bool spin_identity = false;  // on the even half-spin basis
  Rational spin_scalar;
};

// Builds g', g'' for π_{q,n0}∘g∘τ_{n,q} = λ·g''∘π_{n,n0}∘g' and checks the identity exactly,
// on ∧^n V_n (all basis monomials) and on the even spin basis of level n.
LowerFactorization lower_factorization(int q, int n, int n0, const GroupElement& g);

}  // namespace halfspin
