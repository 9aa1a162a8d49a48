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

#include <string>

#include "halfspin/grassmann.hpp"
#include "halfspin/linalg.hpp"
#include "halfspin/spin_rep.hpp"

namespace halfspin {

enum class LevelMapKind { Contraction, Multiplication, DualContraction };

struct LevelMap {
  LevelMapKind kind;
  int source;
  int target;
  bool flips_parity;
};

LevelMap describe(LevelMapKind kind, int source_level);

// Reduction mod e_n: drops every term containing n. Level n -> n-1.
SpinVector pi_last(const SpinVector& x);
// Inclusion ∧E_{n-1} -> ∧E_n.
SpinVector tau_last(const SpinVector& x);
// ω ↦ ω∧e_n, level n-1 -> n.
SpinVector psi_last(const SpinVector& x);

// π_last applied until the level is m, and τ_last until the level is m.
SpinVector pi_tower(const SpinVector& x, int m);
SpinVector tau_tower(const SpinVector& x, int m);

struct GeneralContraction {
  SpinVector result;      // coordinates in the frame's ∧E_{n-1}
  HyperbolicFrame frame;  // last pair (e, h), f-vectors spanning F
};

// Image of ½((−1)^{n−1}ex + xe) on the even part and ½((−1)^n ex + xe) on the odd part,
// read in Cl(V_e) through the frame. Requires q(e) = 0 and e ∉ F.
GeneralContraction pi_general(const SpinVector& x, const VectorInV& e);

// Image in V_e (level n-1 frame coordinates) of v ∈ e^⊥.
VectorInV reduce_to_quotient(const HyperbolicFrame& frame, const VectorInV& v);

// Coefficient of f_1⋯f_n in (xf)^*(yf).
Rational beta(const SpinVector& x, const SpinVector& y);
// Gram matrix of β on the 2^n basis, indexed by mask (n ≤ 6).
Matrix beta_gram(int n);

// β_{n-1}(a, π(x)) − ((−1)^{n−1}/2)·β_n(ψ(a), x): the pairing of π^* against ψ with the
// functional in the first slot. With the slots swapped the scalar is +½ for every n.
Rational psidual_residual(const SpinVector& a, const SpinVector& x);

}  // namespace halfspin
