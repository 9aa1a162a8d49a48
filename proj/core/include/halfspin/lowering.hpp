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

#include <optional>
#include <vector>

#include "halfspin/polynomial.hpp"
#include "halfspin/so_algebra.hpp"
#include "halfspin/spin_rep.hpp"

namespace halfspin {

// Image of the limit variable with complement C under x ∈ so(V_N), N = x.level(), computed
// with ρ on e_{[N]∖C} at level N. Requires C ⊆ {1..N}.
Polynomial act_on_variable(const SoElement& x, Mask complement);

// Leibniz extension of act_on_variable to limit polynomials. Throws std::out_of_range when a
// variable does not fit inside the truncation window x.level().
Polynomial derivation(const SoElement& x, const Polynomial& p);
Polynomial derivation_ff(int i, int j, const Polynomial& p, int truncation);

// c with (f_i∧f_j)·e_I = c·e_{I∖{i,j}} for i, j ∈ I (the finite action gives c = ±2).
Rational ff_scalar(int i, int j, Mask complement, int truncation);

struct LoweringStep {
  int i1 = 0;
  int i2 = 0;
  Rational scalar;  // on the pivot chain
  Polynomial result;
};

// p_ℓ = sign·e_N·q + residual where N = {n+1, n+2, …}, q = ∂p/∂e_I.
struct LoweringTrace {
  Polynomial p;
  int truncation = 0;
  Mask pivot = 0;  // complement of e_I
  int k = 0;       // |pivot|
  std::vector<LoweringStep> steps;
  Polynomial q;
  Rational sign;
  Polynomial residual;
  bool decomposition_exact = false;

  const Polynomial& last() const { return steps.empty() ? p : steps.back().result; }
};

// Smallest even n ≥ k+2 whose window holds every variable of p.
int lowering_truncation(const Polynomial& p);

// Pivot: a variable with |complement| maximal, ties to the lowest complement mask. Each step
// acts with f_{i1}∧f_{i2} for the two smallest remaining elements of I inside the window.
LoweringTrace degree_lowering_trace(const Polynomial& p, int truncation);

// One derivation applied to an earlier generator (parent), or the root p.
struct DerivationRecord {
  std::optional<std::size_t> parent;
  SoElement action;
  Polynomial value;
};

// element = coefficient·e_J·q^{q_power} + remainder, with every variable of remainder having
// complement smaller than |J^c|, and element = Σ cofactors[i]·records[i].value.
struct SolvingElement {
  Mask target = 0;  // J^c
  int truncation = 0;
  Rational coefficient;
  int q_power = 1;
  Polynomial element;
  Polynomial remainder;
  std::vector<DerivationRecord> records;
  std::vector<Polynomial> cofactors;
  bool shape_ok = false;
};

// Lifts p_ℓ with f_{n+1}∧f_{n+2}, …, f_{m−1}∧f_m, then moves the complement {1..m} onto J^c
// with e_a∧f_b steps. A step that does not kill q is followed by
// P ← q·E(P) − d·E(q)·P, which keeps the shape and raises the power of q by one.
SolvingElement produce_solving_element(const LoweringTrace& trace, Mask target, int truncation);

struct SolvingAudit {
  bool replay_ok = false;       // each record is its action applied to its parent
  bool combination_ok = false;  // Σ cofactor·record equals the element
  bool membership_ok = false;   // independent linear solve over the cofactor supports
  bool shape_ok = false;
  bool ok() const { return replay_ok && combination_ok && membership_ok && shape_ok; }
};

SolvingAudit audit_solving_element(const LoweringTrace& trace, const SolvingElement& e);

// e_J·q^{q_power} − s = Σ cofactors[i]·generators[i], with generators the solving elements
// used and s free of variables with complement of size ≥ n.
struct LocalizedSolution {
  Mask target = 0;
  int truncation = 0;
  int q_power = 0;
  Polynomial s;
  std::vector<Mask> generator_targets;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> cofactors;
};

LocalizedSolution assemble_solution(const LoweringTrace& trace, Mask target, int truncation);

struct SolutionAudit {
  bool generators_ok = false;   // each generator rebuilt and audited
  bool combination_ok = false;  // Σ cofactor·generator equals e_J·q^d − s
  bool membership_ok = false;   // independent linear solve over the cofactor supports
  bool filtration_ok = false;   // s only uses complements of size ≤ n − 2
  bool ok() const { return generators_ok && combination_ok && membership_ok && filtration_ok; }
};

SolutionAudit audit_solution(const LoweringTrace& trace, const LocalizedSolution& sol);

// Coefficient of e_1∧…∧e_N in ω∧ω', both given in the window {1..N}.
Rational gamma_pairing(const SpinVector& omega, const SpinVector& omega_prime);

}  // namespace halfspin
