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

#include "halfspin/clifford.hpp"
#include "halfspin/linalg.hpp"
#include "halfspin/spin_rep.hpp"

namespace halfspin {

// Subspace of V_n spanned by the rows of a k×2n matrix, validated isotropic.
class IsotropicSubspace {
 public:
  int level() const { return n_; }
  const Matrix& rows() const { return rows_; }
  std::size_t dim() const { return rows_.rows(); }
  bool is_maximal() const { return dim() == static_cast<std::size_t>(n_); }
  std::vector<VectorInV> vectors() const;
  // Reduced echelon form of the row space; the canonical serialization.
  Matrix canonical() const { return row_space(rows_); }
  bool same_as(const IsotropicSubspace& o) const { return same_row_space(rows_, o.rows_); }
  bool contains(const VectorInV& v) const;

 private:
  friend IsotropicSubspace check_isotropic(int n, const Matrix& rows);
  IsotropicSubspace(int n, Matrix rows) : n_(n), rows_(std::move(rows)) {}
  int n_;
  Matrix rows_;
};

class NotIsotropicError : public std::domain_error {
 public:
  NotIsotropicError(std::size_t a, std::size_t b, Rational value)
      : std::domain_error("rows " + std::to_string(a) + " and " + std::to_string(b) +
                          " pair to " + value.get_str()),
        row_a(a), row_b(b), pairing(std::move(value)) {}
  std::size_t row_a;
  std::size_t row_b;
  Rational pairing;
};

// Throws NotIsotropicError with a witness pair, or std::domain_error on rank deficiency.
IsotropicSubspace check_isotropic(int n, const Matrix& rows);
IsotropicSubspace span_of(const std::vector<VectorInV>& vs);

// Hyperbolic basis with f'_1..f'_k spanning H∩F, f'_1..f'_n spanning F and
// e'_{k+1}..e'_n, f'_1..f'_k spanning H. Normalized so that f'_1⋯f'_n = f_1⋯f_n.
struct AdaptedBasis {
  int n = 0;
  int k = 0;
  std::vector<VectorInV> e;
  std::vector<VectorInV> f;
};

AdaptedBasis adapted_basis(const IsotropicSubspace& h);
bool is_hyperbolic_basis(const std::vector<VectorInV>& e, const std::vector<VectorInV>& f);

// ω_H = e'_{k+1}⋯e'_n f in the ∧E model.
SpinVector omega_of(const IsotropicSubspace& h);
// e'_{k+1}∧⋯∧e'_n∧f'_1∧⋯∧f'_k.
ExteriorVector pluecker(const IsotropicSubspace& h);

// Rows span {v ∈ V_n : v·x = 0}, in reduced echelon form.
Matrix annihilator(const SpinVector& x);

// Rows span S_H = {x : v·x = 0 for all v ∈ H} as dense coordinate vectors.
Matrix spinors_annihilated_by(const IsotropicSubspace& h);

enum class PurityVerdict { Zero, Pure, NotPure };
std::string to_string(PurityVerdict v);

struct PurityResult {
  PurityVerdict verdict;
  std::size_t annihilator_dim = 0;
  std::optional<IsotropicSubspace> subspace;
};

PurityResult is_pure(const SpinVector& x);

// Word length used for orbit sampling at level n.
int orbit_word_length(int n);

// g·ω for a seeded random g, where ω is whichever of ω_0, ω_1 has the requested parity.
SpinVector sample_cone_point(int n, std::uint64_t seed, Parity parity);

// g·E for a seeded random g ∈ Spin(V_n), through its SO image.
IsotropicSubspace random_maximal_isotropic(int n, std::uint64_t seed);

// span(e_i : i ∈ A, f_j : j ∉ A) for every A ⊆ {1..n}, ordered by mask.
std::vector<IsotropicSubspace> coordinate_subspaces(int n);

// Isometry of V_n stored by columns: column c is the image of the c-th standard basis vector.
struct HyperbolicFrame {
  int n = 0;
  Matrix to_standard;    // frame coordinates -> standard coordinates
  Matrix from_standard;  // inverse
  VectorInV e(int i) const { return matrix_column(to_standard, n, static_cast<std::size_t>(i - 1)); }
  VectorInV f(int i) const { return matrix_column(to_standard, n, static_cast<std::size_t>(n + i - 1)); }
};

HyperbolicFrame make_frame(int n, const Matrix& to_standard);

// Frame with last pair (e, h), h ∈ F, e ∉ F; the f-vectors span F.
HyperbolicFrame frame_for_pair(const VectorInV& e, const VectorInV& h);
// Frame with last e-vector e for any nonzero isotropic e; partner chosen deterministically.
HyperbolicFrame frame_with_last(const VectorInV& e);
// Frame with last pair (e, h) for any hyperbolic pair.
HyperbolicFrame frame_with_last_pair(const VectorInV& e, const VectorInV& h);

}  // namespace halfspin
