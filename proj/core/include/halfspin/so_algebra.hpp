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

#include <compare>
#include <map>
#include <string>

#include "halfspin/clifford.hpp"
#include "halfspin/linalg.hpp"

namespace halfspin {

enum class TwoFormKind : unsigned char { EE, FF, EF };

// Basis two-form: e_i∧e_j or f_i∧f_j with i < j, or e_i∧f_j for any i, j.
struct TwoForm {
  TwoFormKind kind;
  int i;
  int j;
  friend auto operator<=>(const TwoForm&, const TwoForm&) = default;

  std::string to_string() const;
  Symbol left() const { return kind == TwoFormKind::FF ? f_sym(i) : e_sym(i); }
  Symbol right() const { return kind == TwoFormKind::EE ? e_sym(j) : f_sym(j); }
};

// Element of so(V_n) ≅ ∧²V_n.
class SoElement {
 public:
  using Terms = std::map<TwoForm, Rational>;

  explicit SoElement(int n);
  static SoElement ee(int n, int i, int j, const Rational& c = 1);
  static SoElement ff(int n, int i, int j, const Rational& c = 1);
  static SoElement ef(int n, int i, int j, const Rational& c = 1);
  // u∧v for arbitrary basis symbols, normalized to the stored orientation.
  static SoElement wedge(int n, Symbol u, Symbol v, const Rational& c = 1);

  int level() const { return n_; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const TwoForm& t) const;
  void add_term(const TwoForm& t, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  bool only_ef() const;
  // Trace of the gl(E) part: sum of the e_i∧f_i coefficients.
  Rational trace() const;

  SoElement& operator+=(const SoElement& o);
  SoElement& operator-=(const SoElement& o);
  SoElement& operator*=(const Rational& s);
  friend SoElement operator+(SoElement a, const SoElement& b) { return a += b; }
  friend SoElement operator-(SoElement a, const SoElement& b) { return a -= b; }
  friend SoElement operator*(const Rational& s, SoElement a) { return a *= s; }
  friend bool operator==(const SoElement&, const SoElement&) = default;

  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

// ¼(uv − vu) summed over the terms.
CliffordElement so_to_clifford(const SoElement& x);
// Inverse of so_to_clifford on its image; throws std::domain_error outside it.
SoElement clifford_to_so(const CliffordElement& a);
SoElement bracket(const SoElement& x, const SoElement& y);

// Matrix of the natural action on V_n: u∧v sends w to (v|w)u − (u|w)v.
Matrix so_matrix(const SoElement& x);

// Chevalley generators h_1..h_n of the Cartan subalgebra (n ≥ 2).
SoElement chevalley_h(int n, int i);

}  // namespace halfspin

namespace halfspin {

// Column c of g is the image of basis vector c (e_1..e_n, f_1..f_n).
VectorInV matrix_column(const Matrix& g, int n, std::size_t c);
VectorInV apply_matrix(const Matrix& g, const VectorInV& v);
bool is_isometry(const Matrix& g, int n);

// Algebra automorphism of Cl(V_n) induced by an isometry g.
CliffordElement apply_isometry(const Matrix& g, const CliffordElement& a);
// ∧g on ∧V_n.
ExteriorVector exterior_transform(const Matrix& g, const ExteriorVector& w);

}  // namespace halfspin
