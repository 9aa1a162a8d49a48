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
#include <optional>
#include <string>
#include <vector>

#include "halfspin/rational.hpp"

namespace halfspin {

enum class Letter : unsigned char { E, F };

// A basis vector e_i or f_i of V_n, 1-based.
struct Symbol {
  Letter letter;
  int index;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

inline Symbol e_sym(int i) { return {Letter::E, i}; }
inline Symbol f_sym(int i) { return {Letter::F, i}; }

// Coordinates of a vector of V_n in the hyperbolic basis, laid out e_1..e_n, f_1..f_n.
class VectorInV {
 public:
  explicit VectorInV(int n);
  VectorInV(int n, std::vector<Rational> coords);

  static VectorInV basis(int n, Symbol s);

  int level() const { return n_; }
  Rational& e(int i) { return coords_[static_cast<std::size_t>(i - 1)]; }
  Rational& f(int i) { return coords_[static_cast<std::size_t>(n_ + i - 1)]; }
  const Rational& e(int i) const { return coords_[static_cast<std::size_t>(i - 1)]; }
  const Rational& f(int i) const { return coords_[static_cast<std::size_t>(n_ + i - 1)]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool has_e_part() const;
  bool has_f_part() const;

  friend bool operator==(const VectorInV&, const VectorInV&) = default;
  friend VectorInV operator+(VectorInV a, const VectorInV& b);
  friend VectorInV operator-(VectorInV a, const VectorInV& b);
  friend VectorInV operator*(const Rational& s, VectorInV v);

  std::string to_string() const;

 private:
  int n_;
  std::vector<Rational> coords_;
};

// (v|w) for the split form with (e_i|f_j) = δ_ij.
Rational bilinear(const VectorInV& v, const VectorInV& w);
inline Rational quadratic(const VectorInV& v) { return bilinear(v, v); }

// Normal-ordered monomial e_I f_J (e-factors first, each block ascending).
struct CliffordMonomial {
  Mask e = 0;
  Mask f = 0;
  friend auto operator<=>(const CliffordMonomial&, const CliffordMonomial&) = default;
};

std::vector<Symbol> word_of(const CliffordMonomial& m);
std::string monomial_name(const CliffordMonomial& m);

class CliffordElement {
 public:
  using Terms = std::map<CliffordMonomial, Rational>;

  explicit CliffordElement(int n);
  static CliffordElement scalar(int n, const Rational& c);
  static CliffordElement generator(int n, Symbol s);
  static CliffordElement from_vector(const VectorInV& v);
  static CliffordElement monomial(int n, CliffordMonomial m, const Rational& c = 1);

  int level() const { return n_; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const CliffordMonomial& m) const;
  void add_term(const CliffordMonomial& m, const Rational& c);
  bool is_zero() const { return terms_.empty(); }

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(const Rational& s);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator-(CliffordElement a) { return a *= Rational(-1); }
  friend CliffordElement operator*(const Rational& s, CliffordElement a) { return a *= s; }
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

  // Canonical text: terms by (eSet, fSet) mask, e.g. "1/2*e1e2f1 + -1*1".
  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

CliffordElement normal_form(int n, const std::vector<Symbol>& word);
CliffordElement mul(const CliffordElement& a, const CliffordElement& b);
inline CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  return mul(a, b);
}
CliffordElement star(const CliffordElement& a);
CliffordElement commutator(const CliffordElement& a, const CliffordElement& b);

// Right multiplication of a single monomial by a word, accumulated into out.
void multiply_monomial_by_word(int n, const CliffordMonomial& m, const Rational& c,
                               const std::vector<Symbol>& word, CliffordElement::Terms& out);

// Element of ∧V_n. Symbol bits: e_i at bit i-1, f_i at bit n+i-1.
class ExteriorVector {
 public:
  using Terms = std::map<Mask, Rational>;

  explicit ExteriorVector(int n);
  static ExteriorVector unit(int n);
  static ExteriorVector basis(int n, Mask symbols, const Rational& c = 1);

  int level() const { return n_; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(Mask symbols) const;
  void add_term(Mask symbols, const Rational& c);
  bool is_zero() const { return terms_.empty(); }

  // Homogeneous degree if all terms share one, empty for the zero vector or mixed.
  std::optional<int> degree() const;
  ExteriorVector degree_part(int d) const;

  ExteriorVector& operator+=(const ExteriorVector& o);
  ExteriorVector& operator-=(const ExteriorVector& o);
  ExteriorVector& operator*=(const Rational& s);
  friend ExteriorVector operator+(ExteriorVector a, const ExteriorVector& b) { return a += b; }
  friend ExteriorVector operator-(ExteriorVector a, const ExteriorVector& b) { return a -= b; }
  friend ExteriorVector operator*(const Rational& s, ExteriorVector a) { return a *= s; }
  friend bool operator==(const ExteriorVector&, const ExteriorVector&) = default;

  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

inline Mask symbol_bit(int n, Symbol s) {
  return s.letter == Letter::E ? bit(s.index) : bit(n + s.index);
}

std::string exterior_name(int n, Mask symbols);

// o(v)ω and ι(v)ω on ∧V.
ExteriorVector outer_v(const VectorInV& v, const ExteriorVector& w);
ExteriorVector inner_v(const VectorInV& v, const ExteriorVector& w);
ExteriorVector wedge(const ExteriorVector& a, const ExteriorVector& b);
ExteriorVector wedge_of_vectors(const std::vector<VectorInV>& vs);

// Clifford module structure on ∧V generated by v ↦ o(v) + ι(v).
ExteriorVector act_on_exterior(const CliffordElement& a, const ExteriorVector& w);

}  // namespace halfspin
