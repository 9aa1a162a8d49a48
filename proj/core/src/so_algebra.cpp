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

#include "halfspin/so_algebra.hpp"

#include <stdexcept>

namespace halfspin {

namespace {

void check_index(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("two-form index outside 1..n");
}

}  // namespace

std::string TwoForm::to_string() const {
  const char* l = kind == TwoFormKind::FF ? "f" : "e";
  const char* r = kind == TwoFormKind::EE ? "e" : "f";
  return l + std::to_string(i) + "^" + r + std::to_string(j);
}

SoElement::SoElement(int n) : n_(n) { require_level(n); }

SoElement SoElement::ee(int n, int i, int j, const Rational& c) {
  return wedge(n, e_sym(i), e_sym(j), c);
}

SoElement SoElement::ff(int n, int i, int j, const Rational& c) {
  return wedge(n, f_sym(i), f_sym(j), c);
}

SoElement SoElement::ef(int n, int i, int j, const Rational& c) {
  return wedge(n, e_sym(i), f_sym(j), c);
}

SoElement SoElement::wedge(int n, Symbol u, Symbol v, const Rational& c) {
  SoElement x(n);
  check_index(n, u.index);
  check_index(n, v.index);
  if (u == v) return x;
  Rational coef = c;
  if (u.letter == Letter::F && v.letter == Letter::E) {
    std::swap(u, v);
    coef = -coef;
  }
  if (u.letter == Letter::E && v.letter == Letter::F) {
    x.add_term({TwoFormKind::EF, u.index, v.index}, coef);
    return x;
  }
  if (u.index > v.index) {
    std::swap(u, v);
    coef = -coef;
  }
  x.add_term({u.letter == Letter::E ? TwoFormKind::EE : TwoFormKind::FF, u.index, v.index}, coef);
  return x;
}

Rational SoElement::coefficient(const TwoForm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SoElement::add_term(const TwoForm& t, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool SoElement::only_ef() const {
  for (const auto& [t, c] : terms_)
    if (t.kind != TwoFormKind::EF) return false;
  return true;
}

Rational SoElement::trace() const {
  Rational tr = 0;
  for (const auto& [t, c] : terms_)
    if (t.kind == TwoFormKind::EF && t.i == t.j) tr += c;
  return tr;
}

SoElement& SoElement::operator+=(const SoElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("so elements at different levels");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

SoElement& SoElement::operator-=(const SoElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("so elements at different levels");
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

SoElement& SoElement::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= s;
  return *this;
}

std::string SoElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*" + t.to_string();
  }
  return s;
}

CliffordElement so_to_clifford(const SoElement& x) {
  const int n = x.level();
  CliffordElement out(n);
  const Rational quarter(1, 4);
  for (const auto& [t, c] : x.terms()) {
    const Symbol u = t.left();
    const Symbol v = t.right();
    CliffordElement piece = normal_form(n, {u, v}) - normal_form(n, {v, u});
    out += (quarter * c) * piece;
  }
  return out;
}

SoElement clifford_to_so(const CliffordElement& a) {
  const int n = a.level();
  SoElement x(n);
  for (const auto& [m, c] : a.terms()) {
    const int ne = popcount(m.e);
    const int nf = popcount(m.f);
    if (ne + nf == 0) continue;
    if (ne + nf != 2) throw std::domain_error("element is not in the image of so(V)");
    const auto es = indices_of(m.e);
    const auto fs = indices_of(m.f);
    if (ne == 2) x += SoElement::ee(n, es[0], es[1], 2 * c);
    else if (nf == 2) x += SoElement::ff(n, fs[0], fs[1], 2 * c);
    else x += SoElement::ef(n, es[0], fs[0], 2 * c);
  }
  if (so_to_clifford(x) != a) throw std::domain_error("element is not in the image of so(V)");
  return x;
}

SoElement bracket(const SoElement& x, const SoElement& y) {
  return clifford_to_so(commutator(so_to_clifford(x), so_to_clifford(y)));
}

Matrix so_matrix(const SoElement& x) {
  const int n = x.level();
  Matrix m(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n));
  auto column = [n](Symbol s) {
    return static_cast<std::size_t>(s.letter == Letter::E ? s.index - 1 : n + s.index - 1);
  };
  // (v|w) is 1 exactly when w is the hyperbolic partner of v.
  auto partner = [](Symbol s) {
    return Symbol{s.letter == Letter::E ? Letter::F : Letter::E, s.index};
  };
  for (const auto& [t, c] : x.terms()) {
    const Symbol u = t.left();
    const Symbol v = t.right();
    m(column(u), column(partner(v))) += c;
    m(column(v), column(partner(u))) -= c;
  }
  return m;
}

SoElement chevalley_h(int n, int i) {
  if (n < 2) throw std::invalid_argument("Chevalley basis needs n >= 2");
  check_index(n, i);
  if (i < n) return SoElement::ef(n, i, i) - SoElement::ef(n, i + 1, i + 1);
  return SoElement::ef(n, n - 1, n - 1) + SoElement::ef(n, n, n);
}

}  // namespace halfspin

namespace halfspin {

VectorInV matrix_column(const Matrix& g, int n, std::size_t c) {
  std::vector<Rational> coords(static_cast<std::size_t>(2 * n));
  for (std::size_t r = 0; r < coords.size(); ++r) coords[r] = g(r, c);
  return VectorInV(n, std::move(coords));
}

VectorInV apply_matrix(const Matrix& g, const VectorInV& v) {
  return VectorInV(v.level(), g.apply(v.coords()));
}

bool is_isometry(const Matrix& g, int n) {
  const std::size_t dim = static_cast<std::size_t>(2 * n);
  if (g.rows() != dim || g.cols() != dim) return false;
  std::vector<VectorInV> cols;
  for (std::size_t c = 0; c < dim; ++c) cols.push_back(matrix_column(g, n, c));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a; b < dim; ++b) {
      const bool paired = (a < static_cast<std::size_t>(n)) ? b == a + static_cast<std::size_t>(n)
                                                            : false;
      if (bilinear(cols[a], cols[b]) != (paired ? 1 : 0)) return false;
    }
  }
  return true;
}

CliffordElement apply_isometry(const Matrix& g, const CliffordElement& a) {
  const int n = a.level();
  std::vector<CliffordElement> images;
  for (std::size_t c = 0; c < static_cast<std::size_t>(2 * n); ++c)
    images.push_back(CliffordElement::from_vector(matrix_column(g, n, c)));
  CliffordElement out(n);
  for (const auto& [m, coef] : a.terms()) {
    CliffordElement acc = CliffordElement::scalar(n, coef);
    for (const Symbol& s : word_of(m)) {
      const std::size_t c = static_cast<std::size_t>(s.letter == Letter::E ? s.index - 1 : n + s.index - 1);
      acc = mul(acc, images[c]);
    }
    out += acc;
  }
  return out;
}

ExteriorVector exterior_transform(const Matrix& g, const ExteriorVector& w) {
  const int n = w.level();
  std::vector<VectorInV> images;
  for (std::size_t c = 0; c < static_cast<std::size_t>(2 * n); ++c)
    images.push_back(matrix_column(g, n, c));
  ExteriorVector out(n);
  for (const auto& [m, coef] : w.terms()) {
    ExteriorVector acc = ExteriorVector::basis(n, 0, coef);
    const auto symbols = indices_of(m);
    for (auto it = symbols.rbegin(); it != symbols.rend(); ++it)
      acc = outer_v(images[static_cast<std::size_t>(*it - 1)], acc);
    out += acc;
  }
  return out;
}

}  // namespace halfspin
