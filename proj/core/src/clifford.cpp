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

#include "halfspin/clifford.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace halfspin {

namespace {

void check_symbol(int n, Symbol s) {
  if (s.index < 1 || s.index > n) {
    throw std::out_of_range("basis index " + std::to_string(s.index) + " outside 1.." +
                            std::to_string(n));
  }
}

void check_same_level(int a, int b) {
  if (a != b) throw std::invalid_argument("operands live at different levels");
}

template <class Terms, class Key>
void accumulate(Terms& terms, const Key& k, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

using Work = std::map<CliffordMonomial, Rational>;

// m · s for a generator s, in normal order.
void right_multiply(const CliffordMonomial& m, const Rational& c, Symbol s, Work& out) {
  const int k = s.index;
  if (s.letter == Letter::F) {
    if (contains(m.f, k)) return;
    const int sign = parity_sign(count_above(m.f, k));
    accumulate(out, CliffordMonomial{m.e, m.f | bit(k)}, sign > 0 ? c : Rational(-c));
    return;
  }
  // e_I f_J e_k = (-1)^|J| e_I e_k f_J + [k in J] 2 (-1)^(|J|-t) e_I f_{J\k}
  const int l = popcount(m.f);
  if (!contains(m.e, k)) {
    const int sign = parity_sign(l + count_above(m.e, k));
    accumulate(out, CliffordMonomial{m.e | bit(k), m.f}, sign > 0 ? c : Rational(-c));
  }
  if (contains(m.f, k)) {
    const int t = count_below(m.f, k) + 1;
    const int sign = parity_sign(l - t);
    Rational twice = 2 * c;
    if (sign < 0) twice = -twice;
    accumulate(out, CliffordMonomial{m.e, m.f & ~bit(k)}, twice);
  }
}

}  // namespace

VectorInV::VectorInV(int n) : n_(n), coords_(static_cast<std::size_t>(2 * n)) { require_level(n); }

VectorInV::VectorInV(int n, std::vector<Rational> coords) : n_(n), coords_(std::move(coords)) {
  require_level(n);
  if (coords_.size() != static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("vector needs 2n coordinates");
}

VectorInV VectorInV::basis(int n, Symbol s) {
  check_symbol(n, s);
  VectorInV v(n);
  if (s.letter == Letter::E) v.e(s.index) = 1;
  else v.f(s.index) = 1;
  return v;
}

bool VectorInV::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool VectorInV::has_e_part() const {
  for (int i = 1; i <= n_; ++i)
    if (sgn(e(i)) != 0) return true;
  return false;
}

bool VectorInV::has_f_part() const {
  for (int i = 1; i <= n_; ++i)
    if (sgn(f(i)) != 0) return true;
  return false;
}

VectorInV operator+(VectorInV a, const VectorInV& b) {
  check_same_level(a.n_, b.n_);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
  return a;
}

VectorInV operator-(VectorInV a, const VectorInV& b) {
  check_same_level(a.n_, b.n_);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] -= b.coords_[i];
  return a;
}

VectorInV operator*(const Rational& s, VectorInV v) {
  for (auto& x : v.coords_) x *= s;
  return v;
}

std::string VectorInV::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= 2 * n_; ++i) {
    const Rational& c = coords_[static_cast<std::size_t>(i - 1)];
    if (sgn(c) == 0) continue;
    os << (first ? "" : " + ") << c.get_str() << '*'
       << (i <= n_ ? "e" + std::to_string(i) : "f" + std::to_string(i - n_));
    first = false;
  }
  return first ? "0" : os.str();
}

Rational bilinear(const VectorInV& v, const VectorInV& w) {
  check_same_level(v.level(), w.level());
  Rational s = 0;
  for (int i = 1; i <= v.level(); ++i) {
    if (sgn(v.e(i)) != 0 && sgn(w.f(i)) != 0) s += v.e(i) * w.f(i);
    if (sgn(v.f(i)) != 0 && sgn(w.e(i)) != 0) s += v.f(i) * w.e(i);
  }
  return s;
}

std::vector<Symbol> word_of(const CliffordMonomial& m) {
  std::vector<Symbol> w;
  for (int i : indices_of(m.e)) w.push_back(e_sym(i));
  for (int j : indices_of(m.f)) w.push_back(f_sym(j));
  return w;
}

std::string monomial_name(const CliffordMonomial& m) {
  if (m.e == 0 && m.f == 0) return "1";
  std::string s;
  for (int i : indices_of(m.e)) s += "e" + std::to_string(i);
  for (int j : indices_of(m.f)) s += "f" + std::to_string(j);
  return s;
}

CliffordElement::CliffordElement(int n) : n_(n) { require_level(n); }

CliffordElement CliffordElement::scalar(int n, const Rational& c) {
  CliffordElement a(n);
  a.add_term({}, c);
  return a;
}

CliffordElement CliffordElement::generator(int n, Symbol s) {
  check_symbol(n, s);
  CliffordElement a(n);
  if (s.letter == Letter::E) a.add_term({bit(s.index), 0}, 1);
  else a.add_term({0, bit(s.index)}, 1);
  return a;
}

CliffordElement CliffordElement::from_vector(const VectorInV& v) {
  CliffordElement a(v.level());
  for (int i = 1; i <= v.level(); ++i) {
    a.add_term({bit(i), 0}, v.e(i));
    a.add_term({0, bit(i)}, v.f(i));
  }
  return a;
}

CliffordElement CliffordElement::monomial(int n, CliffordMonomial m, const Rational& c) {
  if ((m.e | m.f) & ~full_mask(n)) throw std::out_of_range("monomial index outside 1..n");
  CliffordElement a(n);
  a.add_term(m, c);
  return a;
}

Rational CliffordElement::coefficient(const CliffordMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CliffordElement::add_term(const CliffordMonomial& m, const Rational& c) {
  accumulate(terms_, m, c);
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  check_same_level(n_, o.n_);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  check_same_level(n_, o.n_);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, Rational(-c));
  return *this;
}

CliffordElement& CliffordElement::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*" + monomial_name(m);
  }
  return s;
}

void multiply_monomial_by_word(int n, const CliffordMonomial& m, const Rational& c,
                               const std::vector<Symbol>& word, CliffordElement::Terms& out) {
  Work current;
  current.emplace(m, c);
  for (const Symbol& s : word) {
    check_symbol(n, s);
    Work next;
    for (const auto& [mm, cc] : current) right_multiply(mm, cc, s, next);
    current.swap(next);
    if (current.empty()) return;
  }
  for (const auto& [mm, cc] : current) accumulate(out, mm, cc);
}

CliffordElement normal_form(int n, const std::vector<Symbol>& word) {
  CliffordElement result(n);
  CliffordElement::Terms out;
  multiply_monomial_by_word(n, {}, 1, word, out);
  for (const auto& [m, c] : out) result.add_term(m, c);
  return result;
}

CliffordElement mul(const CliffordElement& a, const CliffordElement& b) {
  check_same_level(a.level(), b.level());
  CliffordElement::Terms out;
  for (const auto& [mb, cb] : b.terms()) {
    const auto word = word_of(mb);
    for (const auto& [ma, ca] : a.terms()) multiply_monomial_by_word(a.level(), ma, ca * cb, word, out);
  }
  CliffordElement result(a.level());
  for (const auto& [m, c] : out) result.add_term(m, c);
  return result;
}

CliffordElement star(const CliffordElement& a) {
  CliffordElement::Terms out;
  for (const auto& [m, c] : a.terms()) {
    auto word = word_of(m);
    std::reverse(word.begin(), word.end());
    multiply_monomial_by_word(a.level(), {}, c, word, out);
  }
  CliffordElement result(a.level());
  for (const auto& [m, c] : out) result.add_term(m, c);
  return result;
}

CliffordElement commutator(const CliffordElement& a, const CliffordElement& b) {
  return mul(a, b) - mul(b, a);
}

ExteriorVector::ExteriorVector(int n) : n_(n) { require_level(n); }

ExteriorVector ExteriorVector::unit(int n) { return basis(n, 0, 1); }

ExteriorVector ExteriorVector::basis(int n, Mask symbols, const Rational& c) {
  ExteriorVector w(n);
  if (symbols & ~full_mask(2 * n)) throw std::out_of_range("exterior symbol outside V_n");
  w.add_term(symbols, c);
  return w;
}

Rational ExteriorVector::coefficient(Mask symbols) const {
  auto it = terms_.find(symbols);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorVector::add_term(Mask symbols, const Rational& c) { accumulate(terms_, symbols, c); }

std::optional<int> ExteriorVector::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = popcount(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (popcount(m) != d) return std::nullopt;
  return d;
}

ExteriorVector ExteriorVector::degree_part(int d) const {
  ExteriorVector w(n_);
  for (const auto& [m, c] : terms_)
    if (popcount(m) == d) w.terms_.emplace(m, c);
  return w;
}

ExteriorVector& ExteriorVector::operator+=(const ExteriorVector& o) {
  check_same_level(n_, o.n_);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

ExteriorVector& ExteriorVector::operator-=(const ExteriorVector& o) {
  check_same_level(n_, o.n_);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, Rational(-c));
  return *this;
}

ExteriorVector& ExteriorVector::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::string exterior_name(int n, Mask symbols) {
  if (symbols == 0) return "1";
  std::string s;
  for (int b : indices_of(symbols))
    s += b <= n ? "e" + std::to_string(b) : "f" + std::to_string(b - n);
  return s;
}

std::string ExteriorVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*" + exterior_name(n_, m);
  }
  return s;
}

namespace {

// Left wedge by the basis symbol at 1-based bit position b.
void outer_symbol(int b, Mask m, const Rational& c, ExteriorVector::Terms& out) {
  if (contains(m, b)) return;
  accumulate(out, m | bit(b), parity_sign(count_below(m, b)) > 0 ? c : Rational(-c));
}

// Contraction removing the factor at bit position b, which pairs to 1 with the acting symbol.
void inner_symbol(int b, Mask m, const Rational& c, ExteriorVector::Terms& out) {
  if (!contains(m, b)) return;
  accumulate(out, m & ~bit(b), parity_sign(count_below(m, b)) > 0 ? c : Rational(-c));
}

int partner_bit(int n, Symbol s) { return s.letter == Letter::E ? n + s.index : s.index; }

}  // namespace

ExteriorVector outer_v(const VectorInV& v, const ExteriorVector& w) {
  check_same_level(v.level(), w.level());
  const int n = v.level();
  ExteriorVector::Terms out;
  for (int b = 1; b <= 2 * n; ++b) {
    const Rational& coef = v.coords()[static_cast<std::size_t>(b - 1)];
    if (sgn(coef) == 0) continue;
    for (const auto& [m, c] : w.terms()) outer_symbol(b, m, c * coef, out);
  }
  ExteriorVector r(n);
  for (const auto& [m, c] : out) r.add_term(m, c);
  return r;
}

ExteriorVector inner_v(const VectorInV& v, const ExteriorVector& w) {
  check_same_level(v.level(), w.level());
  const int n = v.level();
  ExteriorVector::Terms out;
  for (int i = 1; i <= n; ++i) {
    // ι(e_i) strips an f_i factor, ι(f_i) strips an e_i factor.
    if (sgn(v.e(i)) != 0)
      for (const auto& [m, c] : w.terms()) inner_symbol(n + i, m, c * v.e(i), out);
    if (sgn(v.f(i)) != 0)
      for (const auto& [m, c] : w.terms()) inner_symbol(i, m, c * v.f(i), out);
  }
  ExteriorVector r(n);
  for (const auto& [m, c] : out) r.add_term(m, c);
  return r;
}

ExteriorVector wedge(const ExteriorVector& a, const ExteriorVector& b) {
  check_same_level(a.level(), b.level());
  ExteriorVector r(a.level());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      // Sign of merging: count pairs (x in a, y in b) with x > y.
      int inversions = 0;
      for (int y : indices_of(mb)) inversions += count_above(ma, y);
      const Rational c = ca * cb;
      r.add_term(ma | mb, parity_sign(inversions) > 0 ? c : Rational(-c));
    }
  }
  return r;
}

ExteriorVector wedge_of_vectors(const std::vector<VectorInV>& vs) {
  if (vs.empty()) throw std::invalid_argument("wedge of an empty list needs a level");
  const int n = vs.front().level();
  ExteriorVector acc = ExteriorVector::unit(n);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) acc = outer_v(*it, acc);
  return acc;
}

ExteriorVector act_on_exterior(const CliffordElement& a, const ExteriorVector& w) {
  check_same_level(a.level(), w.level());
  const int n = a.level();
  ExteriorVector::Terms out;
  for (const auto& [mono, coef] : a.terms()) {
    auto word = word_of(mono);
    ExteriorVector::Terms current;
    for (const auto& [m, c] : w.terms()) current.emplace(m, c * coef);
    for (auto it = word.rbegin(); it != word.rend() && !current.empty(); ++it) {
      ExteriorVector::Terms next;
      const int own = it->letter == Letter::E ? it->index : n + it->index;
      const int partner = partner_bit(n, *it);
      for (const auto& [m, c] : current) {
        outer_symbol(own, m, c, next);
        inner_symbol(partner, m, c, next);
      }
      current.swap(next);
    }
    for (const auto& [m, c] : current) accumulate(out, m, c);
  }
  ExteriorVector r(n);
  for (const auto& [m, c] : out) r.add_term(m, c);
  return r;
}

}  // namespace halfspin
