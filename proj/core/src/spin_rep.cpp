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

#include "halfspin/spin_rep.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <regex>
#include <stdexcept>

namespace halfspin {

namespace {

void check_same_level(int a, int b) {
  if (a != b) throw std::invalid_argument("operands live at different levels");
}

void accumulate(SpinVector::Terms& terms, Mask k, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

// o(e_i) on a basis wedge.
void wedge_e(int i, Mask m, const Rational& c, SpinVector::Terms& out) {
  if (contains(m, i)) return;
  accumulate(out, m | bit(i), parity_sign(count_below(m, i)) > 0 ? c : Rational(-c));
}

// ι(f_i) on a basis wedge.
void contract_f(int i, Mask m, const Rational& c, SpinVector::Terms& out) {
  if (!contains(m, i)) return;
  accumulate(out, m & ~bit(i), parity_sign(count_below(m, i)) > 0 ? c : Rational(-c));
}

using Step = void (*)(int, Mask, const Rational&, SpinVector::Terms&);

SpinVector::Terms apply_step(Step step, int i, const SpinVector::Terms& in) {
  SpinVector::Terms out;
  for (const auto& [m, c] : in) step(i, m, c, out);
  return out;
}

void add_into(SpinVector::Terms& acc, const SpinVector::Terms& part, const Rational& scale) {
  for (const auto& [m, c] : part) accumulate(acc, m, c * scale);
}

SpinVector from_terms(int n, const SpinVector::Terms& t) {
  SpinVector x(n);
  for (const auto& [m, c] : t) x.add_term(m, c);
  return x;
}

}  // namespace

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Mixed: return "mixed";
  }
  return "mixed";
}

SpinVector::SpinVector(int n) : n_(n) { require_level(n); }

SpinVector SpinVector::unit(int n) { return basis(n, 0); }

SpinVector SpinVector::basis(int n, Mask subset, const Rational& c) {
  SpinVector x(n);
  if (subset & ~full_mask(n)) throw std::out_of_range("subset outside 1..n");
  x.add_term(subset, c);
  return x;
}

SpinVector SpinVector::omega0(int n) { return basis(n, full_mask(n)); }

SpinVector SpinVector::omega1(int n) {
  if (n < 1) throw std::invalid_argument("omega1 needs n >= 1");
  return basis(n, full_mask(n - 1));
}

SpinVector SpinVector::from_dense(int n, const std::vector<Rational>& coords) {
  if (coords.size() != (std::size_t{1} << n)) throw std::invalid_argument("dense length must be 2^n");
  SpinVector x(n);
  for (std::size_t m = 0; m < coords.size(); ++m) x.add_term(static_cast<Mask>(m), coords[m]);
  return x;
}

Rational SpinVector::coefficient(Mask subset) const {
  auto it = terms_.find(subset);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SpinVector::add_term(Mask subset, const Rational& c) { accumulate(terms_, subset, c); }

Parity SpinVector::parity() const {
  bool even = false, odd = false;
  for (const auto& [m, c] : terms_) (popcount(m) % 2 ? odd : even) = true;
  if (even && odd) return Parity::Mixed;
  return odd ? Parity::Odd : Parity::Even;
}

SpinVector SpinVector::parity_part(Parity p) const {
  if (p == Parity::Mixed) return *this;
  SpinVector x(n_);
  const int want = p == Parity::Odd ? 1 : 0;
  for (const auto& [m, c] : terms_)
    if (popcount(m) % 2 == want) x.terms_.emplace(m, c);
  return x;
}

std::vector<Rational> SpinVector::dense() const {
  std::vector<Rational> v(std::size_t{1} << n_);
  for (const auto& [m, c] : terms_) v[m] = c;
  return v;
}

SpinVector& SpinVector::operator+=(const SpinVector& o) {
  check_same_level(n_, o.n_);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

SpinVector& SpinVector::operator-=(const SpinVector& o) {
  check_same_level(n_, o.n_);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, Rational(-c));
  return *this;
}

SpinVector& SpinVector::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::string subset_name(Mask subset) {
  if (subset == 0) return "1";
  std::string s;
  for (int i : indices_of(subset)) s += "e" + std::to_string(i);
  return s;
}

std::string SpinVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*" + subset_name(m);
  }
  return s;
}

std::vector<Mask> parity_basis(int n, Parity p) {
  std::vector<Mask> out;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    const bool odd = popcount(m) % 2 == 1;
    if (p == Parity::Mixed || (p == Parity::Odd) == odd) out.push_back(m);
    if (m == full_mask(n)) break;
  }
  return out;
}

SpinVector outer(const VectorInV& v, const SpinVector& x) {
  check_same_level(v.level(), x.level());
  if (v.has_f_part()) throw std::invalid_argument("outer needs a vector in E");
  SpinVector::Terms out;
  for (int i = 1; i <= v.level(); ++i) {
    if (sgn(v.e(i)) == 0) continue;
    for (const auto& [m, c] : x.terms()) wedge_e(i, m, c * v.e(i), out);
  }
  return from_terms(x.level(), out);
}

SpinVector inner(const VectorInV& v, const SpinVector& x) {
  check_same_level(v.level(), x.level());
  if (v.has_e_part()) throw std::invalid_argument("inner needs a vector in F");
  SpinVector::Terms out;
  for (int i = 1; i <= v.level(); ++i) {
    if (sgn(v.f(i)) == 0) continue;
    for (const auto& [m, c] : x.terms()) contract_f(i, m, c * v.f(i), out);
  }
  return from_terms(x.level(), out);
}

SpinVector vector_action(const VectorInV& v, const SpinVector& x) {
  check_same_level(v.level(), x.level());
  SpinVector::Terms out;
  for (int i = 1; i <= v.level(); ++i) {
    if (sgn(v.e(i)) != 0)
      for (const auto& [m, c] : x.terms()) wedge_e(i, m, c * v.e(i), out);
    if (sgn(v.f(i)) != 0)
      for (const auto& [m, c] : x.terms()) contract_f(i, m, 2 * c * v.f(i), out);
  }
  return from_terms(x.level(), out);
}

SpinVector rho_so(const SoElement& x, const SpinVector& w) {
  check_same_level(x.level(), w.level());
  const Rational half(1, 2);
  SpinVector::Terms acc;
  for (const auto& [t, c] : x.terms()) {
    switch (t.kind) {
      case TwoFormKind::EE: {
        // ½ o(e_i) o(e_j)
        auto part = apply_step(wedge_e, t.i, apply_step(wedge_e, t.j, w.terms()));
        add_into(acc, part, half * c);
        break;
      }
      case TwoFormKind::FF: {
        // 2 ι(f_i) ι(f_j)
        auto part = apply_step(contract_f, t.i, apply_step(contract_f, t.j, w.terms()));
        add_into(acc, part, 2 * c);
        break;
      }
      case TwoFormKind::EF: {
        // ½ (o(e_i) ι(f_j) − ι(f_j) o(e_i))
        auto a = apply_step(wedge_e, t.i, apply_step(contract_f, t.j, w.terms()));
        auto b = apply_step(contract_f, t.j, apply_step(wedge_e, t.i, w.terms()));
        add_into(acc, a, half * c);
        add_into(acc, b, -half * c);
        break;
      }
    }
  }
  return from_terms(w.level(), acc);
}

SpinVector rho_tilde(const SoElement& a, const SpinVector& w) {
  check_same_level(a.level(), w.level());
  if (!a.only_ef()) throw std::invalid_argument("rho_tilde needs an element of gl(E)");
  SpinVector out(w.level());
  // e_i∧f_j is the matrix unit sending e_j to e_i; act as a derivation, factor by factor.
  for (const auto& [t, coef] : a.terms()) {
    const int i = t.i;
    const int j = t.j;
    for (const auto& [m, c] : w.terms()) {
      if (!contains(m, j)) continue;
      if (i == j) {
        out.add_term(m, coef * c);
        continue;
      }
      if (contains(m, i)) continue;
      // Replacing e_j by e_i in place, then sorting e_i past the factors strictly between.
      const int lo = std::min(i, j);
      const int hi = std::max(i, j);
      const Mask between = m & ~((Mask{1} << lo) - 1) & (bit(hi) - 1);
      const Rational v = coef * c;
      out.add_term((m & ~bit(j)) | bit(i), parity_sign(popcount(between)) > 0 ? v : Rational(-v));
    }
  }
  return out;
}

CliffordElement to_left_ideal(const SpinVector& x) {
  const Mask f = full_mask(x.level());
  CliffordElement a(x.level());
  for (const auto& [m, c] : x.terms()) a.add_term({m, f}, c);
  return a;
}

SpinVector from_left_ideal(const CliffordElement& a) {
  const Mask f = full_mask(a.level());
  SpinVector x(a.level());
  for (const auto& [m, c] : a.terms()) {
    if (m.f != f) throw std::domain_error("element is not in the left ideal Cl(V)f");
    x.add_term(m.e, c);
  }
  return x;
}

SpinVector clifford_act(const CliffordElement& a, const SpinVector& x) {
  return from_left_ideal(mul(a, to_left_ideal(x)));
}

Matrix operator_matrix(int n, const std::function<SpinVector(const SpinVector&)>& op) {
  if (n > kDenseLimit) throw std::invalid_argument("dense operators are limited to n <= 6");
  const std::size_t dim = std::size_t{1} << n;
  Matrix m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const SpinVector image = op(SpinVector::basis(n, static_cast<Mask>(col)));
    if (image.level() != n) throw std::invalid_argument("operator changes the level");
    for (const auto& [row, c] : image.terms()) m(row, col) = c;
  }
  return m;
}

Matrix rho_matrix(const SoElement& x) {
  return operator_matrix(x.level(), [&](const SpinVector& w) { return rho_so(x, w); });
}

Matrix gl_twist_residual(const SoElement& a) {
  if (!a.only_ef()) throw std::invalid_argument("gl_twist_residual needs an element of gl(E)");
  const int n = a.level();
  const Matrix rho = rho_matrix(a);
  const Matrix tilde = operator_matrix(n, [&](const SpinVector& w) { return rho_tilde(a, w); });
  const Rational half_trace = a.trace() / 2;
  return rho - tilde + half_trace * Matrix::identity(rho.rows());
}

RootVector RootVector::parse(const std::string& text) {
  static const std::regex pattern(R"(([ef])(\d+)\^([ef])(\d+))");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw std::invalid_argument("bad root vector: " + text);
  const Symbol u{match[1] == "e" ? Letter::E : Letter::F, std::stoi(match[2])};
  const Symbol v{match[3] == "e" ? Letter::E : Letter::F, std::stoi(match[4])};
  const int n = std::max(u.index, v.index);
  const SoElement x = SoElement::wedge(n, u, v);
  if (x.terms().size() != 1 || x.terms().begin()->second != 1)
    throw std::invalid_argument("root vector must be written in stored orientation: " + text);
  const TwoForm form = x.terms().begin()->first;
  if (form.kind == TwoFormKind::EF && form.i == form.j)
    throw std::invalid_argument("e_i^f_i is not nilpotent");
  return RootVector{form};
}

std::vector<RootVector> root_vectors(int n) {
  std::vector<RootVector> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.push_back({{TwoFormKind::EE, i, j}});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.push_back({{TwoFormKind::FF, i, j}});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) roots.push_back({{TwoFormKind::EF, i, j}});
  return roots;
}

struct GroupElement::Cache {
  std::once_flag once;
  Matrix op;
};

GroupElement::GroupElement(int n) : GroupElement(n, {}) {}

GroupElement::GroupElement(int n, std::vector<Generator> word)
    : n_(n), word_(std::move(word)), cache_(std::make_shared<Cache>()) {
  require_level(n);
  for (const auto& g : word_) {
    const TwoForm& f = g.root.form;
    if (f.i < 1 || f.j < 1 || f.i > n || f.j > n) throw std::out_of_range("root vector outside level");
    if (f.kind == TwoFormKind::EF && f.i == f.j) throw std::invalid_argument("e_i^f_i is not nilpotent");
    if (f.kind != TwoFormKind::EF && f.i >= f.j) throw std::invalid_argument("root vector needs i < j");
  }
}

namespace {

SpinVector apply_exponential(const SoElement& x, const Rational& t, const SpinVector& w) {
  SpinVector result = w;
  SpinVector term = w;
  const int bound = 2 * w.level() + 2;
  for (int k = 1; k <= bound; ++k) {
    term = rho_so(x, term);
    if (term.is_zero()) return result;
    term *= t / k;
    result += term;
  }
  throw std::logic_error("exponent did not act nilpotently");
}

}  // namespace

SpinVector GroupElement::apply(const SpinVector& x) const {
  check_same_level(n_, x.level());
  SpinVector y = x;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it)
    y = apply_exponential(it->root.to_so(n_), it->t, y);
  return y;
}

GroupElement GroupElement::inverse() const {
  std::vector<Generator> w(word_.rbegin(), word_.rend());
  for (auto& g : w) g.t = -g.t;
  return GroupElement(n_, std::move(w));
}

GroupElement GroupElement::compose(const GroupElement& other) const {
  check_same_level(n_, other.n_);
  std::vector<Generator> w = word_;
  w.insert(w.end(), other.word_.begin(), other.word_.end());
  return GroupElement(n_, std::move(w));
}

GroupElement GroupElement::lifted(int m) const {
  if (m < n_) throw std::invalid_argument("can only lift to a larger level");
  return GroupElement(m, word_);
}

const Matrix& GroupElement::op() const {
  std::call_once(cache_->once, [this] {
    cache_->op = operator_matrix(n_, [this](const SpinVector& w) { return apply(w); });
  });
  return cache_->op;
}

Matrix GroupElement::so_image() const {
  const std::size_t dim = static_cast<std::size_t>(2 * n_);
  Matrix g = Matrix::identity(dim);
  for (const auto& gen : word_) {
    const Matrix x = so_matrix(gen.root.to_so(n_));
    Matrix e = Matrix::identity(dim);
    Matrix term = Matrix::identity(dim);
    for (int k = 1; k <= 2 * n_ + 1; ++k) {
      term = (gen.t / k) * (term * x);
      if (term.is_zero()) break;
      e = e + term;
    }
    g = g * e;
  }
  return g;
}

std::string GroupElement::to_string() const {
  if (word_.empty()) return "id";
  std::string s;
  for (const auto& g : word_) {
    if (!s.empty()) s += " ";
    s += "exp(" + g.t.get_str() + "*" + g.root.to_string() + ")";
  }
  return s;
}

GroupElement exp_nilpotent(const SoElement& x, const Rational& t) {
  if (x.terms().size() != 1) throw std::invalid_argument("exp_nilpotent needs a single root vector");
  const auto& [form, c] = *x.terms().begin();
  if (form.kind == TwoFormKind::EF && form.i == form.j)
    throw std::invalid_argument("e_i^f_i is not nilpotent");
  std::vector<Generator> word;
  if (sgn(t) != 0) word.push_back({RootVector{form}, c * t});
  return GroupElement(x.level(), std::move(word));
}

GroupElement random_group_element(int n, std::uint64_t seed, int length) {
  if (length < 1) throw std::invalid_argument("group word length must be >= 1");
  const auto roots = root_vectors(n);
  if (roots.empty()) throw std::invalid_argument("no root vectors at level < 2");
  static const int params[] = {-2, -1, 1, 2};
  std::mt19937_64 rng(seed);
  std::vector<Generator> word;
  word.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) {
    const auto& root = roots[rng() % roots.size()];
    const int t = params[rng() % 4];
    word.push_back({root, Rational(t)});
  }
  return GroupElement(n, std::move(word));
}

}  // namespace halfspin
