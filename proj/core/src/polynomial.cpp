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

#include "halfspin/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace halfspin {

namespace {

Parity parity_of_size(int k) { return (k & 1) ? Parity::Odd : Parity::Even; }

void accumulate(Polynomial::Terms& terms, Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(std::move(m), c);
  if (inserted) {
    it->second.canonicalize();  // equality is structural
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.level() != b.level()) throw std::invalid_argument("polynomials live at different levels");
  if (a.parity() != b.parity()) throw std::invalid_argument("polynomials have different parities");
}

std::string index_list(Mask key) {
  std::string s;
  for (int i : indices_of(key)) {
    if (!s.empty()) s += ",";
    s += std::to_string(i);
  }
  return s;
}

}  // namespace

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Polynomial::Polynomial(int level, Parity parity) : level_(level), parity_(parity) {
  if (level != kLimitLevel) require_level(level);
  if (parity == Parity::Mixed) throw std::invalid_argument("polynomial parity must be even or odd");
}

Polynomial Polynomial::constant(int level, Parity parity, const Rational& c) {
  Polynomial p(level, parity);
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(int level, Mask key, const Rational& c) {
  Polynomial p(level, parity_of_size(popcount(key)));
  p.add_term({key}, c);
  return p;
}

void Polynomial::check_key(Mask key) const {
  if (parity_of_size(popcount(key)) != parity_)
    throw std::invalid_argument("variable " + variable_name(level_, key) + " has the wrong parity");
  if (level_ != kLimitLevel && (key & ~full_mask(level_)))
    throw std::out_of_range("variable " + variable_name(level_, key) + " outside level " +
                            std::to_string(level_));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(Monomial m, const Rational& c) {
  for (Mask k : m) check_key(k);
  std::sort(m.begin(), m.end());
  accumulate(terms_, std::move(m), c);
}

std::optional<int> Polynomial::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    const int k = static_cast<int>(m.size());
    if (d && *d != k) return std::nullopt;
    d = k;
  }
  return d;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

std::set<Mask> Polynomial::variables() const {
  std::set<Mask> out;
  for (const auto& [m, c] : terms_) out.insert(m.begin(), m.end());
  return out;
}

bool Polynomial::contains_variable(Mask key) const {
  for (const auto& [m, c] : terms_)
    if (std::binary_search(m.begin(), m.end(), key)) return true;
  return false;
}

int Polynomial::max_key_size() const {
  int k = 0;
  for (Mask v : variables()) k = std::max(k, popcount(v));
  return k;
}

int Polynomial::max_index() const {
  Mask all = 0;
  for (Mask v : variables()) all |= v;
  return all == 0 ? 0 : 32 - std::countl_zero(all);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(*this, o);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(*this, o);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) {
    c *= s;
    c.canonicalize();
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  Polynomial out(a.level(), a.parity());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) accumulate(out.terms_, monomial_product(ma, mb), ca * cb);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str();
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      s += "*" + variable_name(level_, m[i]);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return s;
}

std::string variable_name(int level, Mask key) {
  return level == kLimitLevel ? "x[~" + index_list(key) + "]" : "x[" + index_list(key) + "]";
}

Polynomial pow(const Polynomial& p, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Polynomial out = Polynomial::constant(p.level(), p.parity(), 1);
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

Polynomial partial(const Polynomial& p, Mask key) {
  Polynomial out(p.level(), p.parity());
  for (const auto& [m, c] : p.terms()) {
    auto lo = std::lower_bound(m.begin(), m.end(), key);
    auto hi = std::upper_bound(lo, m.end(), key);
    if (lo == hi) continue;
    Monomial rest(m.begin(), lo);
    rest.insert(rest.end(), std::next(lo), m.end());
    out.add_term(std::move(rest), c * static_cast<long>(hi - lo));
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const std::function<Polynomial(Mask)>& image, int level,
                      Parity parity) {
  std::map<Mask, Polynomial> cache;
  auto img = [&](Mask k) -> const Polynomial& {
    auto it = cache.find(k);
    if (it == cache.end()) {
      Polynomial q = image(k);
      if (q.level() != level || q.parity() != parity)
        throw std::invalid_argument("substitution image has the wrong level or parity");
      it = cache.emplace(k, std::move(q)).first;
    }
    return it->second;
  };
  Polynomial out(level, parity);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(level, parity, c);
    for (Mask k : m) term = term * img(k);
    out += term;
  }
  return out;
}

Polynomial restrict_to(const Polynomial& p, const std::function<bool(Mask)>& keep) {
  Polynomial out(p.level(), p.parity());
  for (const auto& [m, c] : p.terms())
    if (std::all_of(m.begin(), m.end(), keep)) out.add_term(m, c);
  return out;
}

Polynomial homogeneous_part(const Polynomial& p, int d) {
  Polynomial out(p.level(), p.parity());
  for (const auto& [m, c] : p.terms())
    if (static_cast<int>(m.size()) == d) out.add_term(m, c);
  return out;
}

Rational eval_poly(const Polynomial& p, const SpinVector& x) {
  if (p.is_limit()) throw std::invalid_argument("eval_poly: limit polynomials have no points");
  if (x.level() != p.level())
    throw std::invalid_argument("eval_poly: point at level " + std::to_string(x.level()) +
                                ", polynomial at level " + std::to_string(p.level()));
  if (!x.is_zero() && x.parity() != p.parity())
    throw std::invalid_argument("eval_poly: point parity " + to_string(x.parity()) +
                                " does not match " + to_string(p.parity()));
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational v = c;
    for (Mask k : m) {
      v *= x.coefficient(k);
      if (sgn(v) == 0) break;
    }
    total += v;
  }
  return total;
}

Polynomial to_limit(const Polynomial& p) {
  if (p.is_limit()) return p;
  const int n = p.level();
  const Parity parity = (n & 1) ? (p.parity() == Parity::Even ? Parity::Odd : Parity::Even) : p.parity();
  Polynomial out(kLimitLevel, parity);
  for (const auto& [m, c] : p.terms()) {
    Monomial lm;
    lm.reserve(m.size());
    for (Mask k : m) lm.push_back(full_mask(n) & ~k);
    out.add_term(std::move(lm), c);
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(std::vector<Mask> variables, int d) {
  std::sort(variables.begin(), variables.end());
  variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < variables.size(); ++i) {
      cur.push_back(variables[i]);
      rec(i, left - 1);
      cur.pop_back();
    }
  };
  rec(0, d);
  return out;
}

}  // namespace halfspin
