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

#include "oracles.hpp"

#include <stdexcept>

namespace halfspin::testing {

namespace {

// Strict order of the normal form: e_1 < … < e_n < f_1 < … < f_n.
int rank_of(Symbol s, int n) { return s.letter == Letter::E ? s.index : n + s.index; }

Rational pairing(Symbol a, Symbol b) {
  return (a.letter != b.letter && a.index == b.index) ? Rational(1) : Rational(0);
}

}  // namespace

CliffordElement bubble_normal_form(int n, const std::vector<Symbol>& word, Sweep sweep) {
  std::map<std::vector<Symbol>, Rational, bool (*)(const std::vector<Symbol>&, const std::vector<Symbol>&)>
      pending([](const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i].letter != b[i].letter) return a[i].letter < b[i].letter;
          if (a[i].index != b[i].index) return a[i].index < b[i].index;
        }
        return false;
      });
  pending[word] = 1;
  CliffordElement done(n);
  while (!pending.empty()) {
    auto it = pending.begin();
    const std::vector<Symbol> w = it->first;
    const Rational c = it->second;
    pending.erase(it);
    if (sgn(c) == 0) continue;
    // Locate an adjacent pair that is not strictly increasing.
    std::ptrdiff_t pos = -1;
    const std::ptrdiff_t len = static_cast<std::ptrdiff_t>(w.size());
    if (sweep == Sweep::LeftToRight) {
      for (std::ptrdiff_t i = 0; i + 1 < len && pos < 0; ++i)
        if (rank_of(w[i], n) >= rank_of(w[i + 1], n)) pos = i;
    } else {
      for (std::ptrdiff_t i = len - 2; i >= 0 && pos < 0; --i)
        if (rank_of(w[i], n) >= rank_of(w[i + 1], n)) pos = i;
    }
    if (pos < 0) {
      CliffordMonomial m;
      for (const Symbol& s : w) (s.letter == Letter::E ? m.e : m.f) |= bit(s.index);
      done.add_term(m, c);
      continue;
    }
    const Symbol a = w[static_cast<std::size_t>(pos)];
    const Symbol b = w[static_cast<std::size_t>(pos) + 1];
    if (a == b) continue;  // basis vectors are isotropic
    std::vector<Symbol> swapped = w;
    std::swap(swapped[static_cast<std::size_t>(pos)], swapped[static_cast<std::size_t>(pos) + 1]);
    pending[swapped] -= c;
    const Rational two_pair = 2 * pairing(a, b);
    if (sgn(two_pair) != 0) {
      std::vector<Symbol> shorter;
      for (std::ptrdiff_t i = 0; i < len; ++i)
        if (i != pos && i != pos + 1) shorter.push_back(w[static_cast<std::size_t>(i)]);
      pending[shorter] += two_pair * c;
    }
  }
  return done;
}

Rational pfaffian(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n % 2) return 0;
  Rational total = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (sgn(a(0, j)) == 0) continue;
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < n; ++k)
      if (k != j) rest.push_back(k);
    const Rational minor = pfaffian(a.submatrix(rest, rest));
    const Rational term = a(0, j) * minor;
    if (j % 2 == 1) total += term;
    else total -= term;
  }
  return total;
}

Rational small_rational(std::mt19937_64& rng) {
  static const int nums[] = {-3, -2, -1, 1, 2, 3};
  static const int dens[] = {1, 1, 1, 2, 3};
  return make_rational(nums[rng() % 6], dens[rng() % 5]);
}

std::vector<Symbol> random_word(int n, std::size_t length, std::mt19937_64& rng) {
  std::vector<Symbol> w;
  for (std::size_t i = 0; i < length; ++i) {
    const int idx = static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1;
    w.push_back(rng() % 2 ? e_sym(idx) : f_sym(idx));
  }
  return w;
}

CliffordElement random_clifford(int n, std::size_t terms, std::mt19937_64& rng) {
  CliffordElement a(n);
  for (std::size_t t = 0; t < terms; ++t) {
    const CliffordMonomial m{static_cast<Mask>(rng() & full_mask(n)), static_cast<Mask>(rng() & full_mask(n))};
    a.add_term(m, small_rational(rng));
  }
  return a;
}

SpinVector random_spin(int n, Parity parity, std::mt19937_64& rng, int density_percent) {
  SpinVector x(n);
  for (Mask m : parity_basis(n, parity))
    if (static_cast<int>(rng() % 100) < density_percent) x.add_term(m, small_rational(rng));
  if (x.is_zero()) x.add_term(parity_basis(n, parity).front(), 1);
  return x;
}

VectorInV random_vector(int n, std::mt19937_64& rng) {
  VectorInV v(n);
  for (int i = 1; i <= n; ++i) {
    v.e(i) = small_rational(rng);
    v.f(i) = small_rational(rng);
  }
  return v;
}

}  // namespace halfspin::testing
