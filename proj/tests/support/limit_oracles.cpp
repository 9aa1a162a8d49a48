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

#include "limit_oracles.hpp"

#include "oracles.hpp"

namespace halfspin::testing {

Rational oracle_ff(int i, int j, Mask complement) {
  if (contains(complement, i) || contains(complement, j)) return 0;
  int below = 0;
  for (int t = 1; t < i; ++t) below += contains(complement, t) ? 0 : 1;
  for (int t = 1; t < j; ++t) below += contains(complement, t) ? 0 : 1;
  return 2 * parity_sign(below);
}

Polynomial oracle_derivation(int i, int j, const Polynomial& p) {
  Polynomial out(kLimitLevel, p.parity());
  for (const auto& [m, c] : p.terms())
    for (std::size_t k = 0; k < m.size(); ++k) {
      const Rational s = oracle_ff(i, j, m[k]);
      if (sgn(s) == 0) continue;
      Monomial mm = m;
      mm[k] = m[k] | bit(i) | bit(j);
      Polynomial term(kLimitLevel, p.parity());
      term.add_term(mm, c * s);
      out += term;
    }
  return out;
}

Polynomial random_limit_poly(std::mt19937_64& rng, int degree, int window, int terms) {
  std::vector<Mask> vars;
  for (Mask c = 0; c <= full_mask(window); ++c)
    if (popcount(c) % 2 == 0 && popcount(c) <= window - 2) vars.push_back(c);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  Polynomial p(kLimitLevel, Parity::Even);
  while (p.is_zero())
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      for (int k = 0; k < degree; ++k) m.push_back(vars[pick(rng)]);
      p.add_term(m, small_rational(rng));
    }
  return p;
}

}  // namespace halfspin::testing
