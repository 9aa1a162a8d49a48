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

#include <functional>
#include <ostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "halfspin/rational.hpp"
#include "halfspin/spin_rep.hpp"

namespace halfspin {

// Level tag for polynomials on the direct limit. Their variables e_I are stored by the
// finite complement C = ℕ∖I, so |C| is the filtration degree.
inline constexpr int kLimitLevel = -1;

// Sorted multiset of variable keys; a repeated key is a power.
using Monomial = std::vector<Mask>;

Monomial monomial_product(const Monomial& a, const Monomial& b);

// Sparse polynomial over ℚ in half-spin coordinates. At finite level n the variable x[S]
// reads the coefficient of e_S; at the limit level the key is the complement.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() : Polynomial(0, Parity::Even) {}  // zero at level 0
  Polynomial(int level, Parity parity);
  static Polynomial constant(int level, Parity parity, const Rational& c);
  static Polynomial variable(int level, Mask key, const Rational& c = 1);

  int level() const { return level_; }
  bool is_limit() const { return level_ == kLimitLevel; }
  Parity parity() const { return parity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  void add_term(Monomial m, const Rational& c);

  // Total degree of every term when they agree; the zero polynomial has none.
  std::optional<int> homogeneous_degree() const;
  int degree() const;
  std::set<Mask> variables() const;
  bool contains_variable(Mask key) const;
  // Largest |key|; for limit polynomials this is the largest filtration degree present.
  int max_key_size() const;
  // Largest index occurring in any key, 0 if none.
  int max_index() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // "c*x[1,2]*x[3,4]^2 + ..." with limit keys written x[~1,2].
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void check_key(Mask key) const;
  int level_;
  Parity parity_;
  Terms terms_;
};

Polynomial pow(const Polynomial& p, int e);
Polynomial partial(const Polynomial& p, Mask key);

// Replaces every variable by the given polynomial; all images share one level and parity.
Polynomial substitute(const Polynomial& p, const std::function<Polynomial(Mask)>& image,
                      int level, Parity parity);

// Restriction of p to the variables accepted by keep (other variables set to zero).
Polynomial restrict_to(const Polynomial& p, const std::function<bool(Mask)>& keep);

// Degree-d part.
Polynomial homogeneous_part(const Polynomial& p, int d);

std::string variable_name(int level, Mask key);

// Exact evaluation at a point of the same level; x must not have terms of the other parity.
Rational eval_poly(const Polynomial& p, const SpinVector& x);

// The direct-limit image of a level-n polynomial: x[S] becomes x[~({1..n}∖S)].
Polynomial to_limit(const Polynomial& p);

// All degree-d monomials in the given variables (deduplicated), lexicographic.
std::vector<Monomial> monomials_of_degree(std::vector<Mask> variables, int d);

}  // namespace halfspin
