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

#include "halfspin/ideal.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>

#include "halfspin/grassmann.hpp"
#include "halfspin/transfer.hpp"

namespace halfspin {

namespace {

Parity common_parity(const std::vector<SpinVector>& points) {
  std::optional<Parity> parity;
  for (const auto& x : points) {
    if (x.is_zero()) continue;
    const Parity p = x.parity();
    if (p == Parity::Mixed) throw std::invalid_argument("vanishing_forms: point of mixed parity");
    if (parity && *parity != p) throw std::invalid_argument("vanishing_forms: points of both parities");
    parity = p;
  }
  if (!parity) throw std::invalid_argument("vanishing_forms: every point is zero");
  return *parity;
}

Rational eval_monomial(const Monomial& m, const std::vector<Rational>& coords) {
  Rational v = 1;
  for (Mask k : m) {
    v *= coords[k];
    if (sgn(v) == 0) break;
  }
  return v;
}

std::size_t monomial_count(std::size_t variables, int d) {
  // C(variables + d − 1, d)
  Integer c = 1;
  for (int i = 0; i < d; ++i) {
    c *= static_cast<unsigned long>(variables + static_cast<std::size_t>(i));
    c /= static_cast<unsigned long>(i + 1);
  }
  return c.get_ui();
}

bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<Polynomial> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto monos = all_monomials(both);
  return same_row_space(coefficient_matrix(a, monos), coefficient_matrix(b, monos));
}

int level_of_size(std::size_t size) {
  if (size == 0 || !std::has_single_bit(size)) throw std::invalid_argument("matrix side is not a power of two");
  return std::countr_zero(size);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<SpinVector> cone_samples(int n, Parity parity, std::size_t count, std::uint64_t seed) {
  std::vector<SpinVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_cone_point(n, mix_seed(seed, i), parity));
  return out;
}

std::vector<Polynomial> vanishing_forms(const std::vector<SpinVector>& points, int d) {
  if (points.empty()) throw InsufficientPointsError(0, 1);
  if (d < 0) throw std::invalid_argument("vanishing_forms: negative degree");
  const int n = points.front().level();
  for (const auto& x : points)
    if (x.level() != n) throw std::invalid_argument("vanishing_forms: points at different levels");
  const Parity parity = common_parity(points);

  const auto monos = monomials_of_degree(parity_basis(n, parity), d);
  const std::size_t need = kPointsPerMonomial * monos.size();
  if (points.size() < need) throw InsufficientPointsError(points.size(), need);

  Matrix eval(points.size(), monos.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto coords = points[r].dense();
    for (std::size_t c = 0; c < monos.size(); ++c) eval(r, c) = eval_monomial(monos[c], coords);
  }
  const Matrix basis = nullspace(fraction_free_rref(eval));
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    Polynomial p(n, parity);
    for (std::size_t c = 0; c < monos.size(); ++c) p.add_term(monos[c], basis(r, c));
    out.push_back(std::move(p));
  }
  return out;
}

VanishingDiscovery discover_vanishing_forms(int n, Parity parity, int d, std::uint64_t seed,
                                            int max_rounds) {
  const std::size_t base = kPointsPerMonomial * monomial_count(parity_basis(n, parity).size(), d);
  for (int round = 0; round <= max_rounds; ++round) {
    const std::size_t count = base << round;
    auto a = vanishing_forms(cone_samples(n, parity, count, mix_seed(seed, 1)), d);
    auto b = vanishing_forms(cone_samples(n, parity, count, mix_seed(seed, 2)), d);
    if (same_span(a, b)) return {std::move(a), seed, count, round};
  }
  throw std::runtime_error("vanishing_forms did not become stationary at level " + std::to_string(n));
}

const Polynomial& i4_quadric() {
  static const Polynomial quadric = [] {
    auto found = discover_vanishing_forms(4, Parity::Even, 2, 4);
    if (found.forms.size() != 1)
      throw std::runtime_error("degree-2 slice at level 4 has dimension " +
                               std::to_string(found.forms.size()) + ", expected 1");
    Polynomial q = found.forms.front();
    // Consistency with the β-norm on a few fixed points.
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::optional<Rational> ratio;
    for (int t = 0; t < 20; ++t) {
      SpinVector x(4);
      for (Mask m : parity_basis(4, Parity::Even)) x.add_term(m, coord(rng));
      const Rational b = beta(x, x);
      const Rational v = eval_poly(q, x);
      if (sgn(b) == 0) {
        if (sgn(v) != 0) throw std::runtime_error("level-4 quadric is not a multiple of the β-norm");
        continue;
      }
      if (ratio && *ratio != v / b) throw std::runtime_error("level-4 quadric is not a multiple of the β-norm");
      ratio = v / b;
    }
    return q;
  }();
  return quadric;
}

Polynomial beta_norm_quadric(int n, Parity parity) {
  const Matrix gram = beta_gram(n);
  const auto basis = parity_basis(n, parity);
  Polynomial p(n, parity);
  for (Mask s : basis)
    for (Mask t : basis)
      if (sgn(gram(s, t)) != 0) p.add_term({s, t}, gram(s, t));
  return p;
}

Polynomial pullback(const Polynomial& p, const Matrix& L) {
  if (p.is_limit()) throw std::invalid_argument("pullback: limit polynomials have no linear maps");
  if (L.rows() != (std::size_t{1} << p.level()))
    throw std::invalid_argument("pullback: map has " + std::to_string(L.rows()) + " rows, level " +
                                std::to_string(p.level()) + " needs " +
                                std::to_string(std::size_t{1} << p.level()));
  const int n = level_of_size(L.cols());

  std::optional<Parity> source;
  for (Mask s : p.variables())
    for (std::size_t t = 0; t < L.cols(); ++t) {
      if (sgn(L(s, t)) == 0) continue;
      const Parity pt = (popcount(static_cast<Mask>(t)) & 1) ? Parity::Odd : Parity::Even;
      if (source && *source != pt) throw std::invalid_argument("pullback: map mixes parities");
      source = pt;
    }
  const Parity parity = source.value_or(p.parity());

  return substitute(
      p,
      [&](Mask s) {
        Polynomial form(n, parity);
        for (std::size_t t = 0; t < L.cols(); ++t)
          if (sgn(L(s, t)) != 0) form.add_term({static_cast<Mask>(t)}, L(s, t));
        return form;
      },
      n, parity);
}

Matrix pi_tower_matrix(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("pi_tower_matrix: target level out of range");
  Matrix out(std::size_t{1} << m, std::size_t{1} << n);
  for (std::size_t s = 0; s < out.rows(); ++s) out(s, s) = 1;
  return out;
}

PullbackFamily orbit_pullback_family(int n, std::uint64_t seed, std::size_t count) {
  if (n < 4) throw std::invalid_argument("orbit_pullback_family needs n >= 4");
  if (count == 0) throw std::invalid_argument("orbit_pullback_family needs count >= 1");
  std::vector<std::size_t> rows(std::size_t{1} << 4);
  for (std::size_t s = 0; s < rows.size(); ++s) rows[s] = s;
  std::vector<std::size_t> cols(std::size_t{1} << n);
  for (std::size_t t = 0; t < cols.size(); ++t) cols[t] = t;

  PullbackFamily family{n, seed, {}};
  family.members.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GroupElement g = i == 0 ? GroupElement(n) : random_group_element(n, mix_seed(seed, i), orbit_word_length(n));
    Matrix linear = g.op().submatrix(rows, cols);
    Polynomial quadric = pullback(i4_quadric(), linear);
    family.members.push_back({std::move(g), std::move(linear), std::move(quadric)});
  }
  return family;
}

std::vector<Monomial> all_monomials(const std::vector<Polynomial>& ps) {
  std::vector<Monomial> out;
  for (const auto& p : ps)
    for (const auto& [m, c] : p.terms()) out.push_back(m);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Matrix coefficient_matrix(const std::vector<Polynomial>& ps, const std::vector<Monomial>& monomials) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t c = 0; c < monomials.size(); ++c) index.emplace(monomials[c], c);
  Matrix out(ps.size(), monomials.size());
  for (std::size_t r = 0; r < ps.size(); ++r)
    for (const auto& [m, c] : ps[r].terms()) {
      auto it = index.find(m);
      if (it == index.end()) throw std::invalid_argument("coefficient_matrix: monomial missing from the list");
      out(r, it->second) = c;
    }
  return out;
}

std::size_t family_rank(const PullbackFamily& family) {
  std::vector<Polynomial> qs;
  for (const auto& m : family.members) qs.push_back(m.quadric);
  return rank(coefficient_matrix(qs, all_monomials(qs)));
}

MembershipVerdict certify_membership(const SpinVector& x, const PullbackFamily& family) {
  if (family.members.empty()) throw std::invalid_argument("certify_membership: empty family");
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& member = family.members[i];
    Rational v = eval_poly(member.quadric, x);
    if (sgn(v) != 0) return {false, i, member.g.to_string(), std::move(v)};
  }
  return {};
}

IdealCertificate ideal_membership(const Polynomial& target, const std::vector<Polynomial>& generators,
                                  const std::vector<std::vector<Monomial>>& multipliers) {
  if (multipliers.size() != generators.size())
    throw std::invalid_argument("ideal_membership: one multiplier list per generator");
  std::vector<Polynomial> products;
  std::vector<std::pair<std::size_t, Monomial>> origin;
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (const auto& mu : multipliers[i]) {
      Polynomial m(target.level(), target.parity());
      m.add_term(mu, 1);
      products.push_back(m * generators[i]);
      origin.emplace_back(i, mu);
    }
  std::vector<Polynomial> everything = products;
  everything.push_back(target);
  const auto monos = all_monomials(everything);
  const Matrix rows = coefficient_matrix(products, monos);
  const Matrix goal = coefficient_matrix({target}, monos);

  IdealCertificate cert;
  if (products.empty()) {
    cert.member = target.is_zero();
    cert.cofactors.assign(generators.size(), Polynomial(target.level(), target.parity()));
    return cert;
  }
  auto x = solve_left(rows, goal.row(0));
  if (!x) return cert;
  cert.member = true;
  cert.cofactors.assign(generators.size(), Polynomial(target.level(), target.parity()));
  for (std::size_t k = 0; k < x->size(); ++k) cert.cofactors[origin[k].first].add_term(origin[k].second, (*x)[k]);
  return cert;
}

}  // namespace halfspin
