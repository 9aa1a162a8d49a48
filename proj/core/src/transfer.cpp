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

#include "halfspin/transfer.hpp"

#include <stdexcept>

namespace halfspin {

LevelMap describe(LevelMapKind kind, int source_level) {
  switch (kind) {
    case LevelMapKind::Contraction: return {kind, source_level, source_level - 1, false};
    case LevelMapKind::Multiplication: return {kind, source_level, source_level + 1, false};
    case LevelMapKind::DualContraction: return {kind, source_level, source_level + 1, true};
  }
  throw std::invalid_argument("unknown level map");
}

SpinVector pi_last(const SpinVector& x) {
  const int n = x.level();
  if (n < 1) throw std::invalid_argument("pi_last needs n >= 1");
  SpinVector y(n - 1);
  for (const auto& [m, c] : x.terms())
    if (!contains(m, n)) y.add_term(m, c);
  return y;
}

SpinVector tau_last(const SpinVector& x) {
  SpinVector y(x.level() + 1);
  for (const auto& [m, c] : x.terms()) y.add_term(m, c);
  return y;
}

SpinVector psi_last(const SpinVector& x) {
  const int n = x.level() + 1;
  SpinVector y(n);
  for (const auto& [m, c] : x.terms()) y.add_term(m | bit(n), c);
  return y;
}

SpinVector pi_tower(const SpinVector& x, int m) {
  if (m > x.level() || m < 0) throw std::invalid_argument("pi_tower target level out of range");
  SpinVector y = x;
  while (y.level() > m) y = pi_last(y);
  return y;
}

SpinVector tau_tower(const SpinVector& x, int m) {
  if (m < x.level()) throw std::invalid_argument("tau_tower target level out of range");
  SpinVector y = x;
  while (y.level() < m) y = tau_last(y);
  return y;
}

GeneralContraction pi_general(const SpinVector& x, const VectorInV& e) {
  const int n = x.level();
  if (e.level() != n) throw std::invalid_argument("pi_general: level mismatch");
  if (sgn(quadratic(e)) != 0) throw std::invalid_argument("pi_general: e is not isotropic");
  if (!e.has_e_part()) throw std::invalid_argument("pi_general: e lies in F");
  HyperbolicFrame frame = frame_with_last(e);
  const CliffordElement ev = CliffordElement::from_vector(e);
  const Rational half(1, 2);

  CliffordElement y(n);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const CliffordElement xa = to_left_ideal(x.parity_part(p));
    if (xa.is_zero()) continue;
    const int exponent = p == Parity::Even ? n - 1 : n;
    CliffordElement left = mul(ev, xa);
    if (exponent % 2) left *= Rational(-1);
    y += half * (left + mul(xa, ev));
  }

  const CliffordElement in_frame = apply_isometry(frame.from_standard, y);
  const Mask fbar = full_mask(n - 1);
  SpinVector result(n - 1);
  for (const auto& [m, c] : in_frame.terms()) {
    if (m.f != fbar) throw std::logic_error("pi_general: image left the ideal generated by f-bar");
    if (contains(m.e, n)) continue;  // e maps to 0 in V_e
    result.add_term(m.e, c);
  }
  return {std::move(result), std::move(frame)};
}

VectorInV reduce_to_quotient(const HyperbolicFrame& frame, const VectorInV& v) {
  const int n = frame.n;
  const std::vector<Rational> c = frame.from_standard.apply(v.coords());
  if (sgn(c[static_cast<std::size_t>(2 * n - 1)]) != 0)
    throw std::invalid_argument("vector is not orthogonal to e");
  VectorInV out(n - 1);
  for (int i = 1; i < n; ++i) {
    out.e(i) = c[static_cast<std::size_t>(i - 1)];
    out.f(i) = c[static_cast<std::size_t>(n + i - 1)];
  }
  return out;
}

namespace {

Rational beta_clifford(const CliffordElement& xs_star, const CliffordElement& y) {
  const CliffordElement prod = mul(xs_star, y);
  return prod.coefficient({0, full_mask(y.level())});
}

}  // namespace

Rational beta(const SpinVector& x, const SpinVector& y) {
  if (x.level() != y.level()) throw std::invalid_argument("beta: level mismatch");
  return beta_clifford(star(to_left_ideal(x)), to_left_ideal(y));
}

Matrix beta_gram(int n) {
  if (n > kDenseLimit) throw std::invalid_argument("beta_gram is limited to n <= 6");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<CliffordElement> stars;
  std::vector<CliffordElement> plain;
  for (std::size_t m = 0; m < dim; ++m) {
    const CliffordElement b = to_left_ideal(SpinVector::basis(n, static_cast<Mask>(m)));
    stars.push_back(star(b));
    plain.push_back(b);
  }
  Matrix g(dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) g(a, b) = beta_clifford(stars[a], plain[b]);
  return g;
}

Rational psidual_residual(const SpinVector& a, const SpinVector& x) {
  const int n = x.level();
  if (a.level() != n - 1) throw std::invalid_argument("psidual_residual: a must live one level below x");
  const Rational scale = Rational(parity_sign(n - 1), 2);
  return beta(a, pi_last(x)) - scale * beta(psi_last(a), x);
}

}  // namespace halfspin
