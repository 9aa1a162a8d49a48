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

#include <algorithm>
#include <string>

#include "checks.hpp"
#include "halfspin/cartan.hpp"
#include "halfspin/grassmann.hpp"
#include "halfspin/ideal.hpp"

namespace halfspin::suites {

namespace {

// S_H is one-dimensional, spanned by ω_H, and ω_H recovers H.
Outcome check_line(const IsotropicSubspace& h) {
  const SpinVector w = omega_of(h);
  const Matrix s = spinors_annihilated_by(h);
  if (s.rows() != 1) return fail("dim S_H = " + std::to_string(s.rows()) + " for " + h.canonical().to_string());
  const SpinVector line = SpinVector::from_dense(h.level(), s.row(0));
  if (w.coefficient(line.terms().begin()->first) * line != w) return fail("omega not in S_H for " + h.canonical().to_string());
  if (!same_row_space(annihilator(w), h.rows())) return fail("round trip lost " + h.canonical().to_string());
  return pass();
}

Outcome check_pluecker(const IsotropicSubspace& h) {
  const int k = adapted_basis(h).k;
  if (nu2(omega_of(h)) != power_of_two(h.level() - k) * pluecker(h)) return fail(h.canonical().to_string());
  return pass();
}

// Inputs live at level n: full bases up to n = 3, dense parity-pure samples above.
template <class Residual>
Outcome check_diagram(int n, int samples, std::uint64_t seed, Residual residual) {
  if (n <= 3) {
    for (Parity p : {Parity::Even, Parity::Odd})
      for (Mask m : parity_basis(n, p)) {
        const SpinVector x = SpinVector::basis(n, m);
        if (!residual(x).is_zero()) return fail(x.to_string());
      }
    return pass();
  }
  Sampler rng(seed);
  for (int t = 0; t < samples; ++t) {
    const SpinVector x = rng.spin(n, t % 2 ? Parity::Odd : Parity::Even);
    if (!residual(x).is_zero()) return fail(x.to_string());
  }
  return pass();
}

}  // namespace

Outcome cone_coordinate_lines(int n, const CheckContext&) {
  for (const auto& h : coordinate_subspaces(n))
    if (auto o = check_line(h); o.status != Status::Pass) return o;
  return pass();
}

Outcome cone_random_lines(int n, const CheckContext& ctx) {
  for (int t = 0; t < ctx.samples; ++t)
    if (auto o = check_line(random_maximal_isotropic(n, mix_seed(ctx.seed, static_cast<std::uint64_t>(t))));
        o.status != Status::Pass)
      return o;
  return pass();
}

Outcome cone_orbit_samples(int n, const CheckContext& ctx) {
  for (int t = 0; t < ctx.samples; ++t) {
    const Parity p = t % 2 ? Parity::Odd : Parity::Even;
    const SpinVector x = sample_cone_point(n, mix_seed(ctx.seed, static_cast<std::uint64_t>(t)), p);
    if (is_pure(x).verdict != PurityVerdict::Pure) return fail(x.to_string());
  }
  return pass();
}

Outcome cartan_pluecker(int n, const CheckContext& ctx) {
  for (const auto& h : coordinate_subspaces(n))
    if (auto o = check_pluecker(h); o.status != Status::Pass) return o;
  for (int t = 0; t < ctx.samples; ++t)
    if (auto o = check_pluecker(random_maximal_isotropic(n, mix_seed(ctx.seed, static_cast<std::uint64_t>(t))));
        o.status != Status::Pass)
      return o;
  return pass();
}

Outcome check_cartan_diagram_pi(int n, int samples, std::uint64_t seed, const CartanContext& ctx) {
  return check_diagram(n, samples, seed, [&](const SpinVector& x) { return diagram_pi_residual(x, ctx); });
}

Outcome check_cartan_diagram_tau(int n, int samples, std::uint64_t seed, const CartanContext& ctx) {
  return check_diagram(n - 1, samples, seed, [&](const SpinVector& x) { return diagram_tau_residual(x, ctx); });
}

Outcome cartan_lower_factorization(int q, const CheckContext& ctx) {
  if (q < 4) return skip("the factorization needs q >= 4");
  // Each generic element costs seconds at q = 6.
  const int wanted = std::min(ctx.samples, 10);
  for (int n = 4; n <= q; ++n) {
    int generic = 0, attempts = 0;
    for (; generic < wanted && attempts < 4 * wanted; ++attempts) {
      const std::uint64_t s = mix_seed(ctx.seed, static_cast<std::uint64_t>(1000 * n + attempts));
      const GroupElement g = random_group_element(q, s, orbit_word_length(q));
      const LowerFactorization r = lower_factorization(q, n, 4, g);
      if (!r.generic) continue;
      ++generic;
      const std::string where = "(" + std::to_string(q) + "," + std::to_string(n) + ",4) " + g.to_string();
      if (!r.exterior_identity) return fail("exterior identity, " + where);
      if (!r.spin_identity) return fail("spin identity, " + where);
    }
    if (generic < wanted)
      return fail(std::to_string(generic) + " generic of " + std::to_string(attempts) + " at n=" + std::to_string(n));
  }
  return pass();
}

}  // namespace halfspin::suites
