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

#include <string>
#include <vector>

#include "checks.hpp"
#include "halfspin/linalg.hpp"
#include "halfspin/so_algebra.hpp"
#include "halfspin/transfer.hpp"

namespace halfspin::suites {

namespace {

std::vector<SoElement> basis_two_forms(int n) {
  std::vector<SoElement> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i < j) {
        out.push_back(SoElement::ee(n, i, j));
        out.push_back(SoElement::ff(n, i, j));
      }
      out.push_back(SoElement::ef(n, i, j));
    }
  return out;
}

}  // namespace

Rational Sampler::rational() {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return make_rational(num(rng_), den(rng_));
}

Rational Sampler::nonzero_rational() {
  Rational r;
  do r = rational();
  while (sgn(r) == 0);
  return r;
}

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

SpinVector Sampler::spin(int n, Parity parity) {
  SpinVector x(n);
  while (x.is_zero())
    for (Mask m : parity_basis(n, parity)) x.add_term(m, rational());
  return x;
}

VectorInV Sampler::vector(int n) {
  VectorInV v(n);
  for (int i = 1; i <= n; ++i) {
    v.e(i) = rational();
    v.f(i) = rational();
  }
  return v;
}

Outcome clifford_unit_orbit(int n, const CheckContext&) {
  if (n > 4) return skip("exact rank of the 4^n square map is limited to n <= 4");
  const std::size_t dim = std::size_t{1} << (2 * n);
  Matrix m(dim, dim);
  for (Mask e = 0; e <= full_mask(n); ++e)
    for (Mask f = 0; f <= full_mask(n); ++f) {
      const auto w = act_on_exterior(CliffordElement::monomial(n, {e, f}), ExteriorVector::unit(n));
      const std::size_t col = (static_cast<std::size_t>(f) << n) | e;
      for (const auto& [sym, c] : w.terms()) m(sym, col) = c;
    }
  const std::size_t r = rank(m);
  if (r != dim) return fail("rank " + std::to_string(r) + " of " + std::to_string(dim));
  return pass();
}

Outcome clifford_vector_square(int n, const CheckContext& ctx) {
  Sampler rng(ctx.seed);
  for (int t = 0; t < ctx.samples; ++t) {
    VectorInV v = rng.vector(n);
    // Every third vector lies in E and every third in a mixed isotropic line.
    if (t % 3 == 0)
      for (int i = 1; i <= n; ++i) v.f(i) = 0;
    if (t % 3 == 1) {
      v = VectorInV(n);
      const int i = rng.uniform(1, n);
      v.e(i) = rng.nonzero_rational();
      if (n > 1) v.f(i % n + 1) = rng.nonzero_rational();
    }
    const auto x = CliffordElement::from_vector(v);
    if (mul(x, x) != CliffordElement::scalar(n, quadratic(v))) return fail(v.to_string());
  }
  return pass();
}

Outcome spinrep_highest_weights(int n, const CheckContext&) {
  const SpinVector w0 = SpinVector::omega0(n), w1 = SpinVector::omega1(n);
  for (int i = 1; i <= n; ++i)
    if (rho_so(SoElement::ef(n, i, i), w0) != make_rational(1, 2) * w0)
      return fail(SoElement::ef(n, i, i).to_string() + " on omega0");
  for (int i = 1; i <= n; ++i) {
    const SpinVector h0 = rho_so(chevalley_h(n, i), w0);
    if (i < n ? !h0.is_zero() : h0 != w0) return fail("h" + std::to_string(i) + " on omega0");
  }
  if (rho_so(chevalley_h(n, n - 1), w1) != w1) return fail("h" + std::to_string(n - 1) + " on omega1");
  if (!rho_so(chevalley_h(n, n), w1).is_zero()) return fail("h" + std::to_string(n) + " on omega1");
  return pass();
}

Outcome spinrep_brackets(int n, const CheckContext& ctx) {
  const auto forms = basis_two_forms(n);
  std::vector<Matrix> mats;
  mats.reserve(forms.size());
  for (const auto& x : forms) mats.push_back(rho_matrix(x));
  auto check = [&](std::size_t a, std::size_t b) {
    return rho_matrix(bracket(forms[a], forms[b])) == mats[a] * mats[b] - mats[b] * mats[a];
  };
  auto witness = [&](std::size_t a, std::size_t b) {
    return "[" + forms[a].to_string() + ", " + forms[b].to_string() + "]";
  };
  if (n <= 4) {
    for (std::size_t a = 0; a < forms.size(); ++a)
      for (std::size_t b = 0; b < forms.size(); ++b)
        if (!check(a, b)) return fail(witness(a, b));
    return pass();
  }
  Sampler rng(ctx.seed);
  const int last = static_cast<int>(forms.size()) - 1;
  for (int t = 0; t < ctx.samples; ++t) {
    const auto a = static_cast<std::size_t>(rng.uniform(0, last));
    const auto b = static_cast<std::size_t>(rng.uniform(0, last));
    if (!check(a, b)) return fail(witness(a, b));
  }
  return pass();
}

Outcome spinrep_twist(int n, const CheckContext& ctx) {
  Sampler rng(ctx.seed);
  for (int t = 0; t < ctx.samples; ++t) {
    SoElement a(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) a += SoElement::ef(n, i, j, rng.rational());
    if (!gl_twist_residual(a).is_zero()) return fail(a.to_string());
  }
  return pass();
}

Outcome transfer_pi_tau(int n, const CheckContext&) {
  for (Mask m : parity_basis(n - 1, Parity::Mixed)) {
    const SpinVector x = SpinVector::basis(n - 1, m);
    if (pi_last(tau_last(x)) != x) return fail(x.to_string());
  }
  return pass();
}

Outcome transfer_equivariance(int n, const CheckContext& ctx) {
  Sampler rng(ctx.seed);
  for (const auto& root : root_vectors(n - 1)) {
    const Rational t = rng.nonzero_rational();
    const GroupElement small = exp_nilpotent(root.to_so(n - 1), t);
    const GroupElement big = small.lifted(n);
    for (Mask m : parity_basis(n, Parity::Mixed)) {
      const SpinVector x = SpinVector::basis(n, m);
      if (pi_last(big.apply(x)) != small.apply(pi_last(x))) return fail("contraction, " + small.to_string());
    }
    for (Mask m : parity_basis(n - 1, Parity::Mixed)) {
      const SpinVector x = SpinVector::basis(n - 1, m);
      if (tau_last(small.apply(x)) != big.apply(tau_last(x))) return fail("inclusion, " + small.to_string());
    }
  }
  return pass();
}

Outcome transfer_beta_gram(int n, const CheckContext&) {
  const Matrix g = beta_gram(n);
  const std::size_t dim = g.rows();
  if (rank(g) != dim) return fail("degenerate Gram matrix");
  const bool symmetric = n % 4 == 0 || n % 4 == 1;
  if (g.transpose() != (symmetric ? g : Rational(-1) * g))
    return fail(symmetric ? "expected symmetric" : "expected skew");
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      const bool same = popcount(static_cast<Mask>(a)) % 2 == popcount(static_cast<Mask>(b)) % 2;
      if (same != (n % 2 == 0) && sgn(g(a, b)) != 0)
        return fail("pairing " + subset_name(static_cast<Mask>(a)) + " with " + subset_name(static_cast<Mask>(b)));
    }
  return pass();
}

Outcome transfer_psidual(int n, const CheckContext& ctx) {
  if (n <= 4) {
    for (Mask a : parity_basis(n - 1, Parity::Mixed))
      for (Mask x : parity_basis(n, Parity::Mixed))
        if (psidual_residual(SpinVector::basis(n - 1, a), SpinVector::basis(n, x)) != 0)
          return fail("a=" + subset_name(a) + " x=" + subset_name(x));
    return pass();
  }
  Sampler rng(ctx.seed);
  for (int t = 0; t < ctx.samples; ++t) {
    const SpinVector a = rng.spin(n - 1, Parity::Mixed);
    const SpinVector x = rng.spin(n, Parity::Mixed);
    if (psidual_residual(a, x) != 0) return fail("a=" + a.to_string() + " x=" + x.to_string());
  }
  return pass();
}

}  // namespace halfspin::suites
