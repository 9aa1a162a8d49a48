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
#include <optional>
#include <string>
#include <vector>

#include "checks.hpp"
#include "halfspin/grassmann.hpp"
#include "halfspin/ideal.hpp"
#include "halfspin/lowering.hpp"
#include "halfspin/transfer.hpp"

namespace halfspin::suites {

namespace {

// Homogeneous even limit polynomial whose variables leave room for lowering at truncation n.
Polynomial random_limit_poly(Sampler& rng, int degree, int n) {
  std::vector<Mask> vars;
  for (Mask c = 0; c <= full_mask(n); ++c)
    if (popcount(c) % 2 == 0 && popcount(c) <= n - 2) vars.push_back(c);
  const int terms = rng.uniform(2, 4);
  Polynomial p(kLimitLevel, Parity::Even);
  while (p.is_zero())
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      for (int k = 0; k < degree; ++k) m.push_back(vars[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(vars.size()) - 1))]);
      p.add_term(m, rng.nonzero_rational());
    }
  return p;
}

std::vector<Polynomial> lowering_inputs(int n, int count, std::uint64_t seed) {
  std::vector<Polynomial> out;
  if (n == 6) out.push_back(to_limit(i4_quadric()));
  Sampler rng(seed);
  while (static_cast<int>(out.size()) < count) out.push_back(random_limit_poly(rng, rng.uniform(2, 3), n));
  return out;
}

}  // namespace

Outcome ideal_level_four_quadric(int, const CheckContext& ctx) {
  const auto found = discover_vanishing_forms(4, Parity::Even, 2, ctx.seed);
  if (found.forms.size() != 1) return fail("degree-2 slice has dimension " + std::to_string(found.forms.size()));
  const Polynomial& q = found.forms.front();
  Sampler rng(ctx.seed);
  std::optional<Rational> ratio;
  int checked = 0;
  for (int attempt = 0; checked < ctx.samples && attempt < 4 * ctx.samples; ++attempt) {
    const SpinVector x = rng.spin(4, Parity::Even);
    const Rational b = beta(x, x), v = eval_poly(q, x);
    if (sgn(b) == 0) {
      if (sgn(v) != 0) return fail("quadric nonzero where beta vanishes: " + x.to_string());
      continue;
    }
    if (ratio && *ratio != v / b) return fail("ratio changes at " + x.to_string());
    ratio = v / b;
    ++checked;
  }
  if (!ratio || sgn(*ratio) == 0) return fail("no nonzero ratio observed");
  return pass();
}

Outcome ideal_membership_agreement(int n, const CheckContext& ctx) {
  // Enough members to exceed the quadric dimension (1, 10, 66 for n = 4, 5, 6).
  const std::size_t members = n == 6 ? 96 : 64;
  const PullbackFamily family = orbit_pullback_family(n, ctx.seed, members);
  const auto count = static_cast<std::size_t>(ctx.samples);
  for (const auto& x : cone_samples(n, Parity::Even, count, mix_seed(ctx.seed, 1))) {
    if (is_pure(x).verdict != PurityVerdict::Pure) return fail("sampler left the cone: " + x.to_string());
    const auto v = certify_membership(x, family);
    if (!v.passes) return fail("pure vector rejected by " + v.witness_word + ": " + x.to_string());
  }
  Sampler rng(mix_seed(ctx.seed, 2));
  for (std::size_t off = 0; off < count;) {
    const SpinVector x = rng.spin(n, Parity::Even);
    if (is_pure(x).verdict != PurityVerdict::NotPure) continue;
    ++off;
    if (certify_membership(x, family).passes) return fail("impure vector accepted: " + x.to_string());
  }
  return pass();
}

Outcome ideal_span_equality(int n, const CheckContext& ctx) {
  const PullbackFamily family = orbit_pullback_family(n, ctx.seed, 64);
  const auto found = discover_vanishing_forms(n, Parity::Even, 2, ctx.seed);
  std::vector<Polynomial> qs;
  for (const auto& m : family.members) qs.push_back(m.quadric);
  std::vector<Polynomial> all = qs;
  all.insert(all.end(), found.forms.begin(), found.forms.end());
  const auto monos = all_monomials(all);
  const std::size_t r = rank(coefficient_matrix(qs, monos));
  if (r != found.forms.size())
    return fail("pullback rank " + std::to_string(r) + ", vanishing dimension " + std::to_string(found.forms.size()));
  if (!same_row_space(coefficient_matrix(qs, monos), coefficient_matrix(found.forms, monos)))
    return fail("spans differ at equal dimension " + std::to_string(r));
  return pass();
}

Outcome lowering_traces(int n, const CheckContext& ctx) {
  if (n % 2) return skip("truncation must be even");
  for (const auto& p : lowering_inputs(n, ctx.samples, ctx.seed)) {
    const LoweringTrace t = degree_lowering_trace(p, n);
    if (!t.decomposition_exact) return fail("inexact decomposition of " + p.to_string());
    if (static_cast<int>(t.steps.size()) != (n - t.k) / 2) return fail("step count for " + p.to_string());
    if (t.q != partial(p, t.pivot)) return fail("q is not the pivot derivative for " + p.to_string());
    const Polynomial top = Polynomial::variable(kLimitLevel, full_mask(n));
    if (t.last() != t.sign * (top * t.q) + t.residual) return fail("decomposition mismatch for " + p.to_string());
    for (Mask v : t.residual.variables())
      if (popcount(v) >= n) return fail("residual reaches the top filtration for " + p.to_string());
  }
  return pass();
}

Outcome lowering_solving_elements(int n, const CheckContext& ctx) {
  if (n % 2) return skip("truncation must be even");
  // Solving elements live one window up, so keep the input count small.
  const int count = std::min(ctx.samples, 4);
  for (const auto& p : lowering_inputs(n, count, ctx.seed)) {
    const LoweringTrace t = degree_lowering_trace(p, n);
    const std::vector<Mask> targets = {
        full_mask(n),
        (full_mask(n) & ~bit(1)) | bit(n + 1),
        full_mask(n + 2),
    };
    for (Mask target : targets) {
      const SolvingElement e = produce_solving_element(t, target, n + 2);
      const std::string where = variable_name(kLimitLevel, target) + " from " + p.to_string();
      if (!e.shape_ok) return fail("shape, " + where);
      const SolvingAudit a = audit_solving_element(t, e);
      if (!a.ok()) return fail("audit, " + where);
      if (partial(e.element, target) != e.coefficient * pow(t.q, e.q_power)) return fail("leading term, " + where);
    }
  }
  return pass();
}

}  // namespace halfspin::suites
