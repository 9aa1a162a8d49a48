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

#include "halfspin/lowering.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "halfspin/ideal.hpp"

namespace halfspin {

namespace {

using Combination = std::map<std::size_t, Polynomial>;

Parity parity_of_size(int k) { return (k & 1) ? Parity::Odd : Parity::Even; }

void require_limit(const Polynomial& p, const char* who) {
  if (!p.is_limit()) throw std::invalid_argument(std::string(who) + ": expected a limit-level polynomial");
}

Polynomial one(Parity parity) { return Polynomial::constant(kLimitLevel, parity, 1); }

Polynomial var(Mask complement, Parity parity) {
  Polynomial v(kLimitLevel, parity);
  v.add_term({complement}, 1);
  return v;
}

void add_to(Combination& acc, std::size_t i, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Combination scaled(const Combination& c, const Polynomial& by) {
  Combination out;
  for (const auto& [i, p] : c) add_to(out, i, by * p);
  return out;
}

std::string window_error(Mask complement, int n) {
  return "variable " + variable_name(kLimitLevel, complement) + " does not fit the window 1.." +
         std::to_string(n);
}

// c and r̃ with element = c·e_J·q^d + r̃, when the element has that shape.
struct Shape {
  bool ok = false;
  Rational c;
  Polynomial remainder;
};

Shape read_shape(const Polynomial& element, Mask target, const Polynomial& q, int d) {
  Shape out{false, 0, Polynomial(kLimitLevel, element.parity())};
  const Polynomial qd = pow(q, d);
  const Polynomial coeff = partial(element, target);
  if (qd.is_zero() || coeff.is_zero()) return out;
  const auto& [m0, v0] = *qd.terms().begin();
  out.c = coeff.coefficient(m0) / v0;
  if (sgn(out.c) == 0 || !(coeff == out.c * qd)) return out;
  out.remainder = element - out.c * (var(target, element.parity()) * qd);
  const int m = popcount(target);
  for (Mask v : out.remainder.variables())
    if (popcount(v) >= m) return out;
  out.ok = true;
  return out;
}

}  // namespace

Polynomial act_on_variable(const SoElement& x, Mask complement) {
  const int n = x.level();
  if (complement & ~full_mask(n)) throw std::out_of_range(window_error(complement, n));
  const SpinVector image = rho_so(x, SpinVector::basis(n, full_mask(n) & ~complement));
  Polynomial out(kLimitLevel, parity_of_size(popcount(complement)));
  for (const auto& [m, c] : image.terms()) out.add_term({full_mask(n) & ~m}, c);
  return out;
}

Polynomial derivation(const SoElement& x, const Polynomial& p) {
  require_limit(p, "derivation");
  const int n = x.level();
  for (Mask v : p.variables())
    if (v & ~full_mask(n)) throw std::out_of_range(window_error(v, n));
  std::map<Mask, Polynomial> images;
  Polynomial out(kLimitLevel, p.parity());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      auto it = images.find(m[k]);
      if (it == images.end()) it = images.emplace(m[k], act_on_variable(x, m[k])).first;
      if (it->second.is_zero()) continue;
      Monomial rest(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(k));
      rest.insert(rest.end(), m.begin() + static_cast<std::ptrdiff_t>(k) + 1, m.end());
      Polynomial cofactor(kLimitLevel, p.parity());
      cofactor.add_term(std::move(rest), c);
      out += cofactor * it->second;
    }
  }
  return out;
}

Polynomial derivation_ff(int i, int j, const Polynomial& p, int truncation) {
  if (!(1 <= i && i < j)) throw std::invalid_argument("derivation_ff needs 1 <= i < j");
  if (j > truncation)
    throw std::out_of_range("derivation_ff: f_" + std::to_string(j) + " outside the window 1.." +
                            std::to_string(truncation));
  return derivation(SoElement::ff(truncation, i, j), p);
}

Rational ff_scalar(int i, int j, Mask complement, int truncation) {
  const Polynomial image = act_on_variable(SoElement::ff(truncation, i, j), complement);
  return image.coefficient({complement | bit(i) | bit(j)});
}

int lowering_truncation(const Polynomial& p) {
  int n = std::max(p.max_key_size() + 2, p.max_index());
  return n + (n & 1);
}

LoweringTrace degree_lowering_trace(const Polynomial& p, int truncation) {
  require_limit(p, "degree_lowering_trace");
  if (p.is_zero()) throw std::invalid_argument("degree_lowering_trace: p = 0");
  const auto d = p.homogeneous_degree();
  if (!d) throw std::invalid_argument("degree_lowering_trace: p is not homogeneous");
  if (*d == 0) throw std::invalid_argument("degree_lowering_trace: p is a nonzero constant");

  LoweringTrace t;
  t.p = p;
  t.truncation = truncation;
  bool first = true;
  for (Mask v : p.variables())  // ascending, so ties keep the lowest mask
    if (first || popcount(v) > t.k) {
      t.pivot = v;
      t.k = popcount(v);
      first = false;
    }
  const int n = truncation;
  if (n % 2 != 0) throw std::invalid_argument("degree_lowering_trace: truncation must be even");
  if (n < t.k + 2)
    throw std::invalid_argument("degree_lowering_trace: truncation " + std::to_string(n) +
                                " below k + 2 = " + std::to_string(t.k + 2));
  if (p.max_index() > n) throw std::out_of_range("degree_lowering_trace: variables outside the window");

  const auto remaining = indices_of(full_mask(n) & ~t.pivot);
  Mask chain = t.pivot;
  Polynomial cur = p;
  t.sign = 1;
  for (std::size_t s = 0; s + 1 < remaining.size(); s += 2) {
    const int i1 = remaining[s];
    const int i2 = remaining[s + 1];
    const Rational scalar = ff_scalar(i1, i2, chain, n);
    cur = derivation_ff(i1, i2, cur, n);
    chain |= bit(i1) | bit(i2);
    t.sign *= scalar;
    t.steps.push_back({i1, i2, scalar, cur});
  }

  t.q = partial(p, t.pivot);
  const Mask top = full_mask(n);
  t.residual = t.last() - t.sign * (var(top, p.parity()) * t.q);
  bool exact = !t.residual.contains_variable(top) && sgn(t.sign) != 0;
  for (Mask v : t.residual.variables()) exact = exact && popcount(v) < n;
  const auto dq = t.q.homogeneous_degree();
  exact = exact && dq && *dq == *d - 1;
  t.decomposition_exact = exact;
  return t;
}

SolvingElement produce_solving_element(const LoweringTrace& trace, Mask target, int truncation) {
  if (!trace.decomposition_exact) throw std::invalid_argument("produce_solving_element: trace incomplete");
  const int n = trace.truncation;
  const int m = popcount(target);
  const Parity parity = trace.p.parity();
  if (m < n) throw std::invalid_argument("produce_solving_element: |J^c| below the truncation of the trace");
  if (parity_of_size(m) != parity) throw std::invalid_argument("produce_solving_element: J has the wrong parity");
  if (truncation < m || (target & ~full_mask(truncation)))
    throw std::out_of_range("produce_solving_element: J outside the window 1.." + std::to_string(truncation));

  SolvingElement e;
  e.target = target;
  e.truncation = truncation;
  e.records.push_back({std::nullopt, SoElement(truncation), trace.p});
  for (const auto& step : trace.steps)
    e.records.push_back({e.records.size() - 1, SoElement::ff(n, step.i1, step.i2), step.result});

  for (int a = n + 1; a < m; a += 2) {
    const SoElement lift = SoElement::ff(truncation, a, a + 1);
    Polynomial v = derivation(lift, e.records.back().value);
    e.records.push_back({e.records.size() - 1, lift, std::move(v)});
  }

  Combination comb;
  comb.emplace(e.records.size() - 1, one(parity));
  Polynomial current = e.records.back().value;
  int d = 1;

  const Mask start = full_mask(m);
  const auto leaving = indices_of(start & ~target);
  const auto arriving = indices_of(target & ~start);
  for (std::size_t s = 0; s < leaving.size(); ++s) {
    const SoElement move = SoElement::ef(truncation, leaving[s], arriving[s]);
    // E(Σ c_i G_i) = Σ E(c_i) G_i + c_i E(G_i); every E(G_i) becomes a new record.
    Combination moved;
    for (const auto& [i, c] : comb) {
      add_to(moved, i, derivation(move, c));
      Polynomial image = derivation(move, e.records[i].value);
      if (image.is_zero()) continue;
      e.records.push_back({i, move, std::move(image)});
      add_to(moved, e.records.size() - 1, c);
    }
    const Polynomial moved_value = derivation(move, current);
    const Polynomial eq = derivation(move, trace.q);
    if (eq.is_zero()) {
      current = moved_value;
      comb = std::move(moved);
      continue;
    }
    const Polynomial dq = Rational(d) * eq;
    current = trace.q * moved_value - dq * current;
    Combination next = scaled(moved, trace.q);
    for (const auto& [i, c] : scaled(comb, dq)) add_to(next, i, Rational(-1) * c);
    comb = std::move(next);
    ++d;
  }

  e.q_power = d;
  e.element = std::move(current);
  e.cofactors.assign(e.records.size(), Polynomial(kLimitLevel, parity));
  for (const auto& [i, c] : comb) e.cofactors[i] = c;
  const Shape shape = read_shape(e.element, target, trace.q, d);
  e.shape_ok = shape.ok;
  e.coefficient = shape.c;
  e.remainder = shape.remainder;
  return e;
}

SolvingAudit audit_solving_element(const LoweringTrace& trace, const SolvingElement& e) {
  SolvingAudit a;
  const Parity parity = trace.p.parity();
  a.replay_ok = !e.records.empty() && !e.records.front().parent && e.records.front().value == trace.p;
  for (std::size_t i = 1; a.replay_ok && i < e.records.size(); ++i) {
    const auto& r = e.records[i];
    a.replay_ok = r.parent && *r.parent < i && derivation(r.action, e.records[*r.parent].value) == r.value;
  }

  Polynomial sum(kLimitLevel, parity);
  std::vector<Polynomial> gens;
  std::vector<std::vector<Monomial>> multipliers;
  for (std::size_t i = 0; i < e.records.size() && i < e.cofactors.size(); ++i) {
    sum += e.cofactors[i] * e.records[i].value;
    gens.push_back(e.records[i].value);
    std::vector<Monomial> support;
    for (const auto& [m, c] : e.cofactors[i].terms()) support.push_back(m);
    multipliers.push_back(std::move(support));
  }
  a.combination_ok = e.cofactors.size() == e.records.size() && sum == e.element;
  a.membership_ok = ideal_membership(e.element, gens, multipliers).member;

  const Shape shape = read_shape(e.element, e.target, trace.q, e.q_power);
  a.shape_ok = shape.ok && shape.c == e.coefficient && shape.remainder == e.remainder;
  return a;
}

namespace {

// e_L·q^d − s = Σ cof_i·G_i over the assembler's generators.
struct Relation {
  int d = 0;
  Polynomial s;
  Combination cof;
};

class Assembler {
 public:
  Assembler(const LoweringTrace& trace, int truncation)
      : trace_(trace), truncation_(truncation), parity_(trace.p.parity()) {}

  const Relation& solve(Mask target) {
    if (auto it = memo_.find(target); it != memo_.end()) return it->second;
    const SolvingElement e = produce_solving_element(trace_, target, truncation_);
    if (!e.shape_ok) throw std::logic_error("solving element for " + variable_name(kLimitLevel, target) + " lost its shape");
    const std::size_t gi = generators_.size();
    targets_.push_back(target);
    generators_.push_back(e.element);

    const int n = trace_.truncation;
    std::map<Mask, Relation> high;
    for (Mask v : e.remainder.variables())
      if (popcount(v) >= n) high.emplace(v, solve(v));

    int big_d = 0;
    for (const auto& [m, c] : e.remainder.terms()) {
      int sum = 0;
      for (Mask v : m)
        if (auto it = high.find(v); it != high.end()) sum += it->second.d;
      big_d = std::max(big_d, sum);
    }

    const Polynomial& q = trace_.q;
    Polynomial t(kLimitLevel, parity_);
    Combination tele;
    for (const auto& [m, c] : e.remainder.terms()) {
      Polynomial low = Polynomial::constant(kLimitLevel, parity_, c);
      std::vector<Mask> xs;
      int sum = 0;
      for (Mask v : m) {
        if (auto it = high.find(v); it != high.end()) {
          xs.push_back(v);
          sum += it->second.d;
        } else {
          low = low * var(v, parity_);
        }
      }
      const Polynomial base = low * pow(q, big_d - sum);
      Polynomial ys = one(parity_);
      for (Mask v : xs) ys = ys * high.at(v).s;
      t += base * ys;
      // Π x − Π y = Σ_k (x_k − y_k)·Π_{i<k} y_i·Π_{i>k} x_i with x = e_L q^{d_L}, y = s_L.
      for (std::size_t k = 0; k < xs.size(); ++k) {
        Polynomial factor = base;
        for (std::size_t i = 0; i < k; ++i) factor = factor * high.at(xs[i]).s;
        for (std::size_t i = k + 1; i < xs.size(); ++i)
          factor = factor * var(xs[i], parity_) * pow(q, high.at(xs[i]).d);
        for (const auto& [g, cof] : high.at(xs[k]).cof) add_to(tele, g, factor * cof);
      }
    }

    const Rational inv = 1 / e.coefficient;
    Relation r;
    r.d = e.q_power + big_d;
    r.s = (-inv) * t;
    add_to(r.cof, gi, inv * pow(q, big_d));
    for (const auto& [g, cof] : tele) add_to(r.cof, g, (-inv) * cof);
    return memo_.emplace(target, std::move(r)).first->second;
  }

  LocalizedSolution finish(Mask target) {
    const Relation& r = solve(target);
    LocalizedSolution out{target, truncation_, r.d, r.s, targets_, generators_, {}};
    out.cofactors.assign(generators_.size(), Polynomial(kLimitLevel, parity_));
    for (const auto& [g, cof] : r.cof) out.cofactors[g] = cof;
    return out;
  }

 private:
  const LoweringTrace& trace_;
  int truncation_;
  Parity parity_;
  std::vector<Mask> targets_;
  std::vector<Polynomial> generators_;
  std::map<Mask, Relation> memo_;
};

}  // namespace

LocalizedSolution assemble_solution(const LoweringTrace& trace, Mask target, int truncation) {
  Assembler assembler(trace, truncation);
  return assembler.finish(target);
}

SolutionAudit audit_solution(const LoweringTrace& trace, const LocalizedSolution& sol) {
  SolutionAudit a;
  const Parity parity = trace.p.parity();
  const int n = trace.truncation;
  a.filtration_ok = true;
  for (Mask v : sol.s.variables()) a.filtration_ok = a.filtration_ok && popcount(v) <= n - 2;

  a.generators_ok = sol.generators.size() == sol.generator_targets.size();
  for (std::size_t i = 0; a.generators_ok && i < sol.generators.size(); ++i) {
    const SolvingElement e = produce_solving_element(trace, sol.generator_targets[i], sol.truncation);
    a.generators_ok = e.element == sol.generators[i] && audit_solving_element(trace, e).ok();
  }

  const Polynomial lhs = var(sol.target, parity) * pow(trace.q, sol.q_power) - sol.s;
  Polynomial sum(kLimitLevel, parity);
  std::vector<std::vector<Monomial>> multipliers;
  for (std::size_t i = 0; i < sol.generators.size() && i < sol.cofactors.size(); ++i) {
    sum += sol.cofactors[i] * sol.generators[i];
    std::vector<Monomial> support;
    for (const auto& [m, c] : sol.cofactors[i].terms()) support.push_back(m);
    multipliers.push_back(std::move(support));
  }
  a.combination_ok = sol.cofactors.size() == sol.generators.size() && sum == lhs;
  a.membership_ok = ideal_membership(lhs, sol.generators, multipliers).member;
  return a;
}

Rational gamma_pairing(const SpinVector& omega, const SpinVector& omega_prime) {
  if (omega.level() != omega_prime.level()) throw std::invalid_argument("gamma_pairing: different windows");
  const Mask all = full_mask(omega.level());
  Rational total = 0;
  for (const auto& [s, a] : omega.terms()) {
    auto it = omega_prime.terms().find(all & ~s);
    if (it == omega_prime.terms().end()) continue;
    // Sign of sorting the concatenation S, T: one transposition per pair s > t.
    int inversions = 0;
    for (int i : indices_of(s)) inversions += count_below(it->first, i);
    total += parity_sign(inversions) * a * it->second;
  }
  return total;
}

}  // namespace halfspin
