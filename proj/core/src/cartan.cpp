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

#include "halfspin/cartan.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "halfspin/transfer.hpp"

namespace halfspin {

CartanContext CartanContext::standard(int n) {
  CartanContext c;
  c.n = n;
  c.contraction_even = parity_sign(n - 1);
  c.contraction_odd = parity_sign(n);
  c.multiplication_even = parity_sign(n - 1);
  c.multiplication_odd = parity_sign(n);
  return c;
}

int CartanContext::contraction_sign(Parity p) const {
  if (p == Parity::Mixed) throw std::invalid_argument("diagram residuals need a parity-pure vector");
  return p == Parity::Even ? contraction_even : contraction_odd;
}

int CartanContext::multiplication_sign(Parity p) const {
  if (p == Parity::Mixed) throw std::invalid_argument("diagram residuals need a parity-pure vector");
  return p == Parity::Even ? multiplication_even : multiplication_odd;
}

ExteriorVector nu2(const SpinVector& x) {
  const int n = x.level();
  CliffordElement a(n);
  for (const auto& [s, c] : x.terms()) a.add_term({s, 0}, c);
  ExteriorVector w = act_on_exterior(star(a), ExteriorVector::unit(n));
  w = act_on_exterior(CliffordElement::monomial(n, {0, full_mask(n)}), w);
  w = act_on_exterior(a, w);
  return w.degree_part(n);
}

namespace {

// Symbol bits of level n rewritten for level m, or nullopt if a symbol does not exist there.
std::optional<Mask> reindex(Mask symbols, int n, int m) {
  const Mask e = symbols & full_mask(n);
  const Mask f = symbols >> n;
  if (m < n && ((e | f) & ~full_mask(m)) != 0) return std::nullopt;
  return e | (f << m);
}

}  // namespace

ExteriorVector lower_exterior(const ExteriorVector& w) {
  const int n = w.level();
  if (n < 1) throw std::invalid_argument("cannot lower level 0");
  ExteriorVector out(n - 1);
  for (const auto& [m, c] : w.terms()) {
    const auto r = reindex(m, n, n - 1);
    if (!r) throw std::invalid_argument("term " + exterior_name(n, m) + " involves the last pair");
    out.add_term(*r, c);
  }
  return out;
}

ExteriorVector raise_exterior(const ExteriorVector& w, int m) {
  const int n = w.level();
  if (m < n) throw std::invalid_argument("raise_exterior target below source level");
  require_level(m);
  ExteriorVector out(m);
  for (const auto& [mask, c] : w.terms()) out.add_term(*reindex(mask, n, m), c);
  return out;
}

ExteriorVector contract_last(const ExteriorVector& w) {
  const int n = w.level();
  if (n < 1) throw std::invalid_argument("cannot contract at level 0");
  const ExteriorVector inner = inner_v(VectorInV::basis(n, e_sym(n)), w);
  ExteriorVector kept(n);
  for (const auto& [m, c] : inner.terms())
    if ((m & bit(n)) == 0) kept.add_term(m, c);
  return lower_exterior(kept);
}

ExteriorVector mult_last(const ExteriorVector& w) {
  const int n = w.level() + 1;
  return outer_v(VectorInV::basis(n, f_sym(n)), raise_exterior(w, n));
}

ExteriorVector contract_ce(const ExteriorVector& w, const HyperbolicFrame& frame) {
  if (frame.n != w.level()) throw std::invalid_argument("frame and vector levels differ");
  return contract_last(exterior_transform(frame.from_standard, w));
}

ExteriorContraction contract_ce(const ExteriorVector& w, const VectorInV& e) {
  if (!is_zero(quadratic(e))) throw std::invalid_argument("contraction vector is not isotropic");
  HyperbolicFrame frame = frame_with_last(e);
  ExteriorVector r = contract_ce(w, frame);
  return {std::move(r), std::move(frame)};
}

ExteriorVector mult_mh(const ExteriorVector& w, const HyperbolicFrame& frame) {
  if (frame.n != w.level() + 1) throw std::invalid_argument("frame and vector levels differ");
  return exterior_transform(frame.to_standard, mult_last(w));
}

ExteriorVector diagram_pi_residual(const SpinVector& x, const CartanContext& ctx) {
  const int s = ctx.contraction_sign(x.parity());
  return nu2(pi_last(x)) - Rational(s) * contract_last(nu2(x));
}

ExteriorVector diagram_pi_residual(const SpinVector& x) {
  return diagram_pi_residual(x, CartanContext::standard(x.level()));
}

ExteriorVector diagram_tau_residual(const SpinVector& x, const CartanContext& ctx) {
  const int s = ctx.multiplication_sign(x.parity());
  return nu2(tau_last(x)) - Rational(s) * mult_last(nu2(x));
}

ExteriorVector diagram_tau_residual(const SpinVector& x) {
  return diagram_tau_residual(x, CartanContext::standard(x.level() + 1));
}

namespace {

template <class Terms>
std::optional<Rational> terms_ratio(const Terms& a, const Terms& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return Rational(0);
  if (a.size() != b.size()) return std::nullopt;
  const auto& [key, coef] = *b.begin();
  const auto it = a.find(key);
  if (it == a.end()) return std::nullopt;
  const Rational lambda = it->second / coef;
  for (const auto& [k, c] : b) {
    const auto found = a.find(k);
    if (found == a.end() || found->second != lambda * c) return std::nullopt;
  }
  return lambda;
}

}  // namespace

std::optional<Rational> ratio(const ExteriorVector& a, const ExteriorVector& b) {
  return terms_ratio(a.terms(), b.terms());
}

std::optional<Rational> ratio(const SpinVector& a, const SpinVector& b) {
  return terms_ratio(a.terms(), b.terms());
}

InjectivityVerdict injectivity_witness(const SpinVector& x, const SpinVector& y) {
  if (x.is_zero() || y.is_zero()) throw std::invalid_argument("injectivity check needs nonzero inputs");
  const ExteriorVector nx = nu2(x), ny = nu2(y);
  InjectivityVerdict v;
  v.images_nonzero = !nx.is_zero() && !ny.is_zero();
  v.images_proportional = v.images_nonzero && ratio(nx, ny).has_value();
  v.inputs_proportional = ratio(x, y).has_value();
  return v;
}

Matrix wedge_annihilator(const ExteriorVector& w) {
  const int n = w.level();
  // Column c of the map v ↦ v∧ω is the wedge of the c-th basis vector with ω.
  std::vector<ExteriorVector> images;
  std::map<Mask, std::size_t> row_of;
  for (int c = 0; c < 2 * n; ++c) {
    const Symbol s = c < n ? e_sym(c + 1) : f_sym(c - n + 1);
    images.push_back(outer_v(VectorInV::basis(n, s), w));
    for (const auto& [m, coef] : images.back().terms()) row_of.emplace(m, 0);
  }
  std::size_t r = 0;
  for (auto& [m, idx] : row_of) idx = r++;
  Matrix a(row_of.size(), static_cast<std::size_t>(2 * n));
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& [m, coef] : images[c].terms()) a(row_of.at(m), c) = coef;
  return nullspace(a);
}

bool is_pure_wedge(const ExteriorVector& w) {
  const auto d = w.degree();
  if (!d) return false;
  return wedge_annihilator(w).rows() == static_cast<std::size_t>(*d);
}

Matrix spin_intertwiner(const Matrix& g, int n) {
  if (!is_isometry(g, n)) throw std::invalid_argument("spin_intertwiner needs an isometry");
  Matrix gf(0, static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i)
    gf.append_row(matrix_column(g, n, static_cast<std::size_t>(n + i - 1)).coords());
  const std::size_t dim = std::size_t{1} << n;
  std::vector<SpinVector> image(dim, SpinVector(n));
  image[0] = omega_of(check_isotropic(n, gf));
  for (Mask a = 1; a < dim; ++a) {
    const int low = std::countr_zero(a) + 1;
    const VectorInV ge = matrix_column(g, n, static_cast<std::size_t>(low - 1));
    image[a] = vector_action(ge, image[a & (a - 1)]);
  }
  Matrix s(dim, dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (const auto& [m, coef] : image[c].terms()) s(m, c) = coef;
  return s;
}

namespace {

// Embeds an isometry of V_l into V_n acting on the first l hyperbolic pairs.
Matrix embed_isometry(const Matrix& g, int l, int n) {
  Matrix out = Matrix::identity(static_cast<std::size_t>(2 * n));
  auto idx = [&](std::size_t c, int level) {
    return c < static_cast<std::size_t>(level) ? c : c - level + n;
  };
  for (std::size_t r = 0; r < static_cast<std::size_t>(2 * l); ++r)
    for (std::size_t c = 0; c < static_cast<std::size_t>(2 * l); ++c) out(idx(r, l), idx(c, l)) = g(r, c);
  return out;
}

}  // namespace

HyperbolicFrame frame_with_last_span(int n, const Matrix& u) {
  const std::size_t m = u.rows();
  if (m > static_cast<std::size_t>(n)) throw std::invalid_argument("too many rows for an isotropic span");
  if (m > 0) check_isotropic(n, u);
  Matrix total = Matrix::identity(static_cast<std::size_t>(2 * n));
  std::vector<VectorInV> current;
  for (std::size_t r = 0; r < m; ++r) current.emplace_back(n, u.row(r));
  int level = n;
  while (!current.empty()) {
    const HyperbolicFrame step = frame_with_last(current.back());
    current.pop_back();
    total = total * embed_isometry(step.to_standard, level, n);
    for (auto& v : current) v = reduce_to_quotient(step, v);
    --level;
  }
  return make_frame(n, total);
}

namespace {

struct IntegerMatrix {
  std::vector<std::vector<Integer>> entries;
  Integer scale;  // original = entries / scale
};

IntegerMatrix to_integer(const Matrix& a) {
  Integer d = 1;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Integer& den = a(r, c).get_den();
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
  IntegerMatrix out{std::vector<std::vector<Integer>>(a.rows(), std::vector<Integer>(a.cols())), d};
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Rational v = a(r, c) * Rational(d);
      out.entries[r][c] = v.get_num();
    }
  return out;
}

// det of the submatrix of a on the coordinates named by two symbol masks.
Rational minor(const IntegerMatrix& a, Mask rows, Mask cols) {
  const auto ri = indices_of(rows), ci = indices_of(cols);
  std::vector<std::vector<Integer>> sub(ri.size(), std::vector<Integer>(ci.size()));
  for (std::size_t r = 0; r < ri.size(); ++r)
    for (std::size_t c = 0; c < ci.size(); ++c)
      sub[r][c] = a.entries[static_cast<std::size_t>(ri[r] - 1)][static_cast<std::size_t>(ci[c] - 1)];
  Integer scale_power;
  mpz_pow_ui(scale_power.get_mpz_t(), a.scale.get_mpz_t(), ri.size());
  return Rational(integer_determinant(std::move(sub))) / Rational(scale_power);
}

std::vector<Mask> subsets_of_size(int bits, int k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << bits); ++m)
    if (popcount(m) == k) out.push_back(m);
  return out;
}

// Mask at level `to` of the f_{from_low..from_high} symbols.
Mask f_block(int level, int lo, int hi) {
  Mask m = 0;
  for (int j = lo; j <= hi; ++j) m |= bit(level + j);
  return m;
}

// Sign s with (c_{e_{low+1}}∘⋯∘c_{e_top})(basis of m ∪ f-block) = s·basis(m) at level low.
Rational contraction_sign(Mask m, int low, int top) {
  const Mask big = *reindex(m, low, top) | f_block(top, low + 1, top);
  ExteriorVector w = ExteriorVector::basis(top, big);
  for (int l = top; l > low; --l) w = contract_last(w);
  return w.coefficient(m);
}

// Rows of the matrix ∧V_{low} ← ∧V_{top} of c_{E} ∘ (∧a) restricted to the given inputs.
Matrix contracted_power(const IntegerMatrix& a, const std::vector<Mask>& outputs,
                        const std::vector<Mask>& inputs, int low, int top, const std::vector<Rational>& input_signs) {
  Matrix out(outputs.size(), inputs.size());
  for (std::size_t r = 0; r < outputs.size(); ++r) {
    const Mask big = *reindex(outputs[r], low, top) | f_block(top, low + 1, top);
    const Rational s = contraction_sign(outputs[r], low, top);
    for (std::size_t c = 0; c < inputs.size(); ++c) {
      if (is_zero(input_signs[c])) continue;
      out(r, c) = s * input_signs[c] * minor(a, big, inputs[c]);
    }
  }
  return out;
}

// Scalar λ with a = λ·b, checked entrywise.
std::optional<Rational> matrix_ratio(const Matrix& a, const Matrix& b) {
  std::optional<Rational> lambda;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Rational& x = a(r, c);
      const Rational& y = b(r, c);
      if (is_zero(y)) {
        if (!is_zero(x)) return std::nullopt;
        continue;
      }
      if (!lambda) lambda = x / y;
      else if (x != *lambda * y) return std::nullopt;
    }
  return lambda;
}

Matrix standard_rows(int n, const std::vector<Symbol>& syms) {
  Matrix m(0, static_cast<std::size_t>(2 * n));
  for (const auto& s : syms) m.append_row(VectorInV::basis(n, s).coords());
  return m;
}

}  // namespace

LowerFactorization lower_factorization(int q, int n, int n0, const GroupElement& elem) {
  if (!(q >= n && n >= n0)) throw std::invalid_argument("lower_factorization needs q ≥ n ≥ n0");
  if (n0 < 4) throw std::invalid_argument("lower_factorization supports n0 ≥ 4 only");
  if (elem.level() != q) throw std::invalid_argument("group element must live at level q");
  if (q > kDenseLimit) throw std::invalid_argument("lower_factorization is dense; q ≤ 6");

  LowerFactorization out;
  out.q = q;
  out.n = n;
  out.n0 = n0;
  out.g = elem.so_image();
  const Matrix& g = out.g;
  const Matrix ginv = *inverse(g);

  // E'' = g^{-1}E with E = <e_{n0+1..q}>.
  Matrix e2(0, static_cast<std::size_t>(2 * q));
  for (int i = n0 + 1; i <= q; ++i)
    e2.append_row(apply_matrix(ginv, VectorInV::basis(q, e_sym(i))).coords());
  std::vector<Symbol> vnf;
  for (int i = 1; i <= n; ++i) vnf.push_back(e_sym(i));
  for (int i = 1; i <= q; ++i) vnf.push_back(f_sym(i));
  const Matrix meet = intersect_row_spaces(e2, standard_rows(q, vnf));
  // Pairings of F = <f_{n+1..q}> against E''.
  Matrix pair(static_cast<std::size_t>(q - n), e2.rows());
  for (int j = n + 1; j <= q; ++j)
    for (std::size_t r = 0; r < e2.rows(); ++r)
      pair(static_cast<std::size_t>(j - n - 1), r) =
          bilinear(VectorInV::basis(q, f_sym(j)), VectorInV(q, e2.row(r)));
  if (meet.rows() != static_cast<std::size_t>(n - n0)) {
    out.genericity_report = "E''∩(V_n⊕F) has dimension " + std::to_string(meet.rows()) +
                            ", expected " + std::to_string(n - n0);
    return out;
  }
  if (rank(pair) != static_cast<std::size_t>(q - n)) {
    out.genericity_report = "(E'')^⊥ meets F nontrivially";
    return out;
  }
  out.generic = true;

  // Ẽ: projection of the intersection to V_n, dropping f_{n+1..q}.
  Matrix tilde(0, static_cast<std::size_t>(2 * n));
  for (std::size_t r = 0; r < meet.rows(); ++r) {
    const VectorInV v(q, meet.row(r));
    VectorInV p(n);
    for (int i = 1; i <= n; ++i) {
      p.e(i) = v.e(i);
      p.f(i) = v.f(i);
    }
    tilde.append_row(p.coords());
  }
  HyperbolicFrame frame = frame_with_last_span(n, tilde);
  Matrix to_std = frame.to_standard;
  if (sgn(determinant(to_std)) < 0) {
    // Swapping e_1 and f_1 fixes E' and flips the determinant.
    Matrix swap = Matrix::identity(static_cast<std::size_t>(2 * n));
    swap(0, 0) = 0;
    swap(static_cast<std::size_t>(n), static_cast<std::size_t>(n)) = 0;
    swap(0, static_cast<std::size_t>(n)) = 1;
    swap(static_cast<std::size_t>(n), 0) = 1;
    to_std = to_std * swap;
  }
  out.g_prime = *inverse(to_std);

  // g'' = ḡ∘h_2∘h_1^{-1}∘(ḡ')^{-1}, one basis vector of V_{n0} at a time.
  out.g_double_prime = Matrix(static_cast<std::size_t>(2 * n0), static_cast<std::size_t>(2 * n0));
  for (std::size_t c = 0; c < static_cast<std::size_t>(2 * n0); ++c) {
    VectorInV w(n);
    if (c < static_cast<std::size_t>(n0)) w.e(static_cast<int>(c) + 1) = 1;
    else w.f(static_cast<int>(c) - n0 + 1) = 1;
    const VectorInV u = apply_matrix(to_std, w);
    VectorInV y(q);
    for (int i = 1; i <= n; ++i) {
      y.e(i) = u.e(i);
      y.f(i) = u.f(i);
    }
    if (q > n) {
      std::vector<Rational> rhs(e2.rows());
      for (std::size_t r = 0; r < e2.rows(); ++r) rhs[r] = -bilinear(y, VectorInV(q, e2.row(r)));
      const auto x = solve_left(pair, rhs);
      if (!x) throw std::logic_error("lift into (E'')^⊥ failed although g is generic");
      for (int j = n + 1; j <= q; ++j) y.f(j) += (*x)[static_cast<std::size_t>(j - n - 1)];
    }
    const VectorInV z = apply_matrix(g, y);
    for (int i = n0 + 1; i <= q; ++i)
      if (!is_zero(z.f(i))) throw std::logic_error("image left E^⊥");
    for (int i = 1; i <= n0; ++i) {
      out.g_double_prime(static_cast<std::size_t>(i - 1), c) = z.e(i);
      out.g_double_prime(static_cast<std::size_t>(n0 + i - 1), c) = z.f(i);
    }
  }
  if (!is_isometry(out.g_double_prime, n0)) throw std::logic_error("assembled g'' is not an isometry");
  out.det_g_double_prime = determinant(out.g_double_prime);

  // Exterior side on every basis monomial of ∧^n V_n.
  const std::vector<Mask> inputs = subsets_of_size(2 * n, n);
  const std::vector<Mask> outputs = subsets_of_size(2 * n0, n0);
  std::vector<Mask> lifted_inputs;
  std::vector<Rational> input_signs;
  for (Mask x : inputs) {
    ExteriorVector w = ExteriorVector::basis(n, x);
    for (int l = n; l < q; ++l) w = mult_last(w);
    const auto& [mask, coef] = *w.terms().begin();
    lifted_inputs.push_back(mask);
    input_signs.push_back(coef);
  }
  const Matrix lhs = contracted_power(to_integer(g), outputs, lifted_inputs, n0, q, input_signs);
  const std::vector<Rational> ones(inputs.size(), Rational(1));
  const Matrix first = contracted_power(to_integer(out.g_prime), outputs, inputs, n0, n, ones);
  const IntegerMatrix gpp = to_integer(out.g_double_prime);
  Matrix outer_power(outputs.size(), outputs.size());
  for (std::size_t r = 0; r < outputs.size(); ++r)
    for (std::size_t c = 0; c < outputs.size(); ++c) outer_power(r, c) = minor(gpp, outputs[r], outputs[c]);
  const Matrix rhs = outer_power * first;
  if (const auto lambda = matrix_ratio(lhs, rhs); lambda && !is_zero(*lambda)) {
    out.exterior_identity = true;
    out.exterior_scalar = *lambda;
  }

  // Spin side on the even basis of level n.
  const Matrix s1 = spin_intertwiner(out.g_prime, n);
  const Matrix s2 = spin_intertwiner(out.g_double_prime, n0);
  std::optional<Rational> mu;
  bool ok = true;
  for (Mask m : parity_basis(n, Parity::Even)) {
    const SpinVector x = SpinVector::basis(n, m);
    const SpinVector left = pi_tower(elem.apply(tau_tower(x, q)), n0);
    const SpinVector mid = pi_tower(SpinVector::from_dense(n, s1.apply(x.dense())), n0);
    const SpinVector right = SpinVector::from_dense(n0, s2.apply(mid.dense()));
    if (right.is_zero()) {
      ok = ok && left.is_zero();
      continue;
    }
    const auto r = ratio(left, right);
    if (!r || (mu && *r != *mu)) {
      ok = false;
      break;
    }
    mu = *r;
  }
  if (ok && mu && !is_zero(*mu)) {
    out.spin_identity = true;
    out.spin_scalar = *mu;
  }
  return out;
}

}  // namespace halfspin
