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

#include "halfspin/grassmann.hpp"

#include <set>
#include <stdexcept>

namespace halfspin {

namespace {

VectorInV row_vector(const Matrix& m, int n, std::size_t r) { return VectorInV(n, m.row(r)); }

Matrix gram(const std::vector<VectorInV>& vs) {
  Matrix g(vs.size(), vs.size());
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = 0; b < vs.size(); ++b) g(a, b) = bilinear(vs[a], vs[b]);
  return g;
}

// Swap e_i <-> f_i; an isometry of V_n.
Matrix swap_matrix(int n) {
  const std::size_t dim = static_cast<std::size_t>(2 * n);
  Matrix s(dim, dim);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    s(i + static_cast<std::size_t>(n), i) = 1;
    s(i, i + static_cast<std::size_t>(n)) = 1;
  }
  return s;
}

Matrix columns_matrix(const std::vector<VectorInV>& cols) {
  const int n = cols.front().level();
  Matrix m(static_cast<std::size_t>(2 * n), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = cols[c].coords()[r];
  return m;
}

}  // namespace

std::vector<VectorInV> IsotropicSubspace::vectors() const {
  std::vector<VectorInV> out;
  for (std::size_t r = 0; r < rows_.rows(); ++r) out.push_back(row_vector(rows_, n_, r));
  return out;
}

bool IsotropicSubspace::contains(const VectorInV& v) const {
  Matrix m = rows_;
  m.append_row(v.coords());
  return rank(m) == dim();
}

IsotropicSubspace check_isotropic(int n, const Matrix& rows) {
  require_level(n);
  if (rows.cols() != static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("subspace rows must have 2n coordinates");
  std::vector<VectorInV> vs;
  for (std::size_t r = 0; r < rows.rows(); ++r) vs.push_back(row_vector(rows, n, r));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a; b < vs.size(); ++b) {
      Rational p = bilinear(vs[a], vs[b]);
      if (sgn(p) != 0) throw NotIsotropicError(a, b, p);
    }
  if (rank(rows) != rows.rows()) throw std::domain_error("subspace rows are linearly dependent");
  return IsotropicSubspace(n, rows);
}

IsotropicSubspace span_of(const std::vector<VectorInV>& vs) {
  if (vs.empty()) throw std::invalid_argument("span_of needs at least one vector");
  const int n = vs.front().level();
  Matrix m(0, static_cast<std::size_t>(2 * n));
  for (const auto& v : vs) m.append_row(v.coords());
  return check_isotropic(n, row_space(m));
}

bool is_hyperbolic_basis(const std::vector<VectorInV>& e, const std::vector<VectorInV>& f) {
  if (e.size() != f.size()) return false;
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = 0; b < e.size(); ++b) {
      if (sgn(bilinear(e[a], e[b])) != 0 || sgn(bilinear(f[a], f[b])) != 0) return false;
      if (bilinear(e[a], f[b]) != (a == b ? 1 : 0)) return false;
    }
  return true;
}

AdaptedBasis adapted_basis(const IsotropicSubspace& h) {
  if (!h.is_maximal()) throw std::invalid_argument("adapted_basis needs a maximal isotropic subspace");
  const int n = h.level();
  const std::size_t un = static_cast<std::size_t>(n);
  const Echelon ech = rref(h.rows());

  AdaptedBasis out;
  out.n = n;
  std::vector<VectorInV> complement_rows;
  std::set<int> f_pivots;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    VectorInV v = row_vector(ech.reduced, n, r);
    if (ech.pivots[r] < un) {
      complement_rows.push_back(std::move(v));
    } else {
      f_pivots.insert(static_cast<int>(ech.pivots[r] - un) + 1);
      out.f.push_back(std::move(v));  // rows with an F pivot lie in H∩F
    }
  }
  out.k = static_cast<int>(out.f.size());

  std::vector<int> free_f;
  for (int j = 1; j <= n; ++j)
    if (!f_pivots.count(j)) free_f.push_back(j);
  for (int j : free_f) out.f.push_back(VectorInV::basis(n, f_sym(j)));

  // e'_{k+1..n}: combinations of the complement rows dual to the standard f_j, j free.
  const std::size_t m = free_f.size();
  std::vector<VectorInV> e_high;
  if (m > 0) {
    Matrix pair(m, m);
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t c = 0; c < m; ++c) pair(l, c) = complement_rows[l].e(free_f[c]);
    const auto inv = inverse(pair);
    if (!inv) throw std::logic_error("adapted_basis: complement pairing is singular");
    // Want Σ_r X[l][r] pair[r][c] = δ_lc, so X = pair^{-1}.
    for (std::size_t l = 0; l < m; ++l) {
      VectorInV v(n);
      for (std::size_t r = 0; r < m; ++r) v = v + (*inv)(l, r) * complement_rows[r];
      e_high.push_back(std::move(v));
    }
  }

  // E-dual basis of f'_1..f'_n, corrected to be orthogonal to e'_{k+1..n}.
  Matrix fm(un, un);
  for (std::size_t a = 0; a < un; ++a)
    for (int j = 1; j <= n; ++j) fm(a, static_cast<std::size_t>(j - 1)) = out.f[a].f(j);
  const auto finv = inverse(fm);
  if (!finv) throw std::logic_error("adapted_basis: f' does not span F");
  for (std::size_t a = 0; a < static_cast<std::size_t>(out.k); ++a) {
    VectorInV v(n);
    for (int j = 1; j <= n; ++j) v.e(j) = (*finv)(static_cast<std::size_t>(j - 1), a);
    VectorInV corrected = v;
    for (std::size_t l = 0; l < m; ++l)
      corrected = corrected - bilinear(v, e_high[l]) * out.f[static_cast<std::size_t>(out.k) + l];
    out.e.push_back(std::move(corrected));
  }
  for (auto& v : e_high) out.e.push_back(std::move(v));

  // Normalize so that the Clifford product f'_1⋯f'_n is exactly f_1⋯f_n.
  const Rational c = determinant(fm);
  out.f[un - 1] = (1 / c) * out.f[un - 1];
  out.e[un - 1] = c * out.e[un - 1];
  return out;
}

SpinVector omega_of(const IsotropicSubspace& h) {
  const AdaptedBasis b = adapted_basis(h);
  SpinVector x = SpinVector::unit(b.n);
  for (int i = b.n; i > b.k; --i) x = vector_action(b.e[static_cast<std::size_t>(i - 1)], x);
  return x;
}

ExteriorVector pluecker(const IsotropicSubspace& h) {
  const AdaptedBasis b = adapted_basis(h);
  std::vector<VectorInV> vs(b.e.begin() + b.k, b.e.end());
  vs.insert(vs.end(), b.f.begin(), b.f.begin() + b.k);
  return wedge_of_vectors(vs);
}

Matrix spinors_annihilated_by(const IsotropicSubspace& h) {
  const int n = h.level();
  Matrix stacked(0, std::size_t{1} << n);
  for (const auto& v : h.vectors()) {
    const Matrix m = operator_matrix(n, [&](const SpinVector& x) { return vector_action(v, x); });
    for (std::size_t r = 0; r < m.rows(); ++r) stacked.append_row(m.row(r));
  }
  return nullspace(stacked);
}

Matrix annihilator(const SpinVector& x) {
  if (x.is_zero()) throw std::invalid_argument("annihilator of the zero vector");
  const int n = x.level();
  const std::size_t dim = static_cast<std::size_t>(2 * n);
  std::vector<SpinVector> images;
  std::map<Mask, std::size_t> row_of;
  for (std::size_t c = 0; c < dim; ++c) {
    const Symbol s = c < static_cast<std::size_t>(n) ? e_sym(static_cast<int>(c) + 1)
                                                     : f_sym(static_cast<int>(c) - n + 1);
    images.push_back(vector_action(VectorInV::basis(n, s), x));
    for (const auto& [m, coef] : images.back().terms()) row_of.try_emplace(m, 0);
  }
  std::size_t next = 0;
  for (auto& [m, r] : row_of) r = next++;
  Matrix a(row_of.size(), dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (const auto& [m, coef] : images[c].terms()) a(row_of[m], c) = coef;
  Matrix kernel = nullspace(a);
  std::vector<VectorInV> vs;
  for (std::size_t r = 0; r < kernel.rows(); ++r) vs.push_back(row_vector(kernel, n, r));
  if (!gram(vs).is_zero()) throw std::logic_error("annihilator is not isotropic");
  return kernel;
}

std::string to_string(PurityVerdict v) {
  switch (v) {
    case PurityVerdict::Zero: return "zero";
    case PurityVerdict::Pure: return "pure";
    case PurityVerdict::NotPure: return "not-pure";
  }
  return "not-pure";
}

PurityResult is_pure(const SpinVector& x) {
  if (x.is_zero()) return {PurityVerdict::Zero, 0, std::nullopt};
  const Matrix ann = annihilator(x);
  PurityResult r{PurityVerdict::NotPure, ann.rows(), std::nullopt};
  if (ann.rows() == static_cast<std::size_t>(x.level())) {
    r.verdict = PurityVerdict::Pure;
    r.subspace = check_isotropic(x.level(), ann);
  }
  return r;
}

int orbit_word_length(int n) { return n * n + 4; }

namespace {

// Spin(V_1) has no root vectors, so its orbits through ω_0 and ω_1 are the base lines.
GroupElement orbit_sampler(int n, std::uint64_t seed) {
  return n < 2 ? GroupElement(n) : random_group_element(n, seed, orbit_word_length(n));
}

}  // namespace

SpinVector sample_cone_point(int n, std::uint64_t seed, Parity parity) {
  if (parity == Parity::Mixed) throw std::invalid_argument("cone points have a definite parity");
  const bool omega0_odd = n % 2 == 1;
  const bool want_odd = parity == Parity::Odd;
  const SpinVector base = omega0_odd == want_odd ? SpinVector::omega0(n) : SpinVector::omega1(n);
  return orbit_sampler(n, seed).apply(base);
}

IsotropicSubspace random_maximal_isotropic(int n, std::uint64_t seed) {
  const Matrix g = orbit_sampler(n, seed).so_image();
  Matrix rows(0, static_cast<std::size_t>(2 * n));
  for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c)
    rows.append_row(matrix_column(g, n, c).coords());
  return check_isotropic(n, rows);
}

std::vector<IsotropicSubspace> coordinate_subspaces(int n) {
  std::vector<IsotropicSubspace> out;
  for (Mask a = 0; a <= full_mask(n); ++a) {
    Matrix rows(0, static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i)
      rows.append_row(VectorInV::basis(n, contains(a, i) ? e_sym(i) : f_sym(i)).coords());
    out.push_back(check_isotropic(n, rows));
    if (a == full_mask(n)) break;
  }
  return out;
}

HyperbolicFrame make_frame(int n, const Matrix& to_standard) {
  if (!is_isometry(to_standard, n)) throw std::logic_error("frame is not a hyperbolic basis");
  auto inv = inverse(to_standard);
  return HyperbolicFrame{n, to_standard, *inv};
}

HyperbolicFrame frame_for_pair(const VectorInV& e, const VectorInV& h) {
  const int n = e.level();
  if (n < 1) throw std::invalid_argument("frame needs n >= 1");
  if (sgn(quadratic(e)) != 0 || sgn(quadratic(h)) != 0 || bilinear(e, h) != 1)
    throw std::invalid_argument("frame_for_pair needs a hyperbolic pair");
  if (h.has_e_part()) throw std::invalid_argument("frame_for_pair needs h in F");
  int p = n;
  while (p >= 1 && sgn(h.f(p)) == 0) --p;

  std::vector<VectorInV> fs;
  for (int i = 1; i <= n; ++i)
    if (i != p) fs.push_back(VectorInV::basis(n, f_sym(i)) - e.e(i) * h);
  fs.push_back(h);

  const std::size_t un = static_cast<std::size_t>(n);
  Matrix fm(un, un);
  for (std::size_t a = 0; a < un; ++a)
    for (int j = 1; j <= n; ++j) fm(a, static_cast<std::size_t>(j - 1)) = fs[a].f(j);
  const auto finv = inverse(fm);
  std::vector<VectorInV> eps;
  for (std::size_t a = 0; a < un; ++a) {
    VectorInV v(n);
    for (int j = 1; j <= n; ++j) v.e(j) = (*finv)(static_cast<std::size_t>(j - 1), a);
    eps.push_back(std::move(v));
  }
  const VectorInV phi = e - eps[un - 1];
  if (phi.has_e_part()) throw std::logic_error("frame_for_pair: dual basis mismatch");

  std::vector<VectorInV> cols;
  for (std::size_t a = 0; a + 1 < un; ++a) cols.push_back(eps[a] - bilinear(eps[a], phi) * h);
  cols.push_back(e);
  for (const auto& f : fs) cols.push_back(f);
  return make_frame(n, columns_matrix(cols));
}

HyperbolicFrame frame_with_last(const VectorInV& e) {
  const int n = e.level();
  if (e.is_zero() || sgn(quadratic(e)) != 0) throw std::invalid_argument("frame needs a nonzero isotropic vector");
  if (e.has_e_part()) {
    int p = n;
    while (sgn(e.e(p)) == 0) --p;
    VectorInV h = VectorInV::basis(n, f_sym(p));
    h = (1 / e.e(p)) * h;
    return frame_for_pair(e, h);
  }
  const Matrix s = swap_matrix(n);
  const HyperbolicFrame swapped = frame_with_last(apply_matrix(s, e));
  return make_frame(n, s * swapped.to_standard);
}

HyperbolicFrame frame_with_last_pair(const VectorInV& e, const VectorInV& h) {
  const int n = e.level();
  if (sgn(quadratic(h)) != 0 || bilinear(e, h) != 1)
    throw std::invalid_argument("frame_with_last_pair needs a hyperbolic pair");
  const HyperbolicFrame base = frame_with_last(e);
  const VectorInV h0 = base.f(n);
  const Rational lambda = bilinear(h, h0);
  const VectorInV w = h - h0 - lambda * e;
  // Eichler transformation x ↦ x + (x|e)w − (x|w)e − ½q(w)(x|e)e fixes e and sends h0 to h.
  const Rational half_q = quadratic(w) / 2;
  const std::size_t dim = static_cast<std::size_t>(2 * n);
  Matrix eich(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const VectorInV x = matrix_column(Matrix::identity(dim), n, c);
    const Rational xe = bilinear(x, e);
    const VectorInV y = x + xe * w - bilinear(x, w) * e - (half_q * xe) * e;
    for (std::size_t r = 0; r < dim; ++r) eich(r, c) = y.coords()[r];
  }
  HyperbolicFrame frame = make_frame(n, eich * base.to_standard);
  if (!(frame.f(n) == h) || !(frame.e(n) == e)) throw std::logic_error("Eichler adjustment failed");
  return frame;
}

}  // namespace halfspin
