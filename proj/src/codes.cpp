// Copyright 2026 The stabrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabrank/codes.hpp"

#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "stabrank/builders.hpp"
#include "stabrank/chains.hpp"
#include "stabrank/dense.hpp"

namespace stabrank {

namespace {

std::vector<F2Vector> row_basis(const std::vector<F2Vector> &vectors, size_t n, std::vector<size_t> *pivots) {
  F2Matrix m = F2Matrix::from_rows(vectors, n);
  RrefResult r = rref(m);
  std::vector<F2Vector> out;
  for (size_t i = 0; i < r.rank; i++) out.push_back(r.matrix.row(i));
  if (pivots) *pivots = std::vector<size_t>(r.pivots.begin(), r.pivots.begin() + static_cast<long>(r.rank));
  return out;
}

/// sum over x in c + span(w) of e^{i pi |x|/4} |x>, times amp, if that is a stabilizer state.
std::optional<StabilizerState> phased_coset(const std::vector<F2Vector> &w_in, F2Vector c, double amp) {
  const size_t n = c.size();
  std::vector<size_t> piv;
  std::vector<F2Vector> w = row_basis(w_in, n, &piv);
  const size_t d = w.size();
  for (size_t j = 0; j < d; j++) {
    if (c.get(piv[j])) c ^= w[j];
  }
  const int wc = static_cast<int>(c.weight());
  std::vector<uint8_t> q4(size_t{1} << d);
  F2Vector x = c;
  uint64_t gray = 0;
  for (uint64_t i = 0; i < (uint64_t{1} << d); i++) {
    if (i > 0) {
      int b = std::countr_zero(i);
      x ^= w[b];
      gray ^= uint64_t{1} << b;
    }
    int rel = ((static_cast<int>(x.weight()) - wc) % 8 + 8) % 8;
    if (rel % 2) return std::nullopt;
    q4[gray] = static_cast<uint8_t>(rel / 2);
  }
  std::vector<int> l(d);
  F2Matrix q(d, d);
  for (size_t j = 0; j < d; j++) {
    int v = q4[uint64_t{1} << j];
    l[j] = v & 1;
    q.set(j, j, ((v - l[j]) / 2) & 1);
  }
  for (size_t j = 0; j < d; j++) {
    for (size_t k = j + 1; k < d; k++) {
      int v = q4[(uint64_t{1} << j) | (uint64_t{1} << k)];
      int lin = l[j] ^ l[k];
      if ((v - lin) % 2) return std::nullopt;
      int bit = (((v - lin) / 2) - q.get(j, j) - q.get(k, k)) & 1;
      q.set(j, k, bit);
    }
  }
  for (uint64_t y = 0; y < (uint64_t{1} << d); y++) {
    int lin = 0;
    int quad = 0;
    for (size_t j = 0; j < d; j++) {
      if (!((y >> j) & 1)) continue;
      lin ^= l[j];
      for (size_t k = j; k < d; k++) {
        if (((y >> k) & 1) && q.get(j, k)) quad ^= 1;
      }
    }
    if ((lin + 2 * quad) % 4 != q4[y]) return std::nullopt;
  }
  AffineForm f;
  f.n = n;
  f.basis = w;
  f.offset = c;
  f.l = F2Vector(n);
  f.q_upper = F2Matrix(n, n);
  for (size_t j = 0; j < d; j++) {
    f.l.set(piv[j], l[j]);
    for (size_t k = j; k < d; k++) f.q_upper.set(piv[j], piv[k], q.get(j, k));
  }
  f.scalar = Scalar(wc % 8, 0, amp);
  return StabilizerState::from_affine_form(f);
}

/// Splits the phased sum over span(basis) into cosets of span(w); empty when some coset is
/// not a stabilizer state.
std::optional<Decomposition> coset_split(const std::vector<F2Vector> &w, const std::vector<F2Vector> &complement,
                                         size_t n, double amp) {
  Decomposition out(n);
  for (const F2Vector &rep : affine_space_members(complement, F2Vector(n))) {
    std::optional<StabilizerState> s = phased_coset(w, rep, amp);
    if (!s) return std::nullopt;
    out.add_term(Scalar::one(), std::move(*s));
  }
  return out;
}

Decomposition greedy_cosets(const std::vector<F2Vector> &basis, size_t n, double amp) {
  std::vector<bool> in_w(basis.size(), false);
  for (size_t i = 0; i < basis.size(); i++) {
    in_w[i] = true;
    std::vector<F2Vector> w, comp;
    for (size_t j = 0; j < basis.size(); j++) (in_w[j] ? w : comp).push_back(basis[j]);
    if (!coset_split(w, comp, n, amp)) in_w[i] = false;
  }
  std::vector<F2Vector> w, comp;
  for (size_t j = 0; j < basis.size(); j++) (in_w[j] ? w : comp).push_back(basis[j]);
  return *coset_split(w, comp, n, amp);
}

/// Two-coset split along some hyperplane of span(basis).
std::optional<Decomposition> hyperplane_split(const std::vector<F2Vector> &basis, size_t n, double amp) {
  const size_t dim = basis.size();
  for (uint64_t f = 1; f < (uint64_t{1} << dim); f++) {
    size_t pick = static_cast<size_t>(std::countr_zero(f));
    std::vector<F2Vector> w;
    for (size_t j = 0; j < dim; j++) {
      if (j == pick) continue;
      F2Vector v = basis[j];
      if ((f >> j) & 1) v ^= basis[pick];
      w.push_back(v);
    }
    if (auto d = coset_split(w, {basis[pick]}, n, amp)) return d;
  }
  return std::nullopt;
}

}  // namespace

LinearCode LinearCode::from_generator(const F2Matrix &g) {
  LinearCode c;
  c.m = g.cols();
  size_t r = rank(g);
  if (r == g.rows()) {
    c.G = g;
  } else {
    RrefResult rr = rref(g);
    c.G = F2Matrix(r, c.m);
    for (size_t i = 0; i < r; i++) c.G.set_row(i, rr.matrix.row(i));
  }
  c.k = r;
  return c;
}

LinearCode LinearCode::repetition(size_t m) {
  F2Matrix g(1, m);
  g.set_row(0, F2Vector::ones(m));
  return from_generator(g);
}

LinearCode LinearCode::zero(size_t m) { return from_generator(F2Matrix(0, m)); }

LinearCode LinearCode::full(size_t m) { return from_generator(F2Matrix::identity(m)); }

std::vector<F2Vector> LinearCode::basis() const {
  std::vector<F2Vector> out;
  for (size_t i = 0; i < k; i++) out.push_back(G.row(i));
  return out;
}

bool LinearCode::contains(const F2Vector &x) const {
  if (x.size() != m) return false;
  return solve(G.transpose(), x).has_value();
}

bool LinearCode::same_code(const LinearCode &other) const {
  if (m != other.m || k != other.k) return false;
  for (const F2Vector &b : other.basis()) {
    if (!contains(b)) return false;
  }
  return true;
}

LinearCode reed_muller(size_t a, size_t b) {
  if (a > b) throw std::invalid_argument("Reed-Muller code needs a <= b");
  if (b > 16) throw std::invalid_argument("Reed-Muller code with b > 16 is too long");
  const size_t m = size_t{1} << b;
  std::vector<F2Vector> rows;
  for (uint64_t mono = 0; mono < (uint64_t{1} << b); mono++) {
    if (static_cast<size_t>(std::popcount(mono)) > a) continue;
    F2Vector row(m);
    for (uint64_t p = 0; p < m; p++) {
      if ((p & mono) == mono) row.set(p, true);
    }
    rows.push_back(row);
  }
  return LinearCode::from_generator(F2Matrix::from_rows(rows, m));
}

LinearCode dual(const LinearCode &code) {
  std::vector<F2Vector> ker = kernel_basis(code.G);
  return LinearCode::from_generator(F2Matrix::from_rows(ker, code.m));
}

bool rm_stabilizer_condition(size_t a, size_t b) {
  if (a > b) throw std::invalid_argument("Reed-Muller code needs a <= b");
  if (a == b) return true;
  size_t r = b - a - 1;
  if (r == 0) return b >= 3;
  return (b + r - 1) / r >= 4;
}

Eigen::VectorXcd code_state_dense(const LinearCode &code, CodeStateMethod method, size_t cap) {
  dense::check_cap(code.m, cap);
  const Eigen::Index dim = Eigen::Index{1} << code.m;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  if (method == CodeStateMethod::MagicBasis) {
    for (const F2Vector &x : affine_space_members(code.basis(), F2Vector(code.m))) {
      v[static_cast<Eigen::Index>(x.to_word())] = 1.0;
    }
    Eigen::Matrix2cd basis_change;
    basis_change.col(0) = dense::t_state<double>();
    basis_change.col(1) = dense::t_perp_state<double>();
    for (size_t q = 0; q < code.m; q++) dense::apply_1q(v, basis_change, q);
    v *= std::pow(2.0, -0.5 * static_cast<double>(code.k));
  } else {
    LinearCode d = dual(code);
    const double amp = std::pow(2.0, 0.5 * (static_cast<double>(code.k) - static_cast<double>(code.m)));
    for (const F2Vector &x : affine_space_members(d.basis(), F2Vector(code.m))) {
      v[static_cast<Eigen::Index>(x.to_word())] = std::polar(amp, M_PI / 4 * static_cast<double>(x.weight() % 8));
    }
  }
  return v;
}

Decomposition code_state_decomposition(const LinearCode &code, CodeDecompositionInfo *info) {
  const size_t n = code.m;
  const double amp = std::pow(2.0, 0.5 * (static_cast<double>(code.k) - static_cast<double>(n)));
  std::vector<F2Vector> dual_basis = dual(code).basis();

  std::string method = "cosets";
  Decomposition best = greedy_cosets(dual_basis, n, amp);
  if (best.size() == 1) {
    method = "stabilizer";
  }
  if (best.size() > 2 && n == 8 && code.same_code(dual(code)) && code.contains(F2Vector::ones(n))) {
    // Self-dual [8,4] codes have weights 0, 4, 8: 2(|0^8> + |1^8>) - sum_{x in L} |x>.
    bool weights_ok = true;
    for (const F2Vector &x : affine_space_members(dual_basis, F2Vector(n))) {
      size_t w = x.weight();
      if (w != 0 && w != 4 && w != 8) weights_ok = false;
    }
    if (weights_ok) {
      Decomposition d(n);
      StabilizerState ghz = ghz_state(n, 0);
      d.add_term(Scalar(0, 0, 2 * amp), ghz);
      d.add_term(Scalar(4, 0, amp), StabilizerState::affine(dual_basis, F2Vector(n)));
      best = std::move(d);
      method = "self-dual [8,4]";
    }
  }
  if (best.size() > 2 && dual_basis.size() <= 8) {
    if (auto d = hyperplane_split(dual_basis, n, amp)) {
      best = std::move(*d);
      method = "hyperplane";
    }
  }
  if (code.k == 1 && code.contains(F2Vector::ones(n)) && n >= 2) {
    CatPlan plan = plan_cat(MagicSpec::t(), n);
    if (plan.predicted_terms < best.size()) {
      best = execute_cat_plan(plan);
      method = "cat";
    }
  }
  if (info) {
    info->method = method;
    info->terms = best.size();
  }
  return best;
}

PrefixContraction contract_T_prefix(const LinearCode &code, size_t cap) {
  PrefixContraction out;
  RrefResult r = rref(code.G);
  std::vector<bool> is_pivot(code.m, false);
  for (size_t i = 0; i < r.rank; i++) {
    out.permutation.push_back(r.pivots[i]);
    is_pivot[r.pivots[i]] = true;
  }
  for (size_t q = 0; q < code.m; q++) {
    if (!is_pivot[q]) out.permutation.push_back(q);
  }
  Eigen::VectorXcd v = dense::permute(code_state_dense(code, CodeStateMethod::MagicBasis, cap), out.permutation);
  Eigen::Matrix2cd bra = Eigen::Matrix2cd::Zero();
  bra.row(0) = dense::t_state<double>().adjoint();
  for (size_t q = 0; q < code.k; q++) dense::apply_1q(v, bra, q);
  for (size_t q = code.k; q-- > 0;) v = dense::postselect(v, q, false);
  Eigen::VectorXcd t = dense::tensor_power(dense::t_state<double>(), code.m - code.k, cap);
  out.constant = t.dot(v);
  out.residual = (v - out.constant * t).norm();
  out.proportional = std::abs(out.constant) > 1e-12 && out.residual <= 1e-10 * std::max(1.0, v.norm());
  return out;
}

double theorem5_bound(const LinearCode &code, double chi_upper) {
  if (2 * code.k >= code.m) {
    throw std::invalid_argument("bound requires dimension k < m/2 (k = " + std::to_string(code.k) +
                                ", m = " + std::to_string(code.m) + ")");
  }
  if (!(chi_upper >= 1.0)) {
    throw std::invalid_argument("stabilizer rank bound must be at least 1");
  }
  return std::log2(chi_upper) / static_cast<double>(code.m - 2 * code.k);
}

}  // namespace stabrank
