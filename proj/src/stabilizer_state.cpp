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

#include "stabrank/stabilizer_state.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stabrank {

StabilizerState::StabilizerState(size_t n) : n_(n), d_(0), gt_(n, 0), h_(n), l_(0), m_(0, 0) {}

StabilizerState StabilizerState::zero_state(size_t n) {
  StabilizerState s(n);
  s.set_zero();
  return s;
}

StabilizerState StabilizerState::basis_state(const F2Vector &x) {
  StabilizerState s(x.size());
  s.h_ = x;
  return s;
}

StabilizerState StabilizerState::affine(const std::vector<F2Vector> &basis, const F2Vector &offset) {
  if (!is_independent(basis, offset.size())) {
    throw std::invalid_argument("affine basis must be linearly independent");
  }
  StabilizerState s = basis_state(offset);
  for (const F2Vector &b : basis) {
    size_t j = s.add_variable();
    for (size_t a = 0; a < s.n_; a++) {
      if (b.get(a)) {
        s.gt_.set(a, j, true);
      }
    }
  }
  return s;
}

StabilizerState StabilizerState::from_affine_form(const AffineForm &form) {
  if (form.is_zero) {
    return zero_state(form.n);
  }
  if (form.offset.size() != form.n || form.l.size() != form.n || form.q_upper.rows() != form.n ||
      form.q_upper.cols() != form.n) {
    throw std::invalid_argument("affine form fields have inconsistent sizes");
  }
  StabilizerState s = affine(form.basis, form.offset);
  s.scalar_ = form.scalar;
  for (size_t a = 0; a < form.n; a++) {
    if (form.l.get(a)) {
      s.apply_s(a);
    }
  }
  // i^{sum_a l_a x_a} differs from i^{(l.x) mod 2} by (-1)^{sum_{a<b} l_a l_b x_a x_b}.
  for (size_t a = 0; a < form.n; a++) {
    for (size_t b = a + 1; b < form.n; b++) {
      if (form.l.get(a) && form.l.get(b)) {
        s.apply_cz(a, b);
      }
    }
  }
  for (size_t a = 0; a < form.n; a++) {
    if (form.q_upper.get(a, a)) {
      s.apply_z(a);
    }
    for (size_t b = a + 1; b < form.n; b++) {
      if (form.q_upper.get(a, b)) {
        s.apply_cz(a, b);
      }
    }
  }
  return s;
}

void StabilizerState::set_zero() {
  zero_ = true;
  d_ = 0;
  gt_ = F2Matrix(n_, 0);
  h_ = F2Vector(n_);
  l_ = F2Vector(0);
  m_ = F2Matrix(0, 0);
  scalar_ = Scalar::zero();
}

void StabilizerState::scale(const Scalar &s) {
  if (zero_) {
    return;
  }
  scalar_ *= s;
  if (scalar_.is_zero()) {
    set_zero();
  }
}

void StabilizerState::check_qubit(size_t a) const {
  if (a >= n_) {
    throw std::out_of_range("qubit index " + std::to_string(a) + " out of range for " + std::to_string(n_) +
                            " qubits");
  }
}

size_t StabilizerState::add_variable() {
  gt_.append_zero_col();
  m_.append_zero_col();
  m_.append_row(F2Vector(d_ + 1));
  l_.push_back(false);
  return d_++;
}

void StabilizerState::remove_variable(size_t j) {
  gt_.erase_col(j);
  m_.erase_row(j);
  m_.erase_col(j);
  l_.erase(j);
  d_--;
}

void StabilizerState::substitute_add(size_t j, size_t k) {
  if (l_.get(j)) {
    l_.flip(k);
  }
  const uint64_t *rj = m_.row_ptr(j);
  for (size_t w = 0; w < m_.words_per_row(); w++) {
    uint64_t bits = rj[w];
    while (bits) {
      size_t i = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      if (i != j && i != k) {
        m_.flip(k, i);
        m_.flip(i, k);
      }
    }
  }
  if (m_.get(j, j) != m_.get(j, k)) {
    m_.flip(k, k);
  }
  gt_.xor_col(k, j);
}

void StabilizerState::shift_variable(size_t j) {
  if (m_.get(j, j)) {
    scalar_.negate();
  }
  for (size_t i = 0; i < d_; i++) {
    if (i != j && m_.get(j, i)) {
      m_.flip(i, i);
    }
  }
  if (l_.get(j)) {
    scalar_.mul_i();
    for (size_t i = 0; i < d_; i++) {
      if (l_.get(i)) {
        m_.flip(i, i);
      }
    }
  }
  for (size_t a = 0; a < n_; a++) {
    if (gt_.get(a, j)) {
      h_.flip(a);
    }
  }
}

void StabilizerState::add_quadratic_product(const F2Vector &u, const F2Vector &v) {
  if (u.is_zero() || v.is_zero()) {
    return;
  }
  for (size_t i = u.first_one(); i < d_; i++) {
    if (u.get(i)) {
      uint64_t *r = m_.row_ptr(i);
      for (size_t w = 0; w < v.words().size(); w++) {
        r[w] ^= v.words()[w];
      }
    }
  }
  for (size_t i = v.first_one(); i < d_; i++) {
    if (v.get(i)) {
      uint64_t *r = m_.row_ptr(i);
      for (size_t w = 0; w < u.words().size(); w++) {
        r[w] ^= u.words()[w];
      }
      if (u.get(i)) {
        m_.flip(i, i);
      }
    }
  }
}

void StabilizerState::mul_sign_affine(bool c, const F2Vector &v) {
  if (c) {
    scalar_.negate();
  }
  for (size_t i = 0; i < d_; i++) {
    if (v.get(i)) {
      m_.flip(i, i);
    }
  }
}

void StabilizerState::mul_i_affine(bool c, const F2Vector &v) {
  if (c) {
    scalar_.mul_i();
    mul_sign_affine(false, v);
  }
  add_quadratic_product(l_, v);
  l_ ^= v;
}

size_t StabilizerState::isolate_qubit(size_t a) {
  size_t j = gt_.row_first_one(a);
  for (size_t k = gt_.row_first_one(a, j + 1); k < d_; k = gt_.row_first_one(a, k + 1)) {
    substitute_add(j, k);
  }
  if (h_.get(a)) {
    shift_variable(j);
  }
  return j;
}

void StabilizerState::apply_x(size_t a) {
  check_qubit(a);
  if (!zero_) {
    h_.flip(a);
  }
}

void StabilizerState::apply_z(size_t a) {
  check_qubit(a);
  if (!zero_) {
    mul_sign_affine(h_.get(a), gt_.row(a));
  }
}

void StabilizerState::apply_s(size_t a) {
  check_qubit(a);
  if (!zero_) {
    mul_i_affine(h_.get(a), gt_.row(a));
  }
}

void StabilizerState::apply_sdg(size_t a) {
  apply_s(a);
  apply_z(a);
}

void StabilizerState::apply_y(size_t a) {
  apply_z(a);
  apply_x(a);
  if (!zero_) {
    scalar_.mul_i();
  }
}

void StabilizerState::apply_a(size_t a) {
  apply_x(a);
  apply_s(a);
  if (!zero_) {
    scalar_.phase8 = (scalar_.phase8 + 7) & 7;
  }
}

void StabilizerState::apply_adg(size_t a) {
  apply_sdg(a);
  apply_x(a);
  if (!zero_) {
    scalar_.phase8 = (scalar_.phase8 + 1) & 7;
  }
}

void StabilizerState::apply_cx(size_t control, size_t target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) {
    throw std::invalid_argument("CX needs distinct qubits");
  }
  if (zero_) {
    return;
  }
  gt_.xor_row(target, control);
  if (h_.get(control)) {
    h_.flip(target);
  }
}

void StabilizerState::apply_cz(size_t a, size_t b) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) {
    throw std::invalid_argument("CZ needs distinct qubits");
  }
  if (zero_) {
    return;
  }
  F2Vector u = gt_.row(a);
  F2Vector v = gt_.row(b);
  bool ha = h_.get(a);
  bool hb = h_.get(b);
  if (ha && hb) {
    scalar_.negate();
  }
  if (ha) {
    mul_sign_affine(false, v);
  }
  if (hb) {
    mul_sign_affine(false, u);
  }
  add_quadratic_product(u, v);
}

void StabilizerState::apply_h(size_t a) {
  check_qubit(a);
  if (zero_) {
    return;
  }
  if (gt_.row_is_zero(a)) {
    size_t v = add_variable();
    gt_.set(a, v, true);
    m_.set(v, v, h_.get(a));
    h_.set(a, false);
    scalar_.sqrt2_exp -= 1;
    return;
  }
  size_t j = isolate_qubit(a);

  // Is g_j, away from qubit a, a combination of the other generators?
  F2Matrix others(n_, d_ - 1);
  F2Vector target(n_);
  for (size_t r = 0; r < n_; r++) {
    if (r == a) {
      continue;
    }
    for (size_t k = gt_.row_first_one(r); k < d_; k = gt_.row_first_one(r, k + 1)) {
      if (k == j) {
        target.set(r, true);
      } else {
        others.set(r, k < j ? k : k - 1, true);
      }
    }
  }
  std::optional<F2Vector> combo = target.is_zero() ? std::optional<F2Vector>(F2Vector(d_ - 1)) : solve(others, target);

  if (!combo) {
    size_t z = add_variable();
    gt_.set(a, j, false);
    gt_.set(a, z, true);
    m_.set(j, z, true);
    m_.set(z, j, true);
    scalar_.sqrt2_exp -= 1;
    return;
  }

  for (size_t t = 0; t < d_ - 1; t++) {
    if (combo->get(t)) {
      substitute_add(t < j ? t : t + 1, j);
    }
  }
  // Now g_j = e_a and y_j appears nowhere else in the support; sum it out.
  bool c0 = m_.get(j, j);
  F2Vector mu = m_.row(j);
  mu.set(j, false);
  if (!l_.get(j)) {
    for (size_t k = 0; k < d_; k++) {
      gt_.set(a, k, mu.get(k));
    }
    h_.set(a, c0);
    remove_variable(j);
    scalar_.sqrt2_exp += 1;
    return;
  }
  F2Vector nu = mu ^ l_;
  nu.set(j, true);
  l_.set(j, false);
  for (size_t k = 0; k < d_; k++) {
    m_.set(j, k, false);
    m_.set(k, j, false);
  }
  mul_i_affine(c0, nu);
  mul_sign_affine(c0, nu);
  scalar_.phase8 = (scalar_.phase8 + 1) & 7;
}

void StabilizerState::apply(const Gate &g) {
  switch (g.kind) {
    case GateKind::H:
      apply_h(g.q0);
      break;
    case GateKind::S:
      apply_s(g.q0);
      break;
    case GateKind::Sdg:
      apply_sdg(g.q0);
      break;
    case GateKind::X:
      apply_x(g.q0);
      break;
    case GateKind::Y:
      apply_y(g.q0);
      break;
    case GateKind::Z:
      apply_z(g.q0);
      break;
    case GateKind::CX:
      apply_cx(g.q0, g.q1);
      break;
    case GateKind::CZ:
      apply_cz(g.q0, g.q1);
      break;
    case GateKind::A:
      apply_a(g.q0);
      break;
    case GateKind::Adg:
      apply_adg(g.q0);
      break;
    default:
      throw std::invalid_argument("gate " + std::string(gate_name(g.kind)) + " is not a Clifford gate");
  }
}

void StabilizerState::apply(const std::vector<Gate> &gates) {
  for (const Gate &g : gates) {
    apply(g);
  }
}

void StabilizerState::postselect_in_place(size_t q, bool bit) {
  check_qubit(q);
  if (!zero_) {
    if (gt_.row_is_zero(q)) {
      if (h_.get(q) != bit) {
        n_--;
        set_zero();
        return;
      }
    } else {
      size_t j = isolate_qubit(q);
      if (bit) {
        shift_variable(j);
      }
      remove_variable(j);
    }
  }
  gt_.erase_row(q);
  h_.erase(q);
  n_--;
}

void StabilizerState::conjugate_in_place() {
  if (zero_) {
    return;
  }
  scalar_ = scalar_.conj();
  for (size_t i = 0; i < d_; i++) {
    if (l_.get(i)) {
      m_.flip(i, i);
    }
  }
}

void StabilizerState::permute_in_place(const std::vector<size_t> &perm) {
  if (perm.size() != n_) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<bool> seen(n_, false);
  for (size_t p : perm) {
    if (p >= n_ || seen[p]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[p] = true;
  }
  F2Matrix g(n_, d_);
  F2Vector h(n_);
  for (size_t i = 0; i < n_; i++) {
    g.set_row(i, gt_.row(perm[i]));
    h.set(i, h_.get(perm[i]));
  }
  gt_ = std::move(g);
  h_ = std::move(h);
}

namespace {

// Parity of q(y) for the symmetric matrix m (diagonal = linear part).
bool quadratic_value(const F2Matrix &m, const F2Vector &y) {
  size_t diag = 0;
  size_t total = 0;
  for (size_t i = y.first_one(); i < y.size(); i++) {
    if (!y.get(i)) {
      continue;
    }
    diag += m.get(i, i);
    const uint64_t *r = m.row_ptr(i);
    for (size_t w = 0; w < y.words().size(); w++) {
      total += std::popcount(r[w] & y.words()[w]);
    }
  }
  return ((diag + (total - diag) / 2) & 1) != 0;
}

}  // namespace

Scalar StabilizerState::amplitude_exact(const F2Vector &x) const {
  if (x.size() != n_) {
    throw std::invalid_argument("basis label length differs from qubit count");
  }
  if (zero_) {
    return Scalar::zero();
  }
  std::optional<F2Vector> y = solve(gt_, x ^ h_);
  if (!y) {
    return Scalar::zero();
  }
  Scalar s = scalar_;
  if (dot(l_, *y)) {
    s.mul_i();
  }
  if (quadratic_value(m_, *y)) {
    s.negate();
  }
  return s;
}

cplx StabilizerState::amplitude(const F2Vector &x) const { return amplitude_exact(x).value(); }

double StabilizerState::squared_norm() const {
  if (zero_) {
    return 0.0;
  }
  return scalar_.abs2() * std::ldexp(1.0, static_cast<int>(d_));
}

Eigen::VectorXcd StabilizerState::to_dense(size_t cap) const {
  if (n_ > cap || n_ >= 63) {
    throw std::length_error("dense export of " + std::to_string(n_) + " qubits exceeds cap " + std::to_string(cap));
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_);
  if (zero_) {
    return out;
  }
  std::vector<uint64_t> col(d_, 0);
  std::vector<uint64_t> mrow(d_, 0);
  for (size_t j = 0; j < d_; j++) {
    col[j] = gt_.col(j).to_word();
    mrow[j] = m_.row(j).to_word();
  }
  cplx base = scalar_.value();
  const cplx table[4] = {base, base * cplx(0, 1), -base, -base * cplx(0, 1)};
  uint64_t x = h_.to_word();
  uint64_t y = 0;
  int lp = 0;
  int qp = 0;
  uint64_t lword = l_.to_word();
  uint64_t count = uint64_t{1} << d_;
  out[static_cast<Eigen::Index>(x)] = table[0];
  for (uint64_t t = 1; t < count; t++) {
    size_t j = std::countr_zero(t);
    uint64_t bit = uint64_t{1} << j;
    x ^= col[j];
    lp ^= static_cast<int>((lword >> j) & 1);
    qp ^= static_cast<int>(((mrow[j] >> j) & 1) ^ (std::popcount(mrow[j] & y & ~bit) & 1));
    y ^= bit;
    out[static_cast<Eigen::Index>(x)] = table[lp + 2 * qp];
  }
  return out;
}

void StabilizerState::canonicalize() {
  if (zero_) {
    return;
  }
  std::vector<bool> used(d_, false);
  std::vector<size_t> pivot_of(d_, 0);
  size_t found = 0;
  for (size_t a = 0; a < n_ && found < d_; a++) {
    size_t j = d_;
    for (size_t k = gt_.row_first_one(a); k < d_; k = gt_.row_first_one(a, k + 1)) {
      if (!used[k]) {
        j = k;
        break;
      }
    }
    if (j == d_) {
      continue;
    }
    for (size_t k = gt_.row_first_one(a); k < d_; k = gt_.row_first_one(a, k + 1)) {
      if (k != j) {
        substitute_add(j, k);
      }
    }
    used[j] = true;
    pivot_of[j] = a;
    found++;
  }
  for (size_t j = 0; j < d_; j++) {
    if (h_.get(pivot_of[j])) {
      shift_variable(j);
    }
  }
  std::vector<size_t> order(d_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pivot_of[a] < pivot_of[b]; });
  F2Matrix g(n_, d_);
  F2Matrix m(d_, d_);
  F2Vector l(d_);
  for (size_t nj = 0; nj < d_; nj++) {
    size_t oj = order[nj];
    l.set(nj, l_.get(oj));
    for (size_t a = 0; a < n_; a++) {
      if (gt_.get(a, oj)) {
        g.set(a, nj, true);
      }
    }
    for (size_t nk = 0; nk < d_; nk++) {
      if (m_.get(oj, order[nk])) {
        m.set(nj, nk, true);
      }
    }
  }
  gt_ = std::move(g);
  m_ = std::move(m);
  l_ = std::move(l);
}

AffineForm StabilizerState::affine_form() const {
  AffineForm f;
  f.n = n_;
  f.is_zero = zero_;
  f.offset = F2Vector(n_);
  f.l = F2Vector(n_);
  f.q_upper = F2Matrix(n_, n_);
  if (zero_) {
    f.scalar = Scalar::zero();
    return f;
  }
  StabilizerState c = *this;
  c.canonicalize();
  std::vector<size_t> pivot(c.d_);
  for (size_t j = 0; j < c.d_; j++) {
    F2Vector g = c.gt_.col(j);
    pivot[j] = g.first_one();
    f.basis.push_back(std::move(g));
  }
  f.offset = c.h_;
  for (size_t j = 0; j < c.d_; j++) {
    f.l.set(pivot[j], c.l_.get(j));
    for (size_t k = j; k < c.d_; k++) {
      f.q_upper.set(pivot[j], pivot[k], c.m_.get(j, k));
    }
  }
  f.scalar = c.scalar_;
  return f;
}

std::vector<Gate> StabilizerState::preparation_circuit(Scalar *lambda) const {
  if (zero_) {
    throw std::invalid_argument("the zero vector has no preparation circuit");
  }
  StabilizerState c = *this;
  c.canonicalize();
  std::vector<size_t> pivot(c.d_);
  std::vector<bool> is_pivot(n_, false);
  for (size_t j = 0; j < c.d_; j++) {
    pivot[j] = c.gt_.col(j).first_one();
    is_pivot[pivot[j]] = true;
  }
  std::vector<Gate> gates;
  for (size_t j = 0; j < c.d_; j++) {
    gates.push_back({GateKind::H, pivot[j]});
  }
  for (size_t j = 0; j < c.d_; j++) {
    if (c.l_.get(j)) {
      gates.push_back({GateKind::S, pivot[j]});
    }
    if (c.m_.get(j, j)) {
      gates.push_back({GateKind::Z, pivot[j]});
    }
  }
  for (size_t j = 0; j < c.d_; j++) {
    for (size_t k = j + 1; k < c.d_; k++) {
      if (c.m_.get(j, k) != (c.l_.get(j) && c.l_.get(k))) {
        gates.push_back({GateKind::CZ, pivot[j], pivot[k]});
      }
    }
  }
  for (size_t a = 0; a < n_; a++) {
    if (is_pivot[a]) {
      continue;
    }
    for (size_t j = 0; j < c.d_; j++) {
      if (c.gt_.get(a, j)) {
        gates.push_back({GateKind::CX, pivot[j], a});
      }
    }
    if (c.h_.get(a)) {
      gates.push_back({GateKind::X, a});
    }
  }
  if (lambda) {
    *lambda = c.scalar_ * Scalar::sqrt2_pow(static_cast<int>(c.d_));
  }
  return gates;
}

bool StabilizerState::same_representation(const StabilizerState &o) const {
  if (n_ != o.n_ || zero_ != o.zero_) {
    return false;
  }
  if (zero_) {
    return true;
  }
  return d_ == o.d_ && gt_ == o.gt_ && h_ == o.h_ && l_ == o.l_ && m_ == o.m_;
}

StabilizerState tensor(const StabilizerState &a, const StabilizerState &b) {
  size_t n = a.n_ + b.n_;
  if (a.zero_ || b.zero_) {
    return StabilizerState::zero_state(n);
  }
  StabilizerState s(n);
  size_t d = a.d_ + b.d_;
  s.d_ = d;
  s.gt_ = F2Matrix(n, d);
  s.m_ = F2Matrix(d, d);
  s.l_ = a.l_.concat(b.l_);
  s.h_ = a.h_.concat(b.h_);
  for (size_t r = 0; r < a.n_; r++) {
    std::copy(a.gt_.row_ptr(r), a.gt_.row_ptr(r) + a.gt_.words_per_row(), s.gt_.row_ptr(r));
  }
  for (size_t r = 0; r < b.n_; r++) {
    for (size_t k = b.gt_.row_first_one(r); k < b.d_; k = b.gt_.row_first_one(r, k + 1)) {
      s.gt_.set(a.n_ + r, a.d_ + k, true);
    }
  }
  for (size_t r = 0; r < a.d_; r++) {
    std::copy(a.m_.row_ptr(r), a.m_.row_ptr(r) + a.m_.words_per_row(), s.m_.row_ptr(r));
  }
  for (size_t r = 0; r < b.d_; r++) {
    for (size_t k = b.m_.row_first_one(r); k < b.d_; k = b.m_.row_first_one(r, k + 1)) {
      s.m_.set(a.d_ + r, a.d_ + k, true);
    }
  }
  // i^{u} i^{v} = i^{u xor v} (-1)^{uv} for the two linear parts.
  for (size_t r = 0; r < a.d_; r++) {
    if (!a.l_.get(r)) {
      continue;
    }
    for (size_t k = 0; k < b.d_; k++) {
      if (b.l_.get(k)) {
        s.m_.flip(r, a.d_ + k);
        s.m_.flip(a.d_ + k, r);
      }
    }
  }
  s.scalar_ = a.scalar_ * b.scalar_;
  return s;
}

StabilizerState basis_state(const F2Vector &x) { return StabilizerState::basis_state(x); }

StabilizerState apply_gate(StabilizerState s, const Gate &g) {
  s.apply(g);
  return s;
}

StabilizerState apply_gates(StabilizerState s, const std::vector<Gate> &gates) {
  s.apply(gates);
  return s;
}

StabilizerState postselect(StabilizerState s, size_t q, bool bit) {
  s.postselect_in_place(q, bit);
  return s;
}

StabilizerState conjugate(StabilizerState s) {
  s.conjugate_in_place();
  return s;
}

StabilizerState permute_qubits(StabilizerState s, const std::vector<size_t> &perm) {
  s.permute_in_place(perm);
  return s;
}

cplx amplitude(const StabilizerState &s, const F2Vector &x) { return s.amplitude(x); }

Eigen::VectorXcd to_dense(const StabilizerState &s, size_t cap) { return s.to_dense(cap); }

cplx inner_product(const StabilizerState &a, const StabilizerState &b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("inner product of states with different qubit counts");
  }
  if (a.is_zero() || b.is_zero()) {
    return {0.0, 0.0};
  }
  Scalar lambda;
  std::vector<Gate> u = a.preparation_circuit(&lambda);
  StabilizerState t = apply_gates(b, inverse(u));
  return std::conj(lambda.value()) * t.amplitude(F2Vector(a.num_qubits()));
}

}  // namespace stabrank
