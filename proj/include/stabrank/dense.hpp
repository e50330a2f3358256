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

#ifndef STABRANK_DENSE_HPP
#define STABRANK_DENSE_HPP

// Brute-force statevector reference. Qubit i is bit i of the basis index.
// Shares only gate names with the stabilizer code.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabrank/gate.hpp"

namespace stabrank::dense {

template <typename Real>
using Vec = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using Mat2 = Eigen::Matrix<std::complex<Real>, 2, 2>;

inline void check_cap(size_t n, size_t cap) {
  if (n > cap) {
    throw std::length_error("dense vector on " + std::to_string(n) + " qubits exceeds cap " + std::to_string(cap));
  }
}

template <typename Real = double>
Vec<Real> zero_ket(size_t n, size_t cap = 24) {
  check_cap(n, cap);
  Vec<Real> v = Vec<Real>::Zero(Eigen::Index{1} << n);
  v[0] = 1;
  return v;
}

template <typename Real = double>
Vec<Real> basis_ket(size_t n, uint64_t index, size_t cap = 24) {
  check_cap(n, cap);
  Vec<Real> v = Vec<Real>::Zero(Eigen::Index{1} << n);
  v[static_cast<Eigen::Index>(index)] = 1;
  return v;
}

template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
  using S = typename DerivedA::Scalar;
  // Qubits of `a` come first, so a's index occupies the low bits.
  Eigen::Matrix<S, Eigen::Dynamic, 1> out(a.size() * b.size());
  for (Eigen::Index j = 0; j < b.size(); j++) {
    out.segment(j * a.size(), a.size()) = a * b[j];
  }
  return out;
}

template <typename Real = double>
Vec<Real> tensor_power(const Vec<Real> &psi, size_t m, size_t cap = 24) {
  check_cap(m * static_cast<size_t>(std::log2(psi.size())), cap);
  Vec<Real> out = Vec<Real>::Ones(1);
  for (size_t i = 0; i < m; i++) {
    out = kron(out, psi);
  }
  return out;
}

template <typename Real = double>
Vec<Real> qubit(std::complex<Real> a, std::complex<Real> b) {
  Vec<Real> v(2);
  v << a, b;
  return v;
}

template <typename Real = double>
Vec<Real> t_state() {
  const Real s = 1 / std::sqrt(Real(2));
  return qubit<Real>(s, std::polar(s, Real(M_PI) / 4));
}

template <typename Real = double>
Vec<Real> t_perp_state() {
  const Real s = 1 / std::sqrt(Real(2));
  return qubit<Real>(s, -std::polar(s, Real(M_PI) / 4));
}

template <typename Real = double>
Real f_beta() {
  return std::acos(1 / std::sqrt(Real(3))) / 2;
}

template <typename Real = double>
Vec<Real> f_state() {
  Real b = f_beta<Real>();
  return qubit<Real>(std::cos(b), std::polar(std::sin(b), Real(M_PI) / 4));
}

template <typename Real = double>
Vec<Real> f_perp_state() {
  Real b = f_beta<Real>();
  return qubit<Real>(std::sin(b), -std::polar(std::cos(b), Real(M_PI) / 4));
}

template <typename Real = double>
Vec<Real> r_state(Real theta) {
  const Real s = 1 / std::sqrt(Real(2));
  return qubit<Real>(s, std::polar(s, theta));
}

template <typename Real = double>
Vec<Real> r_perp_state(Real theta) {
  const Real s = 1 / std::sqrt(Real(2));
  return qubit<Real>(s, -std::polar(s, theta));
}

/// 2^{-1/2}(|psi>^m + |perp>^m).
template <typename Real = double>
Vec<Real> cat_state(const Vec<Real> &psi, const Vec<Real> &perp, size_t m, size_t cap = 24) {
  return (tensor_power(psi, m, cap) + tensor_power(perp, m, cap)) / std::sqrt(Real(2));
}

template <typename Real = double>
Vec<Real> cat_t(size_t m, size_t cap = 24) {
  return cat_state<Real>(t_state<Real>(), t_perp_state<Real>(), m, cap);
}

template <typename Real = double>
Vec<Real> cat_f(size_t m, size_t cap = 24) {
  return cat_state<Real>(f_state<Real>(), f_perp_state<Real>(), m, cap);
}

template <typename Real = double>
Vec<Real> cat_r(Real theta, size_t m, size_t cap = 24) {
  return cat_state<Real>(r_state<Real>(theta), r_perp_state<Real>(theta), m, cap);
}

template <typename Real = double>
Mat2<Real> gate_matrix(GateKind k, Real angle = 0) {
  using C = std::complex<Real>;
  const Real s = 1 / std::sqrt(Real(2));
  const C i(0, 1);
  Mat2<Real> m;
  switch (k) {
    case GateKind::H:
      m << s, s, s, -s;
      break;
    case GateKind::S:
      m << 1, 0, 0, i;
      break;
    case GateKind::Sdg:
      m << 1, 0, 0, -i;
      break;
    case GateKind::X:
      m << 0, 1, 1, 0;
      break;
    case GateKind::Y:
      m << 0, -i, i, 0;
      break;
    case GateKind::Z:
      m << 1, 0, 0, -1;
      break;
    case GateKind::T:
      m << 1, 0, 0, std::polar(Real(1), Real(M_PI) / 4);
      break;
    case GateKind::Tdg:
      m << 1, 0, 0, std::polar(Real(1), -Real(M_PI) / 4);
      break;
    case GateKind::RZ:
      m << 1, 0, 0, std::polar(Real(1), angle);
      break;
    case GateKind::A: {
      // e^{-i pi/4} S X
      C w = std::polar(Real(1), -Real(M_PI) / 4);
      m << 0, w, w * i, 0;
      break;
    }
    case GateKind::Adg: {
      C w = std::polar(Real(1), Real(M_PI) / 4);
      m << 0, -w * i, w, 0;
      break;
    }
    default:
      throw std::invalid_argument("not a single-qubit gate");
  }
  return m;
}

template <typename Real>
void apply_1q(Vec<Real> &v, const Mat2<Real> &u, size_t q) {
  const Eigen::Index bit = Eigen::Index{1} << q;
  for (Eigen::Index i = 0; i < v.size(); i++) {
    if (i & bit) {
      continue;
    }
    std::complex<Real> a = v[i];
    std::complex<Real> b = v[i | bit];
    v[i] = u(0, 0) * a + u(0, 1) * b;
    v[i | bit] = u(1, 0) * a + u(1, 1) * b;
  }
}

template <typename Real>
void apply_gate(Vec<Real> &v, const Gate &g) {
  const Eigen::Index b0 = Eigen::Index{1} << g.q0;
  const Eigen::Index b1 = Eigen::Index{1} << g.q1;
  if (g.q0 >= 63 || (Eigen::Index{1} << g.q0) >= v.size() ||
      (is_two_qubit(g.kind) && (g.q1 >= 63 || b1 >= v.size() || g.q0 == g.q1))) {
    throw std::out_of_range("gate qubit out of range");
  }
  switch (g.kind) {
    case GateKind::CX:
      for (Eigen::Index i = 0; i < v.size(); i++) {
        if ((i & b0) && !(i & b1)) {
          std::swap(v[i], v[i | b1]);
        }
      }
      break;
    case GateKind::CZ:
      for (Eigen::Index i = 0; i < v.size(); i++) {
        if ((i & b0) && (i & b1)) {
          v[i] = -v[i];
        }
      }
      break;
    default:
      apply_1q(v, gate_matrix<Real>(g.kind, static_cast<Real>(g.angle)), g.q0);
  }
}

template <typename Real>
Vec<Real> apply_gates(Vec<Real> v, const std::vector<Gate> &gates) {
  for (const Gate &g : gates) {
    apply_gate(v, g);
  }
  return v;
}

/// (<bit|_q (x) I) v, removing qubit q.
template <typename Real>
Vec<Real> postselect(const Vec<Real> &v, size_t q, bool bit) {
  Vec<Real> out(v.size() / 2);
  const Eigen::Index low = (Eigen::Index{1} << q) - 1;
  for (Eigen::Index j = 0; j < out.size(); j++) {
    Eigen::Index i = (j & low) | ((j & ~low) << 1) | (bit ? (Eigen::Index{1} << q) : 0);
    out[j] = v[i];
  }
  return out;
}

/// New qubit i is old qubit perm[i].
template <typename Real>
Vec<Real> permute(const Vec<Real> &v, const std::vector<size_t> &perm) {
  Vec<Real> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); i++) {
    Eigen::Index j = 0;
    for (size_t q = 0; q < perm.size(); q++) {
      if ((i >> perm[q]) & 1) {
        j |= Eigen::Index{1} << q;
      }
    }
    out[j] = v[i];
  }
  return out;
}

/// |<a|b>| / (|a| |b|)
template <typename DerivedA, typename DerivedB>
double fidelity(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
  double na = a.norm();
  double nb = b.norm();
  if (na == 0 || nb == 0) {
    throw std::invalid_argument("fidelity of a zero vector");
  }
  return std::abs(a.dot(b)) / (na * nb);
}

/// Pauli X(x)Z(z) times i^{popcount(x & z)}, applied to v.
template <typename Real>
Vec<Real> apply_pauli(const Vec<Real> &v, uint64_t x, uint64_t z) {
  Vec<Real> out(v.size());
  int xz = __builtin_popcountll(x & z) & 3;
  const std::complex<Real> ph[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (Eigen::Index j = 0; j < v.size(); j++) {
    int sign = __builtin_popcountll(static_cast<uint64_t>(j) & z) & 1;
    out[static_cast<Eigen::Index>(static_cast<uint64_t>(j) ^ x)] = ph[xz] * (sign ? Real(-1) : Real(1)) * v[j];
  }
  return out;
}

/// <v|P|v> / <v|v>
template <typename Real>
std::complex<Real> pauli_expectation(const Vec<Real> &v, uint64_t x, uint64_t z) {
  return v.dot(apply_pauli(v, x, z)) / v.squaredNorm();
}

}  // namespace stabrank::dense

#endif
