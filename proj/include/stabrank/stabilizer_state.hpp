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

#ifndef STABRANK_STABILIZER_STATE_HPP
#define STABRANK_STABILIZER_STATE_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "stabrank/f2.hpp"
#include "stabrank/gate.hpp"
#include "stabrank/scalar.hpp"

namespace stabrank {

inline constexpr size_t kDefaultDenseCap = 24;

/// Affine form in computational-basis coordinates.
/// Amplitude at x = offset + sum_j y_j basis[j] is scalar * i^{l.x} * (-1)^{q(x)}, where
/// basis is in reduced row echelon form, offset vanishes on pivot columns, and l, q are
/// supported on pivot columns. q(x) = sum_{i<=j} q_upper(i,j) x_i x_j.
struct AffineForm {
  size_t n = 0;
  bool is_zero = false;
  std::vector<F2Vector> basis;
  F2Vector offset;
  F2Vector l;
  F2Matrix q_upper;
  Scalar scalar;
};

/// Unnormalized stabilizer state
///   |s> = scalar * sum_{y in F2^d} i^{(l.y mod 2)} (-1)^{q(y)} |h + G^T y>
/// with G a d x n matrix of full row rank. The matrix is stored transposed (row a holds the
/// variables that drive qubit a). Gate members mutate in place; the free functions below
/// return new values.
class StabilizerState {
 public:
  StabilizerState() = default;
  /// |0...0> on n qubits.
  explicit StabilizerState(size_t n);
  static StabilizerState zero_state(size_t n);
  static StabilizerState basis_state(const F2Vector &x);
  /// Uniform superposition over an affine space, scalar 1 per amplitude.
  static StabilizerState affine(const std::vector<F2Vector> &basis, const F2Vector &offset);
  static StabilizerState from_affine_form(const AffineForm &form);

  size_t num_qubits() const { return n_; }
  size_t dim() const { return d_; }
  bool is_zero() const { return zero_; }
  const Scalar &scalar() const { return scalar_; }
  void scale(const Scalar &s);

  void apply_h(size_t a);
  void apply_s(size_t a);
  void apply_sdg(size_t a);
  void apply_x(size_t a);
  void apply_y(size_t a);
  void apply_z(size_t a);
  void apply_cx(size_t control, size_t target);
  void apply_cz(size_t a, size_t b);
  void apply_a(size_t a);
  void apply_adg(size_t a);
  /// Clifford gates only; throws std::invalid_argument for T, T^dag and RZ.
  void apply(const Gate &g);
  void apply(const std::vector<Gate> &gates);

  /// Projects qubit q onto |bit> and removes it; the result may be the zero state.
  void postselect_in_place(size_t q, bool bit);
  void conjugate_in_place();
  /// New qubit i is old qubit perm[i].
  void permute_in_place(const std::vector<size_t> &perm);

  cplx amplitude(const F2Vector &x) const;
  /// Exact amplitude: zero scalar when x lies outside the support.
  Scalar amplitude_exact(const F2Vector &x) const;
  double squared_norm() const;
  Eigen::VectorXcd to_dense(size_t cap = kDefaultDenseCap) const;

  /// Reduces the variable basis to the canonical shape (pivot qubit per variable, h zero on pivots).
  void canonicalize();
  AffineForm affine_form() const;

  /// Clifford gates U and scalar lambda with |s> = lambda * U |0^n>. Requires a nonzero state.
  std::vector<Gate> preparation_circuit(Scalar *lambda) const;

  friend StabilizerState tensor(const StabilizerState &a, const StabilizerState &b);

  /// Exact structural equality (same variables, phases and scalar); callers canonicalize first.
  bool same_representation(const StabilizerState &o) const;

 private:
  void check_qubit(size_t a) const;
  size_t add_variable();
  void remove_variable(size_t j);
  // y_j -> y_j + y_k in the phase function (G row k picks up row j).
  void substitute_add(size_t j, size_t k);
  // y_j -> y_j + 1 in the phase function and h ^= g_j.
  void shift_variable(size_t j);
  // Multiplies amplitudes by i^{(c + v.y) mod 2}.
  void mul_i_affine(bool c, const F2Vector &v);
  // Multiplies amplitudes by (-1)^{c + v.y}.
  void mul_sign_affine(bool c, const F2Vector &v);
  // Adds (u.y)(v.y) to q.
  void add_quadratic_product(const F2Vector &u, const F2Vector &v);
  // Makes qubit a depend on the single variable returned; h_a becomes 0.
  size_t isolate_qubit(size_t a);
  void set_zero();

  size_t n_ = 0;
  size_t d_ = 0;
  bool zero_ = false;
  F2Matrix gt_;  // n x d
  F2Vector h_;   // n
  F2Vector l_;   // d
  F2Matrix m_;   // d x d symmetric, diagonal = linear part of q
  Scalar scalar_;
};

StabilizerState basis_state(const F2Vector &x);
StabilizerState apply_gate(StabilizerState s, const Gate &g);
StabilizerState apply_gates(StabilizerState s, const std::vector<Gate> &gates);
StabilizerState postselect(StabilizerState s, size_t q, bool bit);
StabilizerState tensor(const StabilizerState &a, const StabilizerState &b);
StabilizerState conjugate(StabilizerState s);
StabilizerState permute_qubits(StabilizerState s, const std::vector<size_t> &perm);
cplx amplitude(const StabilizerState &s, const F2Vector &x);
Eigen::VectorXcd to_dense(const StabilizerState &s, size_t cap = kDefaultDenseCap);
/// <a|b> computed exactly through a preparation circuit for a.
cplx inner_product(const StabilizerState &a, const StabilizerState &b);

}  // namespace stabrank

#endif
