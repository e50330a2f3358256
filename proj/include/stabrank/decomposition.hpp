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

#ifndef STABRANK_DECOMPOSITION_HPP
#define STABRANK_DECOMPOSITION_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "stabrank/stabilizer_state.hpp"

namespace stabrank {

struct Term {
  Scalar coeff;
  StabilizerState state;
};

/// Unnormalized vector sum_i coeff_i |state_i>. Zero terms are dropped on insertion.
class Decomposition {
 public:
  Decomposition() = default;
  explicit Decomposition(size_t n) : n_(n) {}
  static Decomposition single(StabilizerState s, Scalar c = Scalar::one());

  size_t num_qubits() const { return n_; }
  size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<Term> &terms() const { return terms_; }
  const Term &operator[](size_t i) const { return terms_[i]; }

  void add_term(Scalar c, StabilizerState s);
  void append(const Decomposition &other);
  void reserve(size_t k) { terms_.reserve(k); }
  void scale(const Scalar &c);
  void apply(const Gate &g);
  void apply(const std::vector<Gate> &gates);
  /// Drops terms whose weight |coeff|^2 * |state|^2 is at most tol^2.
  void prune(double tol = 0.0);

 private:
  size_t n_ = 0;
  std::vector<Term> terms_;
};

Decomposition tensor(const Decomposition &a, const Decomposition &b);
Decomposition operator+(const Decomposition &a, const Decomposition &b);
Decomposition scaled(Decomposition d, const Scalar &c);
Decomposition apply_gates(Decomposition d, const std::vector<Gate> &gates);
Decomposition postselect(const Decomposition &d, size_t qubit, bool bit);
Decomposition conjugate(const Decomposition &d);
Decomposition permute_qubits(const Decomposition &d, const std::vector<size_t> &perm);

/// Applies <bra| to the listed qubits (bra qubit i sits on qubits[i]) and removes them,
/// higher indices first. Terms are ordered bra-major.
Decomposition contract_bra(const Decomposition &d, const Decomposition &bra, const std::vector<size_t> &qubits);
Decomposition contract_bra_cat2(const Decomposition &d, size_t qubit_a, size_t qubit_b);

/// Fused form of contract_bra(tensor(structure, kets...), bra, qubits) that never materializes
/// the tensor product.
Decomposition tensor_contract(const Decomposition &structure, const std::vector<const Decomposition *> &kets,
                              const Decomposition &bra, const std::vector<size_t> &qubits);

/// One single-qubit operator term: coeff * (gates applied in order).
struct LocalTerm {
  Scalar coeff;
  std::vector<GateKind> gates;
};

/// (sum_t coeff_t U_t on `qubit`) applied to d; terms ordered operator-major.
Decomposition apply_local_sum(const Decomposition &d, size_t qubit, const std::vector<LocalTerm> &op);

/// |T>^m from a decomposition of |cat_m>: 2^{-1/2}(d + A_0 d).
Decomposition cat_to_T(const Decomposition &d);

Eigen::VectorXcd to_dense(const Decomposition &d, size_t cap = kDefaultDenseCap);
cplx amplitude(const Decomposition &d, const F2Vector &x);
/// |<ref|d>| / (|ref| |d|); throws on a zero vector.
double fidelity_vs_dense(const Decomposition &d, const Eigen::VectorXcd &reference, size_t cap = kDefaultDenseCap);

/// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(cplx v);
  cplx value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void step(double &sum, double &comp, double v);
  double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

}  // namespace stabrank

#endif
